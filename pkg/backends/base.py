"""
maasscheck/backends/base.py

Abstract base class for class-number backends.
Each backend must implement the narrow_class_number() method.
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple, Type

logger = logging.getLogger(__name__)


class ClassNumberBackend(ABC):
    """
    Abstract base class for class-number backends.

    All backends must implement:
    - narrow_class_number(d, unit) -> int

    class_number() converts to the wide class number paired with the unit
    (u + v sqrt d)/2 in Dirichlet's formula: h = h+ when u^2 - d v^2 = -4,
    else h = h+/2.
    """

    # Override in subclasses
    name: str = "Base Backend"

    @abstractmethod
    def narrow_class_number(self, d: int, unit: Tuple[int, int]) -> int:
        """Number of proper equivalence classes of primitive forms of discriminant d."""

    def class_number(self, d: int, unit: Optional[Tuple[int, int]] = None) -> int:
        from arithdata import pqa_unit

        if unit is None:
            unit = pqa_unit(d)
        u, v = unit
        narrow = self.narrow_class_number(d, unit)
        if u * u - d * v * v == -4:
            return narrow
        if narrow % 2:
            raise ArithmeticError(
                f"[{self.name}] odd narrow class number {narrow} with a norm +1 unit for d={d}")
        return narrow // 2


# =============================================================================
# REGISTRY
# =============================================================================

_BACKEND_TYPES: Dict[str, Type[ClassNumberBackend]] = {}
_backends: Dict[str, ClassNumberBackend] = {}


def register_backend(key: str):
    """Decorator to register a backend class under key."""
    def decorator(cls):
        _BACKEND_TYPES[key] = cls
        return cls
    return decorator


def get_backend(key: str) -> ClassNumberBackend:
    """Get or create the backend instance registered under key."""
    if key not in _backends:
        if key not in _BACKEND_TYPES:
            raise ValueError(
                f"Unknown class-number backend: {key!r} "
                f"(available: {', '.join(sorted(_BACKEND_TYPES))})")
        _backends[key] = _BACKEND_TYPES[key]()
    return _backends[key]


def available_backends():
    return sorted(_BACKEND_TYPES)
