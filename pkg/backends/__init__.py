"""
maasscheck/backends/__init__.py

Class-number backends package.
"""

from backends.base import (
    ClassNumberBackend,
    register_backend,
    get_backend,
    available_backends,
)
from backends.bruteforce import BruteForceBackend, reduced_forms, form_cycles
from backends.analytic import AnalyticBackend, l_value_series

__all__ = [
    # Base
    'ClassNumberBackend',
    'register_backend',
    'get_backend',
    'available_backends',
    # Reduced-form cycles
    'BruteForceBackend',
    'reduced_forms',
    'form_cycles',
    # Character sums
    'AnalyticBackend',
    'l_value_series',
]
