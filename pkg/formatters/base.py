"""
maasscheck/formatters/base.py

Base report formatter and style registry.
"""

from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, List, Tuple

from flint import arb

from models import CommandReport, ReportStyle
from rigor import format_ball, format_fraction, format_lower, format_upper


class BaseFormatter(ABC):
    """
    Abstract base class for report formatters.

    Each style turns a CommandReport into one string. Balls are always
    printed by their outward-rounded endpoints, so a reader never sees a
    value tighter than what was certified.
    """

    style: ReportStyle = ReportStyle.TEXT

    @abstractmethod
    def render(self, report: CommandReport) -> str:
        """Render the whole report."""
        pass

    # =========================================================================
    # VALUE RENDERING
    # =========================================================================

    @staticmethod
    def render_value(value: Any) -> str:
        if isinstance(value, arb):
            return format_ball(value)
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, Fraction):
            return format_fraction(value)
        if isinstance(value, Enum):
            return value.name if isinstance(value.value, int) else str(value.value)
        if isinstance(value, (list, tuple)):
            return '; '.join(BaseFormatter.render_value(v) for v in value)
        if value is None:
            return '-'
        return str(value)

    @staticmethod
    def endpoints(value: arb) -> Tuple[str, str]:
        return format_lower(value), format_upper(value)

    @staticmethod
    def flatten(report: CommandReport) -> Iterator[Tuple[str, Any]]:
        """(section.key, value) pairs in report order."""
        for title, entries in report.sections.items():
            for key, value in entries.items():
                yield f"{title}.{key}", value

    @staticmethod
    def row_strings(report: CommandReport) -> List[List[str]]:
        return [[BaseFormatter.render_value(v) for v in row] for row in report.rows]


# =============================================================================
# FORMATTER REGISTRY
# =============================================================================

_formatters = {}


def _key(style) -> str:
    if isinstance(style, ReportStyle):
        return style.value
    return str(style).lower().strip()


def register_formatter(style):
    """
    Decorator to register a formatter class under a style or alias:

        @register_formatter(ReportStyle.KEYVALUE)
        @register_formatter('kv')
        class KeyValueFormatter: ...
    """
    def decorator(cls):
        _formatters[_key(style)] = cls
        return cls
    return decorator


def get_formatter(style) -> BaseFormatter:
    """Formatter instance for a style; unknown styles fall back to text."""
    key = _key(style)
    formatter_cls = _formatters.get(key)
    if formatter_cls:
        return formatter_cls()

    # Partial match ('key-value', 'key_value', 'txt')
    compact = key.replace('-', '').replace('_', '').replace(' ', '')
    for registered_key, cls in _formatters.items():
        if registered_key.startswith(compact) or compact.startswith(registered_key):
            return cls()

    from formatters.text import TextFormatter
    return TextFormatter()


def render_report(report: CommandReport, style=ReportStyle.TEXT) -> str:
    """Render a report in the given style. Main public API."""
    return get_formatter(style).render(report)
