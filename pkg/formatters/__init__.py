"""
maasscheck/formatters/__init__.py

Report formatters package.
"""

from formatters.base import (
    BaseFormatter,
    register_formatter,
    get_formatter,
    render_report,
)
from formatters.text import TextFormatter
from formatters.keyvalue import KeyValueFormatter
from formatters.csvdata import CSVFormatter

__all__ = [
    # Base
    'BaseFormatter',
    'register_formatter',
    'get_formatter',
    'render_report',
    # Styles
    'TextFormatter',
    'KeyValueFormatter',
    'CSVFormatter',
]
