"""
maasscheck/formatters/csvdata.py

Plot data as CSV (header row from report.columns, e.g. `t,S`).
"""

import csv
import io

from flint import arb

from formatters.base import BaseFormatter, register_formatter
from models import CommandReport, ReportStyle

# digits for midpoints; plot data carries no certification
CSV_DIGITS = 15


@register_formatter(ReportStyle.CSV)
class CSVFormatter(BaseFormatter):

    style = ReportStyle.CSV

    @classmethod
    def cell(cls, value) -> str:
        if isinstance(value, arb):
            return value.mid().str(CSV_DIGITS, radius=False)
        return cls.render_value(value)

    def render(self, report: CommandReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([self.cell(v) for v in row])
        return buffer.getvalue()
