"""
maasscheck/formatters/keyvalue.py

Machine-readable summary, one key=value per line.

Balls are split into key.lo and key.hi so every endpoint used in a
conclusion is recoverable. Output contains no timestamps: the same inputs
give byte-identical summaries.
"""

from flint import arb

from formatters.base import BaseFormatter, register_formatter
from models import CommandReport, ReportStyle


@register_formatter(ReportStyle.KEYVALUE)
@register_formatter('kv')
class KeyValueFormatter(BaseFormatter):

    style = ReportStyle.KEYVALUE

    def render(self, report: CommandReport) -> str:
        lines = [f"command={report.command}", f"status={report.status}"]
        for key, value in self.flatten(report):
            key = key.replace(' ', '_')
            if isinstance(value, arb):
                lo, hi = self.endpoints(value)
                lines.append(f"{key}.lo={lo}")
                lines.append(f"{key}.hi={hi}")
            else:
                lines.append(f"{key}={self.render_value(value)}")
        if report.rows:
            lines.append(f"rows={len(report.rows)}")
        return "\n".join(lines) + "\n"
