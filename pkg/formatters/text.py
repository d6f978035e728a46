"""
maasscheck/formatters/text.py

Human-readable report layout.
"""

from formatters.base import BaseFormatter, register_formatter
from models import CommandReport, ReportStyle


@register_formatter(ReportStyle.TEXT)
@register_formatter('txt')
class TextFormatter(BaseFormatter):
    """
    Structured text:

        maasscheck bound-b: OK

        [bound]
          B        [0.27295580477197..., 0.27295580477197...]
    """

    style = ReportStyle.TEXT

    def render(self, report: CommandReport) -> str:
        lines = [f"maasscheck {report.command}: {report.status}"]
        for title, entries in report.sections.items():
            if not entries:
                continue
            lines.append("")
            lines.append(f"[{title}]")
            width = max(len(k) for k in entries)
            for key, value in entries.items():
                lines.append(f"  {key.ljust(width)}  {self.render_value(value)}")
        if report.rows:
            lines.append("")
            lines.append("  " + "  ".join(report.columns))
            for row in self.row_strings(report):
                lines.append("  " + "  ".join(row))
        return "\n".join(lines) + "\n"
