from fractions import Fraction

from flint import arb

from formatters import (
    CSVFormatter, KeyValueFormatter, TextFormatter, get_formatter, render_report,
)
from formatters.base import BaseFormatter
from models import CommandReport, ReportStyle, TheoremRange, Verdict

THREE = '3.00000000000000000000'


def sample_report():
    report = CommandReport(command='bound-b')
    bound = report.section('bound')
    bound['B'] = arb(3)
    bound['zeros'] = 4
    report.section('parameters')['a'] = Fraction(1, 2)
    return report


def test_get_formatter_by_style_and_alias():
    assert isinstance(get_formatter(ReportStyle.TEXT), TextFormatter)
    assert isinstance(get_formatter('txt'), TextFormatter)
    assert isinstance(get_formatter('kv'), KeyValueFormatter)
    assert isinstance(get_formatter('key-value'), KeyValueFormatter)
    assert isinstance(get_formatter(ReportStyle.CSV), CSVFormatter)


def test_unknown_style_falls_back_to_text():
    assert isinstance(get_formatter('xml'), TextFormatter)


def test_render_value():
    render = BaseFormatter.render_value
    assert render(arb(3)) == f"[{THREE}, {THREE}]"
    assert render(True) == 'true'
    assert render(None) == '-'
    assert render(Fraction(7)) == '7'
    assert render(Fraction(1, 2)) == '0.50000000000000000000'
    assert render(Verdict.PASS) == 'PASS'
    assert render(TheoremRange.MEDIUM) == 'medium'
    assert render([1, 2]) == '1; 2'


def test_ball_endpoints_round_outward():
    lo, hi = BaseFormatter.endpoints(arb(1) / 3)
    assert lo.startswith('0.3333333333333333')
    assert lo < hi
    assert float(lo) <= 1 / 3 <= float(hi)


def test_text_layout():
    text = render_report(sample_report())
    lines = text.splitlines()
    assert lines[0] == 'maasscheck bound-b: OK'
    assert '[bound]' in lines
    assert f"  B      [{THREE}, {THREE}]" in lines
    assert '  zeros  4' in lines
    assert '  a  0.50000000000000000000' in lines


def test_keyvalue_layout():
    text = render_report(sample_report(), ReportStyle.KEYVALUE)
    lines = text.splitlines()
    assert lines[:2] == ['command=bound-b', 'status=OK']
    assert f"bound.B.lo={THREE}" in lines
    assert f"bound.B.hi={THREE}" in lines
    assert 'bound.zeros=4' in lines
    assert 'parameters.a=0.50000000000000000000' in lines


def test_keyvalue_is_deterministic():
    assert render_report(sample_report(), 'kv') == render_report(sample_report(), 'kv')


def test_csv_rows():
    report = CommandReport(command='emit-st', columns=['t', 'S'],
                           rows=[(Fraction(0), arb(131) / 144), (Fraction(1, 2), arb(1) / 3)])
    text = render_report(report, ReportStyle.CSV)
    lines = text.splitlines()
    assert lines[0] == 't,S'
    assert lines[1].startswith('0,0.909722222')
    assert lines[2] == '0.50000000000000000000,0.333333333333333'


def test_text_rows():
    report = CommandReport(command='emit-st', columns=['t', 'S'], rows=[(1, 2)])
    assert render_report(report).splitlines()[-1] == '  1  2'
