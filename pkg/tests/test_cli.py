from fractions import Fraction

import pytest

import cli
from cli import build_parser, config_from_args, fraction_arg, main
from conftest import LEADING_ZEROS


@pytest.fixture
def zeros_file(tmp_path):
    path = tmp_path / 'zeros.txt'
    path.write_text("\n".join(f"{r} 1e-12" for r in LEADING_ZEROS) + "\n", encoding='utf-8')
    return str(path)


@pytest.fixture(scope='module')
def db_file(tmp_path_factory):
    path = tmp_path_factory.mktemp('db') / 'db.bin'
    assert main(['-q', 'classdb', 'build', '--tmax', '60', '--out', str(path)]) == 0
    return str(path)


def test_fraction_arg():
    assert fraction_arg('7505/8192') == Fraction(7505, 8192)
    assert fraction_arg('2.55') == Fraction(255, 100)


def test_parser_defaults():
    args = build_parser().parse_args(['certify', '--T', '178'])
    assert args.T == 178
    assert args.zeros == []
    assert args.format == 'text'


def test_verify_theorem_uses_direct_v_by_default():
    args = build_parser().parse_args(['verify-theorem', '--range', 'large'])
    assert args.exact_v is True
    args = build_parser().parse_args(['verify-theorem', '--range', 'large', '--closed-v'])
    assert args.exact_v is False


@pytest.mark.parametrize('argv', [
    [],
    ['nonsense'],
    ['certify'],
    ['certify', '--T', 'abc'],
    ['--prec', '8', 'certify', '--T', '10'],
    ['--alpha', '3', 'certify', '--T', '10'],
    ['--alpha', '1', 'certify', '--T', '10'],
    ['--segments', '-1', 'certify', '--T', '10'],
    ['-q', 'verify-theorem', '--range', 'small', '--tmin', '20', '--tmax', '10'],
    ['-q', 'classdb', 'build', '--tmax', '2', '--out', 'unused.bin'],
])
def test_usage_errors(argv):
    assert main(argv) == 64


def test_classdb_info(db_file, capsys):
    capsys.readouterr()
    assert main(['-q', '--format', 'keyvalue', 'classdb', 'info', '--db', db_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert 'command=classdb info' in lines
    assert 'database.tmax=60' in lines
    assert 'database.complete=true' in lines


def test_classdb_verify(db_file, capsys):
    assert main(['-q', 'classdb', 'verify', '--db', db_file, '--oracle-tmax', '40']) == 0
    assert capsys.readouterr().out.startswith('maasscheck classdb verify: PASS')


def test_missing_db_is_io_error(tmp_path):
    assert main(['-q', 'classdb', 'info', '--db', str(tmp_path / 'absent.bin')]) == 74


def test_bound_b_rejects_unbacked_height(db_file):
    assert main(['-q', 'bound-b', '--db', db_file, '--b', '20']) == 1


def test_certify_with_s_bound(zeros_file, tmp_path, capsys):
    report = tmp_path / 'cert.txt'
    code = main(['-q', '--format', 'keyvalue', 'certify', '--zeros', zeros_file, '--T', '15',
                 '--s-bound', '1', '--report', str(report)])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert 'status=PASS' in lines
    assert 'certificate.zero_count=4' in lines
    assert report.read_text(encoding='utf-8').splitlines() == lines


def test_certify_negative_gap(zeros_file):
    assert main(['-q', 'certify', '--zeros', zeros_file, '--T', '15', '--s-bound', '-5']) == 1


def test_bad_zero_list(tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text("12.1\n9.5\n", encoding='utf-8')
    assert main(['-q', 'certify', '--zeros', str(path), '--T', '15', '--s-bound', '1']) == 1


def test_emit_st_stdout(zeros_file, capsys):
    assert main(['-q', 'emit-st', '--zeros', zeros_file, '--tmax', '10', '--samples', '10']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 't,S'
    # 11 grid points plus both sides of the jump at the first zero
    assert len(lines) == 1 + 13


def test_emit_st_file(zeros_file, tmp_path, capsys):
    out = tmp_path / 'st.csv'
    assert main(['-q', 'emit-st', '--zeros', zeros_file, '--tmax', '10', '--samples', '10',
                 '--out', str(out)]) == 0
    assert out.read_text(encoding='utf-8').startswith('t,S\n')
    assert 'emit-st: OK' in capsys.readouterr().out


def test_verify_theorem_asymptotic(capsys):
    assert main(['-q', 'verify-theorem', '--range', 'asymptotic']) == 0
    assert capsys.readouterr().out.startswith('maasscheck verify-theorem: PASS')


def test_verify_theorem_small(zeros_file):
    assert main(['-q', 'verify-theorem', '--range', 'small', '--zeros', zeros_file,
                 '--tmin', '1', '--tmax', '14']) == 0


def test_geometric_tail_overrides():
    args = build_parser().parse_args(['--alpha', '5/2', '--segments', '6', 'certify', '--T', '178'])
    cfg = config_from_args(args)
    assert cfg.alpha == Fraction(5, 2)
    assert cfg.segments == 6
    defaults = config_from_args(build_parser().parse_args(['certify', '--T', '178']))
    assert 1 < defaults.alpha < 3


@pytest.mark.parametrize('error', [ValueError("bad value"), ZeroDivisionError("division by zero")])
def test_library_numeric_failures_exit_fail(zeros_file, monkeypatch, error):
    def failing(*args, **kwargs):
        raise error

    monkeypatch.setattr(cli, 'certify_completeness', failing)
    assert main(['-q', 'certify', '--zeros', zeros_file, '--T', '15', '--s-bound', '1']) == 1
