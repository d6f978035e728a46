"""
maasscheck/cli.py

Command-line front end.

    maasscheck classdb build  --tmax 1000 --out db.bin
    maasscheck classdb verify --db db.bin --oracle-tmax 500
    maasscheck classdb info   --db db.bin
    maasscheck bound-b        --a 7505/8192 --b unconditional --db db.bin
    maasscheck verify-theorem --range medium --db db.bin --random-intervals 20 --seed 1
    maasscheck certify        --zeros zeros.txt --T 178 --db db.bin
    maasscheck emit-st        --zeros zeros.txt --tmax 100 --out st.csv

Exit status: 0 PASS/success, 1 FAIL or data error, 2 inconclusive,
64 usage error, 74 I/O error.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional

import requests

import config
from arithdata import db_build, db_info, db_io, db_verify
from backends import available_backends
from certify import (
    certify_completeness, compute_B_bound, s_of_t_emit, sample_intervals,
    verify_theorem_range,
)
from formatters import get_formatter, render_report
from models import (
    CommandReport, Inconclusive, MaassCheckError, ReportStyle, RunConfig, TheoremRange, ZeroList,
)
from rigor import ball, workprec
from sources import load_zero_lists
from testfn import beta_params, unconditional_b

logger = logging.getLogger(__name__)

_STATUS_EXIT = {
    'OK': config.EXIT_OK,
    'PASS': config.EXIT_OK,
    'FAIL': config.EXIT_FAIL,
    'INCONCLUSIVE': config.EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    """Bad command line; exit status 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# =============================================================================
# ARGUMENT TYPES
# =============================================================================

def fraction_arg(text: str) -> Fraction:
    """Exact rational from '7505/8192', '2.55' or '1e-18'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}")


def b_arg(text: str):
    if text.strip().lower() == 'unconditional':
        return 'unconditional'
    return fraction_arg(text)


# =============================================================================
# PARSER
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='maasscheck',
                     description="Certified Turing's method for the Selberg zeta-function of PSL(2, Z).")
    parser.add_argument('--prec', type=int, default=config.DEFAULT_PREC,
                        help=f"working precision in bits (default {config.DEFAULT_PREC})")
    parser.add_argument('--nodes', type=int, default=config.DEFAULT_QUAD_NODES,
                        help="quadrature nodes per segment")
    parser.add_argument('--arcs', type=int, default=config.DEFAULT_ARCS,
                        help="boundary arcs for the quadrature supremum")
    parser.add_argument('--workers', type=int, default=config.DEFAULT_WORKERS,
                        help="worker processes for sweeps and database builds")
    parser.add_argument('--alpha', type=fraction_arg, default=config.GEOMETRIC_ALPHA,
                        help="ratio of the geometric tail segments, in (1, 3)")
    parser.add_argument('--segments', type=int, default=config.GEOMETRIC_SEGMENTS,
                        help="geometric tail segments before the closed-form tail")
    parser.add_argument('--format', choices=[s.value for s in ReportStyle if s != ReportStyle.CSV],
                        default=ReportStyle.TEXT.value, help="stdout report style")
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument('-v', '--verbose', action='count', default=0)
    noise.add_argument('-q', '--quiet', action='store_true')

    common = _Parser(add_help=False)
    common.add_argument('--report', metavar='PATH',
                        help="also write the key=value summary to PATH")

    zeros = _Parser(add_help=False)
    zeros.add_argument('--zeros', action='append', metavar='PATH_OR_URL', default=[],
                       help="zero list (repeatable; lists are concatenated)")
    zeros.add_argument('--zero-radius', type=fraction_arg, default=None,
                       help=f"radius for entries without one (default {config.DEFAULT_ZERO_RADIUS})")

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    classdb = commands.add_parser('classdb', help="build, verify or describe a class database")
    classdb_ops = classdb.add_subparsers(dest='action', metavar='ACTION')
    classdb_ops.required = True
    build = classdb_ops.add_parser('build', parents=[common])
    build.add_argument('--tmax', type=int, required=True)
    build.add_argument('--out', required=True, metavar='PATH')
    build.add_argument('--backend', choices=available_backends(), default=config.DEFAULT_BACKEND)
    verify = classdb_ops.add_parser('verify', parents=[common])
    verify.add_argument('--db', required=True, metavar='PATH')
    verify.add_argument('--oracle-tmax', type=int, default=None)
    verify.add_argument('--backend-oracle', choices=available_backends(), default='analytic')
    verify.add_argument('--unit-vmax', type=int, default=config.DEFAULT_UNIT_VMAX)
    info = classdb_ops.add_parser('info', parents=[common])
    info.add_argument('--db', required=True, metavar='PATH')

    bound = commands.add_parser('bound-b', parents=[common, zeros],
                                help="upper bound for the constant B")
    bound.add_argument('--a', type=fraction_arg, default=config.DEFAULT_A)
    bound.add_argument('--b', type=b_arg, default='unconditional',
                       help="'unconditional' or an exact value backed by --certified-height")
    bound.add_argument('--certified-height', type=fraction_arg, default=None)
    bound.add_argument('--db', required=True, metavar='PATH')

    theorem = commands.add_parser('verify-theorem', parents=[common, zeros],
                                  help="check the averaged S bound on a T-range")
    theorem.add_argument('--range', dest='range_', required=True,
                         choices=[r.value for r in TheoremRange])
    theorem.add_argument('--tmin', type=fraction_arg, default=None)
    theorem.add_argument('--tmax', type=fraction_arg, default=None)
    theorem.add_argument('--db', metavar='PATH', default=None)
    theorem.add_argument('--B', dest='B', type=fraction_arg, default=None,
                         help=f"upper bound for B (default {config.DEFAULT_B_BOUND}, the unconditional value)")
    theorem.add_argument('--X', dest='X', type=fraction_arg, default=None)
    theorem.add_argument('--delta', type=fraction_arg, default=None)
    theorem.add_argument('--random-intervals', type=int, default=None, metavar='N')
    theorem.add_argument('--seed', type=int, default=0)
    theorem.add_argument('--width', type=fraction_arg, default=Fraction(2))
    theorem.add_argument('--closed-v', dest='exact_v', action='store_false',
                         help="use the closed-form bounds for -2 Re V(i/2) and -2 Re V(i/2 - T) in large mode")

    cert = commands.add_parser('certify', parents=[common, zeros],
                               help="Turing gap and certified height of a zero list")
    cert.add_argument('--T', dest='T', type=fraction_arg, required=True)
    cert.add_argument('--db', metavar='PATH', default=None)
    cert.add_argument('--B', dest='B', type=fraction_arg, default=None,
                      help=f"upper bound for B (default {config.DEFAULT_B_BOUND}, the unconditional value)")
    cert.add_argument('--s-bound', type=fraction_arg, default=None,
                      help="use this upper bound for the S integral instead of computing it")

    emit = commands.add_parser('emit-st', parents=[common, zeros], help="(t, S(t)) samples as CSV")
    emit.add_argument('--tmax', type=fraction_arg, required=True)
    emit.add_argument('--samples', type=int, default=1024)
    emit.add_argument('--out', metavar='PATH', default=None)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """RunConfig from parsed flags; raises ValueError on a bad override."""
    cfg = RunConfig(prec=args.prec, dterm_prec=max(config.DTERM_PREC, args.prec),
                    quad_nodes=args.nodes, arcs=args.arcs, workers=args.workers,
                    alpha=args.alpha, segments=args.segments,
                    X=getattr(args, 'X', None), delta=getattr(args, 'delta', None))
    if getattr(args, 'a', None) is not None:
        cfg.a = args.a
    if isinstance(getattr(args, 'b', None), Fraction):
        cfg.b = args.b
    for name in ('db', 'out', 'report'):
        value = getattr(args, name, None)
        if value:
            cfg.paths[name] = value
    if getattr(args, 'zeros', None):
        cfg.paths['zeros'] = ', '.join(args.zeros)
    return cfg.validate()


def setup_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format='%(levelname)s %(message)s', stream=sys.stderr)


# =============================================================================
# COMMANDS
# =============================================================================

def _zeros(args: argparse.Namespace) -> ZeroList:
    if not args.zeros:
        return ZeroList(source='(none)')
    return load_zero_lists(args.zeros, args.zero_radius)


def _read_db(path: Optional[str], cfg: RunConfig):
    if path is None:
        return None
    return db_io('read', path, prec=cfg.dterm_prec)


def cmd_classdb(args: argparse.Namespace, cfg: RunConfig) -> CommandReport:
    report = CommandReport(command=f"classdb {args.action}")
    if args.action == 'build':
        if args.tmax < 3:
            raise UsageError("--tmax must be at least 3")
        db = db_build(args.tmax, args.backend, cfg.dterm_prec, cfg.workers)
        db_io('write', args.out, db)
        report.section('database').update(db_info(db))
        report.section('database')['path'] = args.out
        report.section('database')['backend'] = args.backend
        return report

    db = _read_db(args.db, cfg)
    if args.action == 'info':
        report.section('database').update(db_info(db))
        return report

    result = db_verify(db, oracle_tmax=args.oracle_tmax, unit_vmax=args.unit_vmax,
                       oracle_backend=args.backend_oracle)
    report.status = 'PASS' if result['passed'] else 'FAIL'
    summary = report.section('verify')
    summary.update({k: v for k, v in result.items() if k != 'failures'})
    summary['oracle_tmax'] = args.oracle_tmax
    if result['failures']:
        report.section('failures').update(
            {str(i + 1): msg for i, msg in enumerate(result['failures'])})
    return report


def cmd_bound_b(args: argparse.Namespace, cfg: RunConfig) -> CommandReport:
    report = CommandReport(command='bound-b')
    db = _read_db(args.db, cfg)
    zeros = _zeros(args)
    with workprec(cfg.prec):
        if args.b == 'unconditional':
            b = unconditional_b()
            b_choice = None
        else:
            b = ball(args.b)
            b_choice = b
        bp = beta_params(args.a, b)
        terms = []
        bound = compute_B_bound(bp, zeros, b_choice=b_choice, db=db, cfg=cfg,
                                certified_height=args.certified_height, reports=terms)
    params = report.section('parameters')
    params.update({'a': args.a, 'b': args.b,
                   'b_ball': bp.b, 'c': bp.c, 'zeros': len(zeros), 'db_tmax': db.tmax})
    report.section('terms').update({t.term.value: t.value for t in terms})
    report.section('bound').update({'B': bound, 'B_upper': bound.upper()})
    return report


def cmd_verify_theorem(args: argparse.Namespace, cfg: RunConfig) -> CommandReport:
    range_ = TheoremRange.from_string(args.range_)
    if args.tmin is not None and args.tmax is not None and not args.tmin < args.tmax:
        raise UsageError("--tmin must be below --tmax")
    report = CommandReport(command='verify-theorem')
    zeros = _zeros(args) if args.zeros else None
    db = _read_db(args.db, cfg)
    intervals = None
    if args.random_intervals:
        default_lo, default_hi = range_.default_bounds
        lo = args.tmin if args.tmin is not None else default_lo
        hi = args.tmax if args.tmax is not None else default_hi
        try:
            intervals = sample_intervals(lo, hi, args.random_intervals, args.width, args.seed)
        except ValueError as e:
            raise UsageError(str(e))
    result = verify_theorem_range(range_, zeros=zeros, db=db, cfg=cfg, B=args.B,
                                  tmin=args.tmin, tmax=args.tmax, intervals=intervals,
                                  exact_V=args.exact_v)
    report.status = result.verdict.name
    summary = report.section('range')
    summary.update({'range': range_, 'verdict': result.verdict,
                    'intervals': len(result.intervals)})
    if args.random_intervals:
        summary.update({'random_intervals': args.random_intervals, 'seed': args.seed,
                        'width': args.width})
    report.section('audit').update(result.audit)
    if result.first_failure is not None:
        report.section('first_failure').update(result.first_failure.to_dict())
    if result.nearest_miss is not None:
        where, margin = result.nearest_miss
        report.section('nearest_miss').update({'where': where, 'bound_minus_target': margin})
    return report


def cmd_certify(args: argparse.Namespace, cfg: RunConfig) -> CommandReport:
    report = CommandReport(command='certify', status='PASS')
    zeros = _zeros(args)
    db = _read_db(args.db, cfg)
    s_bound = ball(args.s_bound) if args.s_bound is not None else None
    result = certify_completeness(zeros, args.T, db=db, cfg=cfg, B=args.B, s_bound=s_bound)
    report.section('certificate').update(result.to_dict())
    report.section('certificate')['source'] = zeros.source
    report.section('audit').update(result.audit)
    if result.ambiguous:
        logger.warning(f"[cli] {result.ambiguous} zero balls straddle the certified height")
    return report


def cmd_emit_st(args: argparse.Namespace, cfg: RunConfig) -> CommandReport:
    report = CommandReport(command='emit-st', columns=['t', 'S'])
    zeros = _zeros(args)
    with workprec(cfg.prec):
        report.rows = list(s_of_t_emit(zeros, args.tmax, args.samples))
    report.section('samples').update({'tmax': args.tmax, 'points': len(report.rows),
                                      'zeros': len(zeros)})
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as fh:
            fh.write(render_report(report, ReportStyle.CSV))
        report.section('samples')['out'] = args.out
    return report


COMMANDS = {
    'classdb': cmd_classdb,
    'bound-b': cmd_bound_b,
    'verify-theorem': cmd_verify_theorem,
    'certify': cmd_certify,
    'emit-st': cmd_emit_st,
}


# =============================================================================
# ENTRY POINTS
# =============================================================================

def run(args: argparse.Namespace, cfg: RunConfig) -> int:
    """Run one command, print its report, write --report; return the exit status."""
    try:
        report = COMMANDS[args.command](args, cfg)
    except Inconclusive as e:
        logger.error(str(e))
        return config.EXIT_INCONCLUSIVE
    except MaassCheckError as e:
        logger.error(str(e))
        return config.EXIT_FAIL
    except (OSError, requests.RequestException) as e:
        logger.error(f"[cli] I/O error: {e}")
        return config.EXIT_IO
    except UsageError as e:
        logger.error(f"[cli] {e}")
        return config.EXIT_USAGE
    except (ValueError, ArithmeticError) as e:
        logger.error(f"[cli] numeric failure: {e}")
        return config.EXIT_FAIL

    style = ReportStyle.from_string(args.format)
    if style == ReportStyle.TEXT and args.command == 'emit-st' and not args.out:
        sys.stdout.write(render_report(report, ReportStyle.CSV))
    else:
        sys.stdout.write(get_formatter(style).render(report))
    if args.report:
        try:
            with open(args.report, 'w', encoding='utf-8') as fh:
                fh.write(render_report(report, ReportStyle.KEYVALUE))
        except OSError as e:
            logger.error(f"[cli] cannot write report: {e}")
            return config.EXIT_IO
    return _STATUS_EXIT.get(report.status, config.EXIT_FAIL)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = config_from_args(args)
    except (UsageError, ValueError) as e:
        sys.stderr.write(f"maasscheck: {e}\n")
        return config.EXIT_USAGE
    setup_logging(args)
    return run(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
