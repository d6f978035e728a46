"""
maasscheck/certify.py

Turing's method for the Selberg zeta-function of PSL(2, Z).

    compute_B_bound       the constant B from the h2 / beta trace data
    s_integral_upper      upper bound for the integral of S over [0, T]
    verify_theorem_range  (1/T) int_0^T S <= E(T) on one of four T-ranges
    certify_completeness  the Turing gap H and the certified height of a zero list

Every sweep reports PASS, FAIL or INCONCLUSIVE. FAIL means an exact point
was found where the certified bound exceeds T E(T); INCONCLUSIVE means the
interval width ran out before either could be shown.
"""

import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from flint import arb, acb

import config
from arithdata import prime_power_terms
from models import (
    BetaParams, BoundMode, CertResult, ClassDB, ClassEntry, Inconclusive, InsufficientData,
    IntervalCheck, NegativeGap, OutOfDomain, PhiParams, PreconditionUnsound, PrimePowerTerm,
    RangeReport, RunConfig, SBoundInputs, TheoremRange, TraceTerm, TraceTermReport, Verdict,
    ZeroList,
)
from quad import Integrand, integrate_segments, pole_segments
from rigor import (
    ball, certainly, from_endpoints, interval, max_upper, pm, to_endpoints, to_fraction, workprec,
)
from testfn import (
    F_complex, F_eval, F_tail_constant, V_eval, beta_eval, check_varphi_nonnegative, h2_profile,
    k_complex, k_eval, large_X, largeT_bound_terms, unconditional_b, varphi_hat,
    verify_majorant_hypotheses,
)
from traceformula import DTermCache, c0_constant, h2_trace, main_term, term_C, term_D

logger = logging.getLogger(__name__)

# the head (1, 1 + SMALL_HEAD] of the small range is covered by a monotone bound
SMALL_HEAD = Fraction(1, 64)


def _settings(cfg: Optional[RunConfig]) -> RunConfig:
    return cfg if cfg is not None else RunConfig()


def default_B(certified_height=None) -> arb:
    """
    The proven upper bound for B used when no fresh computation is supplied.

    The unconditional value unless certified_height reaches B_HEIGHT, the
    height the sharper value assumes complete.
    """
    if certified_height is not None and certainly('ge', ball(certified_height), ball(config.B_HEIGHT)):
        return ball(config.CERTIFIED_HEIGHT_B_BOUND)
    return ball(config.DEFAULT_B_BOUND)


def medium_params(cfg: Optional[RunConfig] = None) -> PhiParams:
    cfg = _settings(cfg)
    return PhiParams(X=ball(cfg.X if cfg.X is not None else config.MEDIUM_X),
                     delta=ball(cfg.delta if cfg.delta is not None else config.MEDIUM_DELTA))


def large_params(T) -> PhiParams:
    return PhiParams(X=large_X(T), delta=ball(config.LARGE_DELTA))


# =============================================================================
# SMOOTH COUNT AND ERROR TERM
# =============================================================================

def theorem_error(T) -> arb:
    """E(T) = (1 + 6.59125/log T) (pi / (12 log T))^2."""
    L = ball(T).log()
    return (1 + ball(config.THEOREM_E_COEFF) / L) * (arb.pi() / (12 * L)) ** 2


def _theorem_error_slope(T, L=None) -> arb:
    """d/dT of T E(T)."""
    L = ball(T).log() if L is None else L
    c = ball(config.THEOREM_E_COEFF)
    return theorem_error(T) + (arb.pi() / 12) ** 2 * (-2 / L ** 3 - 3 * c / L ** 4)


def nbar(t) -> arb:
    """N-bar(t) = t^2/12 - (2t/pi) log(t / (e sqrt(pi/2))) - 131/144."""
    t = ball(t)
    pi = arb.pi()
    if t.is_zero():
        return ball(Fraction(-131, 144))
    scale = (pi / 2).sqrt() * arb(1).exp()
    return t * t / 12 - 2 * t / pi * (t / scale).log() - ball(Fraction(131, 144))


def nbar_integral(T) -> arb:
    """Integral of N-bar over [0, T]: T^3/36 - (T^2/pi)(log T - 3/2 - log(pi/2)/2) - 131 T/144."""
    T = ball(T)
    if T.is_zero():
        return arb(0)
    if not T > 0:
        raise OutOfDomain("[certify] the smooth count is integrated for T > 0")
    pi = arb.pi()
    inner = T.log() - ball(Fraction(3, 2)) - (pi / 2).log() / 2
    return T ** 3 / 36 - T * T / pi * inner - 131 * T / 144


def count_integral(zeros: ZeroList, T, side: str = 'lower') -> arb:
    """
    Integral of a step count over [0, T].

    side='lower' delays every jump to the upper end of its ball (a minorant
    of N); side='upper' advances it to the lower end (a majorant).
    """
    T = ball(T)
    total = arb(0)
    for r in zeros.entries:
        if side == 'lower':
            edge = r.upper()
            if edge < T.lower():
                total += T.lower() - edge
        else:
            edge = r.lower()
            if edge < T.upper():
                total += T.upper() - edge
    return total


# =============================================================================
# THE CONSTANT B
# =============================================================================

def beta_kernel(bp: BetaParams):
    """t -> beta(t) / (2 pi^2 t^2), the discrete-term argument for B."""
    def xhat(t: arb) -> arb:
        return beta_eval(t, bp) / (2 * arb.pi() ** 2 * t * t)
    return xhat


def compute_B_bound(bp: BetaParams, zeros: Optional[ZeroList] = None,
                    b_choice: Optional[arb] = None, db: Optional[ClassDB] = None,
                    primes: Optional[Sequence[PrimePowerTerm]] = None,
                    cfg: Optional[RunConfig] = None, certified_height=None,
                    reports: Optional[List[TraceTermReport]] = None) -> arb:
    """
    Upper bound for B = Tr*(h2) - M(h2) + D(beta/(2 pi^2 t^2)) - C(beta/(2 pi^2 t^2)).

    b_choice is the height below which no eigenvalue is missing from
    `zeros`. It must be backed either by the unconditional bound
    sqrt(6 pi^2 - 1)/2 or by a certified height, and bp.b may not exceed it.
    """
    cfg = _settings(cfg)
    if db is None:
        raise InsufficientData("[certify] the B computation needs a class database")
    with workprec(cfg.prec):
        proven = unconditional_b()
        if b_choice is None:
            b_choice = proven
        b_choice = ball(b_choice)
        backed = certainly('le', b_choice, proven)
        if not backed and certified_height is not None:
            backed = certainly('le', b_choice, ball(certified_height))
        if not backed:
            raise PreconditionUnsound(
                f"[certify] b = {b_choice.str(10)} is neither the unconditional bound "
                f"nor below a certified height")
        if not certainly('le', bp.b, b_choice):
            raise PreconditionUnsound("[certify] beta parameter b exceeds the proven height")

        support = bp.support
        prime_limit = None
        if primes is None:
            prime_limit = int(math.floor(float((arb.pi() * support).exp().upper()))) + 1
            primes = prime_power_terms(prime_limit)
        trace = h2_trace(bp, zeros, cfg)
        main, term_reports = main_term(h2_profile(bp), cfg)
        discrete = term_D(beta_kernel(bp), support, db, primes, prime_limit, cfg.dterm_prec)
        continuous = term_C('beta_over_t2', bp=bp, cfg=cfg)

        term_reports += [
            TraceTermReport(term=TraceTerm.TRACE, value=trace),
            TraceTermReport(term=TraceTerm.D, value=discrete),
            TraceTermReport(term=TraceTerm.C, value=continuous),
        ]
        if reports is not None:
            reports.extend(term_reports)
        bound = trace - main + discrete - continuous
        logger.info(f"[certify] B <= {bound.upper().str(20)} "
                    f"({len(zeros) if zeros is not None else 0} zeros)")
        return bound


# =============================================================================
# S-INTEGRAL BOUNDS
# =============================================================================

def medium_dterm(db: ClassDB, primes: Sequence[PrimePowerTerm], pp: PhiParams,
                 cfg: Optional[RunConfig] = None, prime_limit: Optional[int] = None) -> DTermCache:
    """Discrete-term rows for phi-hat(t)/(2 pi^2 t^2), T-independent and built once."""
    cfg = _settings(cfg)
    with workprec(cfg.dterm_prec):
        support = pp.X + pp.delta
        cache = DTermCache.build(db, primes, prime_limit)
        two_pi2 = 2 * arb.pi() ** 2
        return cache.restricted(lambda t: varphi_hat(t, pp) / (two_pi2 * t * t), support)


def _k_breakpoints(lo: Fraction, hi: Fraction, R: Fraction, rho: float,
                   cap, inner_cap) -> List[Fraction]:
    # poles of k(T - r) sit at T +- i/2 for every T in [lo, hi]; F has real poles at -(m + 1/2)/X
    points = set(pole_segments(0, R, rho=rho, width_cap=cap))
    points.update(lo - u for u in pole_segments(0, lo, imag_pole=0.5, width_cap=cap))
    if hi > lo:
        points.update(pole_segments(lo, hi, width_cap=inner_cap))
    points.update(hi + u for u in pole_segments(0, R - hi, imag_pole=0.5, width_cap=cap))
    return sorted(points)


def medium_k_integral(lo: Fraction, hi: Fraction, pp: PhiParams,
                      cfg: Optional[RunConfig] = None) -> arb:
    """
    Upper bound for the integral over R of [k(T+r) + k(T-r)] F(r), for all T in [lo, hi].

    Quadrature covers [0, R] with R = hi + tail_radius; beyond R it uses
    k(x) <= |x|/12 and F(r) <= K/(X^3 r^4).
    """
    cfg = _settings(cfg)
    sweep = cfg.medium_sweep
    with workprec(cfg.prec):
        T = interval(lo, hi)
        X = pp.X
        R = Fraction(math.ceil(hi)) + sweep['tail_radius']
        rho = -1 / (2 * float(X.mid()))
        points = _k_breakpoints(Fraction(lo), Fraction(hi), R, rho,
                                sweep['k_width_cap'], sweep['inner_width_cap'])
        Tc = acb(T)
        f = Integrand(
            eval=lambda r: (k_eval(T + r) + k_eval(T - r)) * F_eval(r, pp),
            eval_complex=lambda z: (k_complex(Tc + z) + k_complex(Tc - z)) * F_complex(z, pp),
            name="kF",
        )
        body = integrate_segments(f, points, cfg.quad_nodes, cfg.prec, cfg.arcs)
        tail = F_tail_constant(pp) / (6 * X ** 3 * ball(R) ** 2)
        return 2 * body + tail.upper()


def max_negated_discrete(dterm: DTermCache, lo: Fraction, hi: Fraction, tile) -> arb:
    """Upper bound for -D(cos(2 pi T t) xhat) over T in [lo, hi], on tiles of the given width."""
    if hi == lo:
        return -dterm.cosine_sum(ball(lo))
    tile = Fraction(tile)
    count = math.ceil((hi - lo) / tile)
    values = []
    for j in range(count):
        a = lo + j * tile
        b = min(a + tile, hi)
        values.append(-dterm.cosine_sum(interval(a, b)))
    return max_upper(values)


def _medium_bound(si: SBoundInputs, cfg: RunConfig) -> arb:
    T, pp = si.T, si.pp
    lo, hi = to_fraction(T.lower()), to_fraction(T.upper())
    dterm = si.dterm
    if dterm is None:
        if si.db is None or si.primes is None:
            raise InsufficientData("[certify] the medium bound needs a class database and prime powers")
        dterm = medium_dterm(si.db, si.primes, pp, cfg)
    kint = medium_k_integral(lo, hi, pp, cfg)
    with workprec(cfg.dterm_prec):
        discrete = max_negated_discrete(dterm, lo, hi, cfg.medium_sweep['tile_width'])
    shifted = V_eval(acb(-T, arb(1) / 2), pp).real
    closed = si.B + si.C0 + T.log() / (24 * arb.pi()) - 2 * shifted
    return kint + discrete + closed


def _large_bound(si: SBoundInputs) -> arb:
    T, pp = si.T, si.pp
    kTr, krFr, Vi2, Vi2T = largeT_bound_terms(T, pp)
    if si.exact_V:
        half = arb(1) / 2
        Vi2 = -2 * V_eval(acb(0, half), pp).real
        Vi2T = -2 * V_eval(acb(-T, half), pp).real
    return kTr + krFr + Vi2 + Vi2T + 2 * si.B + si.C0 + T.log() / (24 * arb.pi())


def s_integral_upper(si: SBoundInputs, cfg: Optional[RunConfig] = None) -> arb:
    """Upper bound (as a ball; use .upper()) for the integral of S over [0, T], every T in si.T."""
    cfg = _settings(cfg)
    if not ball(si.T) >= 4:
        raise OutOfDomain("[certify] the S-integral bound needs T >= 4")
    with workprec(cfg.prec):
        if si.mode == BoundMode.LARGE:
            return _large_bound(si)
        return _medium_bound(si, cfg)


# =============================================================================
# SMALL RANGE
# =============================================================================

def _small_value(T: arb, m: int, s: Fraction) -> arb:
    """int_0^T (N+ - N-bar) - T E(T) with m jumps below T summing to s."""
    return m * T - ball(s) - nbar_integral(T) - T * theorem_error(T)


def _small_enclosure(a: Fraction, b: Fraction, m: int, s: Fraction) -> arb:
    # mean-value form around the midpoint
    mid = (a + b) / 2
    cell = interval(a, b)
    slope = m - nbar(cell) - _theorem_error_slope(cell)
    return _small_value(ball(mid), m, s) + slope * pm(ball((b - a) / 2))


def _small_head_bound(a: Fraction, b: Fraction) -> arb:
    """On (a, b] with a = 1: -int N-bar - E(T), using E(T) >= (pi/12)^2 6.59125 / log(b)^3."""
    cell = interval(a, b)
    floor = (arb.pi() / 12) ** 2 * ball(config.THEOREM_E_COEFF) / ball(b).log() ** 3
    return -nbar_integral(cell) - floor


def _small_piece(a: Fraction, b: Fraction, m: int, s: Fraction,
                 depth: int) -> Tuple[Verdict, arb, Fraction, int]:
    """Bisect [a, b] until every cell is certified; returns verdict, worst value, where, cells."""
    stack = [(a, b, 0)]
    worst, worst_at, cells = None, a, 0
    while stack:
        lo, hi, level = stack.pop()
        value = _small_enclosure(lo, hi, m, s)
        cells += 1
        if certainly('lt', value, 0):
            if worst is None or value.upper() > worst:
                worst, worst_at = value.upper(), (lo + hi) / 2
            continue
        if level >= depth:
            point = _small_value(ball((lo + hi) / 2), m, s)
            verdict = Verdict.FAIL if certainly('gt', point, 0) else Verdict.INCONCLUSIVE
            return verdict, value, (lo + hi) / 2, cells
        mid = (lo + hi) / 2
        stack.append((mid, hi, level + 1))
        stack.append((lo, mid, level + 1))
    return Verdict.PASS, worst if worst is not None else arb(0), worst_at, cells


def verify_small_range(zeros: ZeroList, lo: Fraction = Fraction(1), hi: Fraction = Fraction(100),
                       depth: int = config.SMALL_RANGE_DEPTH) -> RangeReport:
    """
    Check int_0^T S - T E(T) < 0 on (lo, hi] using the majorant N+ of the list.

    The list is assumed complete up to hi; each gap between consecutive jumps
    is one reported interval.
    """
    if zeros is None or not len(zeros):
        raise InsufficientData("[certify] the small range needs a zero list")
    lo, hi = Fraction(lo), Fraction(hi)
    report = RangeReport(range=TheoremRange.SMALL, verdict=Verdict.PASS)
    edges = sorted(to_fraction(r.lower()) for r in zeros.entries)
    start = lo
    if lo <= 1:
        head_end = Fraction(1) + SMALL_HEAD
        value = _small_head_bound(Fraction(1), head_end)
        passed = certainly('lt', value, 0) and not (edges and edges[0] <= head_end)
        report.intervals.append(IntervalCheck(lo=Fraction(1), hi=head_end, bound=value,
                                              target=arb(0), passed=passed))
        if not passed:
            report.verdict = Verdict.INCONCLUSIVE
            report.first_failure = report.intervals[-1]
            return report
        start = head_end
    cuts = [start] + [e for e in edges if start < e < hi] + [hi]
    total_cells = 0
    nearest = None
    for a, b in zip(cuts, cuts[1:]):
        below = [e for e in edges if e <= a]
        m, s = len(below), sum(below, Fraction(0))
        verdict, worst, where, cells = _small_piece(a, b, m, s, depth)
        total_cells += cells
        check = IntervalCheck(lo=a, hi=b, bound=worst, target=arb(0), passed=verdict == Verdict.PASS)
        report.intervals.append(check)
        if verdict != Verdict.PASS:
            report.verdict = verdict
            report.first_failure = check
            logger.warning(f"[certify] small range {verdict.name} near T = {float(where):.10f}")
            break
        if nearest is None or worst > nearest[1]:
            nearest = (where, worst)
    report.nearest_miss = nearest
    report.audit['cells'] = total_cells
    report.audit['zeros'] = len(zeros)
    logger.info(f"[certify] small range: {report.verdict.name} after {total_cells} cells")
    return report


# =============================================================================
# MEDIUM AND LARGE SWEEPS
# =============================================================================

@dataclass
class SweepContext:
    """Everything an interval check needs, T-independent and shared by a sweep."""
    mode: BoundMode
    B: arb
    C0: arb
    cfg: RunConfig
    pp: Optional[PhiParams] = None
    dterm: Optional[DTermCache] = None
    exact_V: bool = False

    def bound(self, lo: Fraction, hi: Fraction) -> arb:
        T = interval(lo, hi)
        if self.mode == BoundMode.MEDIUM:
            si = SBoundInputs(T=T, B=self.B, C0=self.C0, pp=self.pp, mode=self.mode,
                              dterm=self.dterm)
        else:
            si = SBoundInputs(T=T, B=self.B, C0=self.C0, pp=large_params(T), mode=self.mode,
                              exact_V=self.exact_V)
        return s_integral_upper(si, self.cfg)

    def check(self, lo: Fraction, hi: Fraction) -> IntervalCheck:
        T = interval(lo, hi)
        target = T * theorem_error(T)
        bound = self.bound(lo, hi)
        return IntervalCheck(lo=lo, hi=hi, bound=bound, target=target,
                             passed=certainly('le', bound, target))

    def point_exceeds(self, t: Fraction) -> bool:
        T = ball(t)
        return certainly('gt', self.bound(t, t), T * theorem_error(T))


def sweep(ctx: SweepContext, lo: Fraction, hi: Fraction,
          schedule: Dict[str, Any]) -> Tuple[Verdict, List[IntervalCheck], Optional[IntervalCheck]]:
    """
    Walk [lo, hi] left to right: double the width after `double_after`
    consecutive passes (up to max_width), halve it on a failure. At
    min_width an exact point evaluation separates FAIL from INCONCLUSIVE.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    width = Fraction(schedule['start_width'])
    floor = Fraction(schedule['min_width'])
    cap = Fraction(schedule['max_width'])
    checks: List[IntervalCheck] = []
    t, streak = lo, 0
    while t < hi:
        w = min(width, hi - t)
        check = ctx.check(t, t + w)
        if check.passed:
            checks.append(check)
            t += w
            streak += 1
            if streak >= schedule['double_after'] and width * 2 <= cap:
                width *= 2
                streak = 0
                logger.debug(f"[certify] width doubled to {width} at T = {float(t)}")
            continue
        if w / 2 >= floor:
            width = w / 2
            streak = 0
            continue
        checks.append(check)
        verdict = Verdict.FAIL if ctx.point_exceeds(t + w / 2) else Verdict.INCONCLUSIVE
        logger.warning(f"[certify] {verdict.name} on [{float(t)}, {float(t + w)}]")
        return verdict, checks, check
    return Verdict.PASS, checks, None


def _pack(x: arb):
    return to_endpoints(x) if x.is_finite() else None


def _unpack(pair) -> arb:
    return from_endpoints(pair) if pair is not None else arb(float('inf'))


def _context_payload(ctx: SweepContext, db: Optional[ClassDB],
                     primes_limit: Optional[int]) -> Dict[str, Any]:
    payload = {
        'mode': ctx.mode.value,
        'B': _pack(ctx.B),
        'C0': _pack(ctx.C0),
        'cfg': ctx.cfg,
        'exact_V': ctx.exact_V,
    }
    if ctx.mode == BoundMode.MEDIUM:
        payload['pp'] = (_pack(ctx.pp.X), _pack(ctx.pp.delta))
        payload['tmax'] = db.tmax
        payload['classes'] = [(e.t, e.d, e.l, e.h, e.u, e.v) for e in db.entries]
        payload['prime_limit'] = primes_limit
    return payload


def _context_from_payload(payload: Dict[str, Any]) -> SweepContext:
    cfg = payload['cfg']
    with workprec(cfg.prec):
        ctx = SweepContext(mode=BoundMode(payload['mode']), B=_unpack(payload['B']),
                           C0=_unpack(payload['C0']), cfg=cfg, exact_V=payload['exact_V'])
        if ctx.mode == BoundMode.MEDIUM:
            X, delta = payload['pp']
            ctx.pp = PhiParams(X=_unpack(X), delta=_unpack(delta))
            db = ClassDB(tmax=payload['tmax'],
                         entries=[ClassEntry(*row) for row in payload['classes']])
            primes = prime_power_terms(payload['prime_limit'])
            ctx.dterm = medium_dterm(db, primes, ctx.pp, cfg, payload['prime_limit'])
    return ctx


def _sweep_worker(job: Tuple[Dict[str, Any], Fraction, Fraction, Dict[str, Any]]) -> Dict[str, Any]:
    payload, lo, hi, schedule = job
    ctx = _context_from_payload(payload)
    with workprec(ctx.cfg.prec):
        verdict, checks, failure = sweep(ctx, lo, hi, schedule)
        rows = [(c.lo, c.hi, _pack(c.bound), _pack(c.target), c.passed) for c in checks]
    return {'verdict': verdict.name, 'checks': rows, 'failed': failure is not None}


def _unpack_checks(rows) -> List[IntervalCheck]:
    return [IntervalCheck(lo=a, hi=b, bound=_unpack(bound), target=_unpack(target), passed=passed)
            for a, b, bound, target, passed in rows]


def _chunks(lo: Fraction, hi: Fraction, count: int) -> List[Tuple[Fraction, Fraction]]:
    step = (hi - lo) / count
    edges = [lo + j * step for j in range(count)] + [hi]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def _run_jobs(ctx: SweepContext, spans: List[Tuple[Fraction, Fraction]], schedules: List[Dict[str, Any]],
              db: Optional[ClassDB], primes_limit: Optional[int]) -> List[Tuple[Verdict, List[IntervalCheck], Optional[IntervalCheck]]]:
    """Run one sweep per span, in a process pool when more than one worker is configured."""
    workers = ctx.cfg.workers
    if workers <= 1 or len(spans) <= 1:
        return [sweep(ctx, a, b, s) for (a, b), s in zip(spans, schedules)]
    payload = _context_payload(ctx, db, primes_limit)
    jobs = [(payload, a, b, s) for (a, b), s in zip(spans, schedules)]
    results = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for out in pool.map(_sweep_worker, jobs):
            checks = _unpack_checks(out['checks'])
            failure = checks[-1] if out['failed'] else None
            results.append((Verdict[out['verdict']], checks, failure))
    return results


def sample_intervals(lo, hi, count: int, width, seed: int) -> List[Tuple[Fraction, Fraction]]:
    """`count` width-`width` intervals with integer starts in [lo, hi - width], sorted."""
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    first, last = math.ceil(lo), math.floor(hi - width)
    if last < first:
        raise ValueError("range too narrow for the requested interval width")
    rng = random.Random(seed)
    population = range(first, last + 1)
    starts = sorted(rng.sample(population, min(count, len(population))))
    return [(Fraction(s), Fraction(s) + width) for s in starts]


def _trimmed_db(db: ClassDB, support: arb) -> Tuple[ClassDB, int]:
    """The part of db and the prime-power limit a discrete term with this support reads."""
    pi = arb.pi()
    need_t = int(math.floor(float((2 * (pi * support).cosh()).upper()))) + 1
    need_n = int(math.floor(float((pi * support).exp().upper()))) + 1
    if db.tmax < need_t:
        raise InsufficientData(f"[certify] class database stops at t = {db.tmax}, "
                               f"support needs t <= {need_t}")
    return ClassDB(tmax=need_t, entries=db.entries[:need_t - 2]), need_n


def _check_majorant(pp: PhiParams) -> None:
    checks = verify_majorant_hypotheses(pp)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise PreconditionUnsound(f"[certify] majorant hypotheses not certified: {', '.join(failed)}")


def verify_theorem_range(range_: TheoremRange, zeros: Optional[ZeroList] = None,
                         db: Optional[ClassDB] = None, cfg: Optional[RunConfig] = None,
                         B=None, tmin=None, tmax=None,
                         intervals: Optional[List[Tuple[Fraction, Fraction]]] = None,
                         exact_V: bool = True) -> RangeReport:
    """
    Verify (1/T) int_0^T S(t) dt <= E(T) over one range.

    small       bisection against the majorant of a zero list, from (1, r_1) on
    medium      sweep with the discrete-term bound (needs db)
    large       sweep with the bound free of the discrete term, X = log(T/5)/pi
    asymptotic  the cubic in log T and the intermediate exponential inequality

    `intervals` replaces the full sweep by the given T-intervals (sampling).
    exact_V=False swaps the direct V values of the large bound for their
    closed-form upper bounds.
    """
    if isinstance(range_, str):
        range_ = TheoremRange.from_string(range_)
    cfg = _settings(cfg)
    default_lo, default_hi = range_.default_bounds
    lo = Fraction(tmin) if tmin is not None else Fraction(default_lo)
    hi = Fraction(tmax) if tmax is not None else Fraction(default_hi)
    if not lo < hi:
        raise ValueError("empty T-range")
    with workprec(cfg.prec):
        B = default_B() if B is None else ball(B)
        if range_ == TheoremRange.SMALL:
            return verify_small_range(zeros, lo, hi)
        C0 = c0_constant()
        if range_ == TheoremRange.ASYMPTOTIC:
            return verify_asymptotic(lo, hi, B, C0)

        if range_ == TheoremRange.MEDIUM:
            if db is None:
                raise InsufficientData("[certify] the medium range needs a class database")
            pp = medium_params(cfg)
            _check_majorant(pp)
            trimmed, prime_limit = _trimmed_db(db, pp.X + pp.delta)
            primes = prime_power_terms(prime_limit)
            ctx = SweepContext(mode=BoundMode.MEDIUM, B=B, C0=C0, cfg=cfg, pp=pp,
                               dterm=medium_dterm(trimmed, primes, pp, cfg, prime_limit))
            schedule = dict(cfg.medium_sweep)
        else:
            if lo < 10:
                raise OutOfDomain("[certify] the large range starts at T >= 10")
            _check_majorant(large_params(lo))
            for edge in (lo, hi):
                ok, _ = check_varphi_nonnegative(large_params(edge))
                if not ok:
                    logger.warning(f"[certify] phi-hat >= 0 grid check failed at X(T = {float(edge)})")
            ctx = SweepContext(mode=BoundMode.LARGE, B=B, C0=C0, cfg=cfg, exact_V=exact_V)
            trimmed, prime_limit = None, None
            schedule = dict(cfg.large_sweep)

        if intervals:
            spans = [(Fraction(a), Fraction(b)) for a, b in intervals]
            schedules = [dict(schedule, start_width=b - a) for a, b in spans]
        else:
            spans = _chunks(lo, hi, max(1, cfg.workers))
            schedules = [schedule] * len(spans)
        results = _run_jobs(ctx, spans, schedules, trimmed, prime_limit)

    report = RangeReport(range=range_, verdict=Verdict.PASS)
    nearest = None
    for verdict, checks, failure in results:
        report.intervals.extend(checks)
        for c in checks:
            if c.passed:
                margin = c.bound.upper() - c.target.lower()
                if nearest is None or margin > nearest[1]:
                    nearest = ((c.lo, c.hi), margin)
        if verdict != Verdict.PASS and report.verdict == Verdict.PASS:
            report.verdict = verdict
            report.first_failure = failure
    report.nearest_miss = nearest
    report.audit.update({'B': B, 'C0': C0, 'lo': lo, 'hi': hi,
                         'intervals': len(report.intervals), 'sampled': bool(intervals)})
    logger.info(f"[certify] {range_.value} range [{lo}, {hi}]: {report.verdict.name} "
                f"over {len(report.intervals)} intervals")
    return report


# =============================================================================
# ASYMPTOTIC RANGE
# =============================================================================

def asymptotic_cubic(L) -> Tuple[arb, Tuple[arb, arb, arb, arb]]:
    """
    (144/pi^2) log^3(T/5) log^3(T) times [pi^2/(144 log^2(T/5)) + 0.1052/log^3(T/5) - E(T)],
    as a cubic in L = log T. Returns the value and the coefficients c3..c0.
    """
    L = ball(L)
    a = ball(5).log()
    c = ball(config.THEOREM_E_COEFF)
    cubic = 144 / arb.pi() ** 2 * ball(config.LARGE_CUBIC_COEFF)
    c3 = 2 * a + cubic - c
    c2 = -3 * a * a + 3 * c * a
    c1 = a ** 3 - 3 * c * a * a
    c0 = c * a ** 3
    return ((c3 * L + c2) * L + c1) * L + c0, (c3, c2, c1, c0)


def _positive(x: arb) -> arb:
    return x if x > 0 else arb(0)


def _intermediate_ratio(X: arb, B: arb, C0: arb) -> arb:
    """
    X^3 e^(-pi X) times the left side of the intermediate inequality, with
    negative constants dropped so the ratio decreases in X >= 4/pi.
    """
    pi = arb.pi()
    decay = (-pi * X).exp()
    constant = _positive(2 * B + C0)
    head = 1 / (15 * X * X) + constant + (pi * X + ball(5).log()) / (24 * pi)
    square = (1 + decay) ** 2 / 4
    return X ** 3 * decay * head + square * (ball('0.09753') + ball('0.3732') / X ** 2)


def verify_asymptotic(lo, hi, B: arb, C0: arb,
                      steps: int = config.ASYMPTOTIC_COVER_STEPS) -> RangeReport:
    """
    Re-check the final inequalities behind T >= 10^6:

      the cubic in log T is negative on a cover of [log lo, log hi] and its
      leading coefficient dominates from log lo on;
      the intermediate inequality holds at X = log(lo/5)/pi, and its ratio
      form decreases beyond;
      pi^2 delta/(216 (pi^2+4)) > 0.00277 and (0.00616 - 0.00277) pi^3 <= 0.1052.
    """
    report = RangeReport(range=TheoremRange.ASYMPTOTIC, verdict=Verdict.PASS)
    L0, L1 = ball(lo).log(), ball(hi).log()
    h = (L1 - L0) / steps
    for j in range(steps):
        cell = interval((L0 + j * h).lower(), (L0 + (j + 1) * h).upper())
        value, _ = asymptotic_cubic(cell)
        check = IntervalCheck(lo=to_fraction(cell.lower()), hi=to_fraction(cell.upper()),
                              bound=value, target=arb(0), passed=certainly('lt', value, 0))
        report.intervals.append(check)
        if not check.passed and report.first_failure is None:
            report.first_failure = check

    _, (c3, c2, c1, c0) = asymptotic_cubic(L0)
    tail = c3 + _positive(c2) / L0 + _positive(c1) / L0 ** 2 + _positive(c0) / L0 ** 3
    X0 = large_X(lo)
    ratio = _intermediate_ratio(X0, B, C0)
    pi2 = arb.pi() ** 2
    slope = pi2 * ball(config.LARGE_DELTA) / (216 * (pi2 + 4))
    flags = {
        'cover': report.first_failure is None,
        'leading': certainly('lt', tail, 0),
        'intermediate': certainly('le', ratio, ball(config.LARGE_INTERMEDIATE_COEFF)),
        'slope': certainly('gt', slope, ball('0.00277')),
        'cubic_coeff': certainly('le', (ball('0.00616') - ball('0.00277')) * arb.pi() ** 3,
                                 ball(config.LARGE_CUBIC_COEFF)),
    }
    report.audit.update(flags)
    report.audit.update({'leading_bracket': tail, 'intermediate_ratio': ratio, 'B': B, 'C0': C0})
    if not all(flags.values()):
        report.verdict = Verdict.FAIL
        logger.warning(f"[certify] asymptotic checks failed: "
                       f"{', '.join(k for k, v in flags.items() if not v)}")
    return report


# =============================================================================
# COMPLETENESS
# =============================================================================

def certify_completeness(zeros: ZeroList, T_ref, db: Optional[ClassDB] = None,
                         cfg: Optional[RunConfig] = None, B=None,
                         s_bound: Optional[arb] = None) -> CertResult:
    """
    Turing's method at T_ref: H = [int N-bar + int S bound] - int N-minus.

    A zero missing from the list below T_ref - H would push int N-minus
    above the upper bound, so no zero is missing below the certified height.
    s_bound overrides the medium-mode S-integral bound at T_ref.
    """
    cfg = _settings(cfg)
    with workprec(cfg.prec):
        T = ball(T_ref)
        if s_bound is None:
            if db is None:
                raise InsufficientData("[certify] completeness needs a class database or an S bound")
            pp = medium_params(cfg)
            trimmed, prime_limit = _trimmed_db(db, pp.X + pp.delta)
            primes = prime_power_terms(prime_limit)
            si = SBoundInputs(T=T, B=default_B() if B is None else ball(B), C0=c0_constant(),
                              pp=pp, dterm=medium_dterm(trimmed, primes, pp, cfg, prime_limit))
            s_bound = s_integral_upper(si, cfg)
        upper = nbar_integral(T) + s_bound.upper()
        lower = count_integral(zeros, T, 'lower')
        H = upper.upper() - lower.lower()
        if not H.is_finite():
            raise Inconclusive("[certify] the Turing gap is not finite")
        if certainly('lt', H, 0):
            raise NegativeGap(f"[certify] gap H = {H.str(15)} is negative")
        height = (T - H).lower()
        below = [r for r in zeros.entries if r.upper() <= height]
        ambiguous = sum(1 for r in zeros.entries if r.contains(height))
        disjoint = all(x.upper() < y.lower() for x, y in zip(below, below[1:]))
        logger.info(f"[certify] H = {H.str(12)}, certified height {height.str(12)}, "
                    f"{len(below)} zeros below")
        return CertResult(T_ref=T, certified_height=height, zero_count=len(below),
                          integral_upper=upper, integral_lower=lower, gap=H,
                          ambiguous=ambiguous, pairwise_disjoint=disjoint,
                          audit={'s_bound': s_bound, 'nbar_integral': nbar_integral(T)})


def s_of_t_emit(zeros: ZeroList, tmax, samples: int = 1024) -> List[Tuple[Fraction, arb]]:
    """
    (t, S(t)) on an even grid of [0, tmax] plus both sides of every jump.

    Jumps are placed at the ball midpoints; the value at a jump is the
    right limit.
    """
    tmax = Fraction(tmax)
    jumps = sorted(to_fraction(r.mid()) for r in zeros.entries if r.mid() <= ball(tmax))
    eps = Fraction(1, 10 ** 12)
    points = {tmax * j / samples for j in range(samples + 1)}
    for r in jumps:
        points.add(r)
        if r - eps > 0:
            points.add(r - eps)
    out = []
    k = 0
    for t in sorted(points):
        while k < len(jumps) and jumps[k] <= t:
            k += 1
        out.append((t, k - nbar(ball(t))))
    return out
