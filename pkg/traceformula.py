"""
maasscheck/traceformula.py

The five terms of the trace formula for PSL(2, Z), with certified tails.

Fourier side (what the B computation uses):

    I(h) = -1/(12 pi) int_0^oo g'(t) / sinh(pi t) dt
    E(h) =  2 int_0^oo [1/(8 cosh pi t) + 2 cosh pi t / (3 + 6 cosh 2 pi t)] g(t) dt
    P(h) =  g(0)(log(pi/2) + 2 gamma)/(2 pi) - h(0)/4
            - 1/pi int_0^oo log(4 sinh(pi t / 2)) g'(t) dt
    D    =  1/pi [sum over hyperbolic classes + sum over prime powers]
    C    =  int g(t)(cosh pi t - 1) dt

where g = h-hat is carried as a testfn.HatProfile. The spectral-side
forms are provided for consistency checks on a truncated range.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

from flint import arb, acb

import config
from arithdata import l_value, local_factor
from models import (
    BetaParams, ClassDB, CTermMode, ErrorBudget, InsufficientData, OutOfDomain,
    PhiParams, PrimePowerTerm, RunConfig, TraceTerm, TraceTermReport, ZeroList,
)
from quad import (
    Integrand, exact_breakpoints, geometric_endpoint, integrate, integrate_geometric,
    integrate_segments, pole_segments,
)
from rigor import ball, certainly, constants, interval, pm, workprec
from specfun import coshm1c, sinhc
from testfn import HatPiece, HatProfile, V_eval, beta_profile, h2_eval, h2_profile

logger = logging.getLogger(__name__)


def _settings(cfg: Optional[RunConfig]) -> RunConfig:
    return cfg if cfg is not None else RunConfig()


def _integrate_pieces(profile: HatProfile, make: Callable[[int, HatPiece], Integrand],
                      imag_pole: float, cfg: RunConfig, audit: Optional[ErrorBudget]) -> arb:
    """Sum over the four pieces; pieces after the first keep clear of t = 0."""
    total = arb(0)
    for j, piece in enumerate(profile.pieces):
        lo, hi = profile.breakpoint(j), profile.breakpoint(j + 1)
        rho = 0.0 if j else None
        points = exact_breakpoints(lo, hi, rho=rho, imag_pole=imag_pole)
        total += integrate_segments(make(j, piece), points, cfg.quad_nodes, cfg.prec,
                                    cfg.arcs, audit)
    return total


# =============================================================================
# IDENTITY TERM
# =============================================================================

def term_I(profile: HatProfile, cfg: Optional[RunConfig] = None,
           audit: Optional[ErrorBudget] = None) -> arb:
    """I from the Fourier side, with the first piece in the g'(t)/t form."""
    cfg = _settings(cfg)
    with workprec(cfg.prec):
        pi = arb.pi()

        def make(j: int, piece: HatPiece) -> Integrand:
            if j == 0:
                f = lambda z: piece.derivative_over_t(z) / (pi * sinhc(pi * z))
            else:
                f = lambda z: piece.derivative(z) / (pi * z).sinh()
            return Integrand(eval=f, eval_complex=f, name=f"I[{profile.name}:{j}]")

        total = _integrate_pieces(profile, make, 1.0, cfg, audit)
        K = profile.tail_constant()
        if not K.is_zero():
            tail = profile.tail
            f = lambda z: tail.derivative(z) / (pi * z).sinh()
            g = Integrand(eval=f, eval_complex=f, name=f"I[{profile.name}:tail]")
            total += integrate_geometric(g, profile.support, cfg.segments, cfg.alpha,
                                         cfg.quad_nodes, cfg.prec, cfg.arcs, audit)
            t0 = geometric_endpoint(profile.support, cfg.segments, cfg.alpha)
            bound = i_tail_bound(t0, K)
            total += pm(bound)
            if audit is not None:
                audit.add('truncation', bound)
        return -total / (12 * pi)


def i_tail_bound(t0, K) -> arb:
    """|int_t0^oo g'/sinh(pi t)| for g = K/t^2: 2|K| |log tanh(pi t0/2)| / (pi t0^3)."""
    t0 = ball(t0)
    pi = arb.pi()
    return 2 * abs(ball(K)) * abs((pi * t0 / 2).tanh().log()) / (pi * t0 ** 3)


def term_I_h2(bp: BetaParams, cfg: Optional[RunConfig] = None,
              audit: Optional[ErrorBudget] = None) -> arb:
    return term_I(h2_profile(bp), cfg, audit)


# =============================================================================
# ELLIPTIC TERM
# =============================================================================

def elliptic_kernel(z):
    """1/(8 cosh pi z) + 2 cosh pi z / (3 + 6 cosh 2 pi z); nearest poles at +-i/3."""
    pi = arb.pi()
    c = (pi * z).cosh()
    return 1 / (8 * c) + 2 * c / (3 + 6 * (2 * pi * z).cosh())


def e_tail_bound(t0, K) -> arb:
    """7 |K| e^(-pi t0) / (12 pi t0^2), using a kernel below (7/12) e^(-pi t)."""
    t0 = ball(t0)
    pi = arb.pi()
    return 7 * abs(ball(K)) * (-pi * t0).exp() / (12 * pi * t0 ** 2)


def term_E(profile: HatProfile, cfg: Optional[RunConfig] = None,
           audit: Optional[ErrorBudget] = None) -> arb:
    cfg = _settings(cfg)
    with workprec(cfg.prec):

        def make(j: int, piece: HatPiece) -> Integrand:
            f = lambda z: elliptic_kernel(z) * piece.value(z)
            return Integrand(eval=f, eval_complex=f, name=f"E[{profile.name}:{j}]")

        total = _integrate_pieces(profile, make, 1.0 / 3, cfg, audit)
        K = profile.tail_constant()
        if not K.is_zero():
            tail = profile.tail
            f = lambda z: elliptic_kernel(z) * tail.value(z)
            g = Integrand(eval=f, eval_complex=f, name=f"E[{profile.name}:tail]")
            total += integrate_geometric(g, profile.support, cfg.segments, cfg.alpha,
                                         cfg.quad_nodes, cfg.prec, cfg.arcs, audit)
            t0 = geometric_endpoint(profile.support, cfg.segments, cfg.alpha)
            bound = e_tail_bound(t0, K)
            # the integrand keeps the sign of K beyond t0
            total += interval(0, bound) if K > 0 else interval(-bound, 0)
            if audit is not None:
                audit.add('truncation', bound)
        return 2 * total


def term_E_h2(bp: BetaParams, cfg: Optional[RunConfig] = None,
              audit: Optional[ErrorBudget] = None) -> arb:
    return term_E(h2_profile(bp), cfg, audit)


# =============================================================================
# PARABOLIC TERM
# =============================================================================

def h_zero(profile: HatProfile) -> arb:
    """h(0) = int g over R: exact piece antiderivatives plus K/(4a)."""
    total = arb(0)
    for j, piece in enumerate(profile.pieces):
        total += piece.integral(profile.breakpoint(j), profile.breakpoint(j + 1))
    K = profile.tail_constant()
    if not K.is_zero():
        total += K / profile.support
    return 2 * total


def _log_four_sinh(z):
    # log(4 sinh(pi z/2)) written so the principal branch is the continuation for Re z > 0
    pi = arb.pi()
    return pi * z / 2 + arb.const_log2() + (1 - (-pi * z).exp()).log()


def p_tail(t0, K) -> arb:
    """
    int_t0^oo log(4 sinh(pi t/2)) g'(t) dt for g = K/t^2:
    -(pi t0/2 + log 2) g(t0) - (pi/2) K/t0 +- |log(1 - e^(-pi t0))| g(t0).
    """
    t0 = ball(t0)
    pi = arb.pi()
    g0 = ball(K) / t0 ** 2
    main = -(pi * t0 / 2 + arb.const_log2()) * g0 - pi / 2 * ball(K) / t0
    return main + pm(abs((1 - (-pi * t0).exp()).log()) * g0)


def term_P(profile: HatProfile, cfg: Optional[RunConfig] = None,
           audit: Optional[ErrorBudget] = None) -> arb:
    """P from the Fourier side; the log t singularity of the first piece is integrated in closed form."""
    cfg = _settings(cfg)
    with workprec(cfg.prec):
        pi = arb.pi()
        two_pi = 2 * pi

        def make(j: int, piece: HatPiece) -> Integrand:
            if j == 0:
                f = lambda z: (two_pi * sinhc(pi * z / 2)).log() * piece.derivative(z)
            else:
                f = lambda z: _log_four_sinh(z) * piece.derivative(z)
            return Integrand(eval=f, eval_complex=f, name=f"P[{profile.name}:{j}]")

        body = _integrate_pieces(profile, make, 2.0, cfg, audit)
        body += profile.log_moment()
        K = profile.tail_constant()
        if not K.is_zero():
            tail = profile.tail
            f = lambda z: _log_four_sinh(z) * tail.derivative(z)
            g = Integrand(eval=f, eval_complex=f, name=f"P[{profile.name}:tail]")
            segments = config.P_TERM_GEOMETRIC_SEGMENTS
            body += integrate_geometric(g, profile.support, segments, cfg.alpha,
                                        cfg.quad_nodes, cfg.prec, cfg.arcs, audit)
            t0 = geometric_endpoint(profile.support, segments, cfg.alpha)
            rest = p_tail(t0, K)
            body += rest
            if audit is not None:
                audit.add('truncation', rest.rad())
        g0 = profile.at_zero()
        first = g0 * ((pi / 2).log() + 2 * arb.const_euler()) / (2 * pi)
        return first - h_zero(profile) / 4 - body / pi


def term_P_h2(bp: BetaParams, cfg: Optional[RunConfig] = None,
              audit: Optional[ErrorBudget] = None) -> arb:
    return term_P(h2_profile(bp), cfg, audit)


def main_term(profile: HatProfile, cfg: Optional[RunConfig] = None) -> Tuple[arb, List[TraceTermReport]]:
    """M(h) = I + E + P - h(0), with one report per term."""
    reports = []
    for term, fn in ((TraceTerm.I, term_I), (TraceTerm.E, term_E), (TraceTerm.P, term_P)):
        budget = ErrorBudget()
        value = fn(profile, cfg, budget)
        logger.info(f"[trace] {term.value}({profile.name}) = {value.str(15)}")
        reports.append(TraceTermReport(term=term, value=value, budget=budget))
    h0 = h_zero(profile)
    reports.append(TraceTermReport(term=TraceTerm.H_ZERO, value=h0))
    total = sum((r.value for r in reports[:3]), arb(0)) - h0
    return total, reports


# =============================================================================
# SPECTRAL SIDE
# =============================================================================

def _spectral(h: Integrand, kernel, R, tail, name: str, cfg: Optional[RunConfig],
              width_cap: float) -> arb:
    cfg = _settings(cfg)
    if h.eval_complex is None:
        raise ValueError(f"[trace] {name} needs a complex evaluator for the test function")
    with workprec(cfg.prec):
        f = Integrand(eval=lambda r: kernel(r) * h.eval(r),
                      eval_complex=lambda z: kernel(z) * h.eval_complex(z),
                      name=name)
        points = pole_segments(0, Fraction(R), imag_pole=0.5, width_cap=width_cap)
        body = integrate_segments(f, points, cfg.quad_nodes, cfg.prec, cfg.arcs)
        return body + pm(tail)


def term_I_spectral(h: Integrand, R, tail, cfg: Optional[RunConfig] = None,
                    width_cap: float = 1.0) -> arb:
    """(1/6) int_0^R r tanh(pi r) h(r) dr, widened by the caller's tail bound."""
    pi = arb.pi()
    return _spectral(h, lambda z: z * (pi * z).tanh() / 6, R, tail, "I-spectral", cfg, width_cap)


def term_E_spectral(h: Integrand, R, tail, cfg: Optional[RunConfig] = None,
                    width_cap: float = 1.0) -> arb:
    pi = arb.pi()
    root3 = arb(3).sqrt()

    def kernel(z):
        return 2 * (arb(1) / 8 + (pi * z / 3).cosh() / (3 * root3)) / (pi * z).cosh()

    return _spectral(h, kernel, R, tail, "E-spectral", cfg, width_cap)


def term_P_spectral(h: Integrand, R, tail, cfg: Optional[RunConfig] = None,
                    width_cap: float = 1.0) -> arb:
    pi = arb.pi()

    def kernel(z):
        if isinstance(z, acb):
            iz2 = acb(0, 2) * z
            re_psi = ((1 + iz2).digamma() + (1 - iz2).digamma()) / 2
        else:
            re_psi = acb(1, 2 * z).digamma().real
        return ((2 * pi).log() - 2 * re_psi) / pi

    return _spectral(h, kernel, R, tail, "P-spectral", cfg, width_cap)


def trace_spectral(h: Callable[[arb], arb], zeros: Optional[ZeroList]) -> arb:
    """Sum of h(r_j) over the supplied list, each r_j at its stated radius."""
    total = arb(0)
    if zeros is None:
        return total
    for r in zeros.entries:
        total += h(r)
    return total


# =============================================================================
# DISCRETE TERM
# =============================================================================

def hyperbolic_argument(t: int) -> arb:
    """(1/pi) log((t + sqrt(t^2 - 4))/2)."""
    t = arb(t)
    return ((t + (t * t - 4).sqrt()) / 2).log() / arb.pi()


@dataclass(frozen=True)
class DTermCache:
    """
    The T-independent part of the discrete term: arguments and weights of
    every hyperbolic class and prime power, merged and sorted by argument.

    Weights already include the overall 1/pi.
    """
    args: Tuple[arb, ...]
    weights: Tuple[arb, ...]
    hyperbolic_limit: arb
    prime_limit: arb

    @classmethod
    def build(cls, db: ClassDB, primes: Sequence[PrimePowerTerm],
              prime_limit: Optional[int] = None, prec: Optional[int] = None) -> "DTermCache":
        with workprec(prec):
            pi = arb.pi()
            rows: List[Tuple[arb, arb]] = []
            for e in db.entries:
                L1 = e.L1 if e.L1 is not None else l_value(e.d, e.h, e.u, e.v)
                rows.append((hyperbolic_argument(e.t), L1 * local_factor(e.d, e.l) / (e.l * pi)))
            for term in primes:
                rows.append((term.xhat_arg, term.weight / pi))
            rows.sort(key=lambda row: float(row[0].lower()))
            top = arb(db.tmax + 1)
            hyper = ((top + (top * top - 4).sqrt()) / 2).log() / pi if db.tmax >= 2 else arb(0)
            if prime_limit is None:
                prime_limit = primes[-1].n if primes else 1
            plimit = arb(prime_limit + 1).log() / pi
            logger.debug(f"[trace] discrete-term cache holds {len(rows)} rows")
            return cls(args=tuple(r[0] for r in rows), weights=tuple(r[1] for r in rows),
                       hyperbolic_limit=hyper, prime_limit=plimit)

    def covers(self, support) -> bool:
        support = ball(support)
        return (certainly('lt', support, self.hyperbolic_limit)
                and certainly('lt', support, self.prime_limit))

    def evaluate(self, xhat: Callable[[arb], arb], support) -> arb:
        """Sum of weight * xhat(arg) over rows with arg inside the support."""
        support = ball(support)
        if not self.covers(support):
            raise InsufficientData(
                f"[trace] data covers arguments below {self.hyperbolic_limit.str(8)} "
                f"(classes) and {self.prime_limit.str(8)} (prime powers); "
                f"support {support.str(8)} needs more")
        total = arb(0)
        for arg, w in zip(self.args, self.weights):
            if arg.lower() > support:
                break
            total += w * xhat(arg)
        return total

    def restricted(self, xhat: Callable[[arb], arb], support) -> "DTermCache":
        """The rows inside the support, with xhat(arg) folded into each weight."""
        support = ball(support)
        if not self.covers(support):
            raise InsufficientData(f"[trace] data does not cover support {support.str(8)}")
        args, weights = [], []
        for arg, w in zip(self.args, self.weights):
            if arg.lower() > support:
                break
            args.append(arg)
            weights.append(w * xhat(arg))
        return DTermCache(args=tuple(args), weights=tuple(weights),
                          hyperbolic_limit=support, prime_limit=support)

    def cosine_sum(self, T) -> arb:
        """Sum of weight * cos(2 pi T arg): the discrete term of cos(2 pi T t) xhat(t)."""
        T = ball(T)
        two_pi_T = 2 * arb.pi() * T
        total = arb(0)
        for arg, w in zip(self.args, self.weights):
            total += w * (two_pi_T * arg).cos()
        return total


def term_D(xhat: Callable[[arb], arb], support, db: ClassDB,
           pp_terms: Sequence[PrimePowerTerm], prime_limit: Optional[int] = None,
           prec: Optional[int] = None, cache: Optional[DTermCache] = None) -> arb:
    """
    Discrete term for a transform supported in [-support, support].

    Requires every t <= 2 cosh(pi support) in db and every prime power
    n <= e^(pi support) in pp_terms; InsufficientData otherwise.
    """
    with workprec(prec or config.DTERM_PREC):
        if cache is None:
            cache = DTermCache.build(db, pp_terms, prime_limit)
        return cache.evaluate(xhat, support)


# =============================================================================
# CONTINUOUS TERM
# =============================================================================

def term_C(mode: Union[CTermMode, str], bp: Optional[BetaParams] = None,
           pp: Optional[PhiParams] = None, T=0, cfg: Optional[RunConfig] = None,
           audit: Optional[ErrorBudget] = None) -> arb:
    """
    beta_over_t2:   C(beta(t)/(2 pi^2 t^2)) = int_0^4a beta(t) (cosh(pi t) - 1)/(pi t)^2 dt
    phi_cos_closed: C(cos(2 pi T t) phi-hat(t)/(2 pi^2 t^2)) = 2 V(-T) - 2 Re V(i/2 - T)
    """
    if isinstance(mode, str):
        mode = CTermMode(mode)
    cfg = _settings(cfg)
    with workprec(cfg.prec):
        if mode == CTermMode.BETA_OVER_T2:
            if bp is None:
                raise ValueError("beta_over_t2 needs BetaParams")
            profile = beta_profile(bp)
            pi = arb.pi()
            total = arb(0)
            for j, piece in enumerate(profile.pieces):
                f = lambda z, piece=piece: piece.value(z) * coshm1c(pi * z)
                g = Integrand(eval=f, eval_complex=f, name=f"C[beta:{j}]")
                total += integrate(g, profile.breakpoint(j), profile.breakpoint(j + 1),
                                   cfg.quad_nodes, cfg.prec, cfg.arcs, audit)
            return total
        if pp is None:
            raise ValueError("phi_cos_closed needs PhiParams")
        T = ball(T)
        shifted = V_eval(acb(-T, arb(1) / 2), pp)
        return 2 * V_eval(-T, pp) - 2 * shifted.real


# =============================================================================
# MAIN TERM OF THE COUNTING FUNCTION
# =============================================================================

def c0_constant(prec: Optional[int] = None) -> arb:
    """
    zeta(3)/(16 pi^3) - (2 L(2, chi_-4) + 3 sqrt(3) L(2, chi_-3))/(4 pi^2)
    - (zeta'(-1) - (log 2 + 1)/12)/(2 pi).
    """
    with workprec(prec):
        pi = arb.pi()
        first = constants('zeta3') / (16 * pi ** 3)
        second = (2 * constants('L2_chi_m4') + 3 * arb(3).sqrt() * constants('L2_chi_m3')) / (4 * pi ** 2)
        third = (constants('zeta_prime_m1') - (constants('log2') + 1) / 12) / (2 * pi)
        return first - second - third


def elliptic_remainder(T) -> arb:
    """The exponentially small remainder of the elliptic contribution to M(h0)."""
    T = ball(T)
    pi = arb.pi()
    inner = (arb(3).sqrt() / 12) * ((pi * T / 3).exp() * (8 * T + 12 / pi)
                                    + (-pi * T / 3).exp() * (4 * T + 3 / pi))
    return (-pi * T).exp() / (2 * pi) * (T + 1 / pi + inner)


def m_h0_negativity_guard(T) -> arb:
    """-(241/(5760 pi)) T^-2 + (17641/(161280 pi)) T^-4 + elliptic remainder; negative for T >= 4."""
    T = ball(T)
    pi = arb.pi()
    return -241 / (5760 * pi * T ** 2) + 17641 / (161280 * pi * T ** 4) + elliptic_remainder(T)


def m_h0_upper(T, prec: Optional[int] = None) -> arb:
    """T^3/36 - T^2 log T/pi + (3 + log(pi/2)) T^2/(2 pi) - 131 T/144 + log T/(24 pi) + C0."""
    with workprec(prec):
        T = ball(T)
        if not T >= 4:
            raise OutOfDomain("[trace] the M(h0) bound needs T >= 4")
        pi = arb.pi()
        logT = T.log()
        return (T ** 3 / 36 - T ** 2 * logT / pi + (3 + (pi / 2).log()) * T ** 2 / (2 * pi)
                - 131 * T / 144 + logT / (24 * pi) + c0_constant())


def h2_trace(bp: BetaParams, zeros: Optional[ZeroList], cfg: Optional[RunConfig] = None) -> arb:
    """Tr*(h2) over the supplied list."""
    cfg = _settings(cfg)
    return trace_spectral(lambda r: h2_eval(r, bp, cfg.quad_nodes, cfg.prec, cfg.arcs), zeros)
