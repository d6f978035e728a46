"""
maasscheck/testfn.py

The test-function family.

    beta-hat(r) = c sinc(pi a r)^8 (b^2 - r^2)   and its transform beta(t),
                                                 a piecewise polynomial on [0, 4a]
    h2-hat(t)   = (1 - beta(t)) / (2 pi^2 t^2)   and h2(r)
    phi-hat(t)  = the band-limited majorant profile with width X, smoothing delta
    V, F        = its double antiderivative and the gap F = V - max(0, r)
    k(r)        = the kernel of the main terms of the trace formula

Piecewise Fourier-side functions are carried as HatProfile objects so the
trace module can integrate them without knowing which one it was handed.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from flint import arb, acb

import config
from models import BetaParams, DomainStraddle, OutOfDomain, PhiParams
from quad import Integrand, exact_breakpoints, integrate_segments
from rigor import ball, certainly, current_prec, interval, pm, widen_complex, workprec
from specfun import sinc, sine_integral, trigamma

logger = logging.getLogger(__name__)

Number = Union[arb, acb]


# =============================================================================
# BETA PIECE TABLES
# =============================================================================

# beta(t) = k * sign * [pi^2 b^2 * sum BB[i] a^(7-i) t^i + sum PLAIN[i] a^(5-i) t^i]
# on [j a, (j+1) a), with k = c / (10080 pi^2 a^8)
_BB = (
    (4832, 0, -3360, 0, 1120, 0, -280, 70),
    (4944, -784, -1008, -3920, 5040, -2352, 504, -42),
    (2224, -24304, 38640, -27440, 10640, -2352, 280, -14),
    (32768, -57344, 43008, -17920, 4480, -672, 56, -2),
)
_PLAIN = (
    (-1680, 0, 3360, 0, -2100, 735),
    (-504, -5880, 15120, -11760, 3780, -441),
    (19320, -41160, 31920, -11760, 2100, -147),
    (21504, -26880, 13440, -3360, 420, -21),
)
_SIGN = (1, 1, -1, 1)


def beta_params(a, b, prec: Optional[int] = None) -> BetaParams:
    """
    Build BetaParams from (a, b), deriving c from beta(0) = 1.

    a and b may be anything rigor.ball accepts; '7505/8192' is exact.
    """
    with workprec(prec):
        a, b = ball(a), ball(b)
        if not (a > 0 and b > 0):
            raise OutOfDomain("[testfn] beta parameters a and b must be positive")
        bb = arb.pi() ** 2 * b * b
        k = 1 / (4832 * bb * a ** 7 - 1680 * a ** 5)
        c = 10080 * arb.pi() ** 2 * a ** 8 * k
        pieces = []
        for j in range(4):
            coeffs = []
            for i in range(8):
                v = bb * _BB[j][i] * a ** (7 - i)
                if i <= 5:
                    v += _PLAIN[j][i] * a ** (5 - i)
                coeffs.append(_SIGN[j] * k * v)
            if j == 0:
                # odd low-order terms vanish identically on the first piece
                coeffs[1] = arb(0)
                coeffs[3] = arb(0)
            pieces.append(tuple(coeffs))
        logger.debug(f"[testfn] beta normalization c = {c.str(15)}")
        return BetaParams(a=a, b=b, c=c, k=k, pieces=tuple(pieces))


def unconditional_b(prec: Optional[int] = None) -> arb:
    """sqrt(6 pi^2 - 1)/2, below which no spectral parameter exists."""
    with workprec(prec):
        return (6 * arb.pi() ** 2 - 1).sqrt() / 2


# =============================================================================
# HAT PROFILES
# =============================================================================

def _horner(coeffs, z):
    acc = 0 * z
    for coefficient in reversed(coeffs):
        acc = acc * z + coefficient
    return acc


def _derivative_coeffs(coeffs) -> Tuple:
    return tuple(i * coeffs[i] for i in range(1, len(coeffs)))


@dataclass(frozen=True)
class HatPiece:
    """g(t) = N(t) / t^power with N a polynomial, lowest degree first."""
    coeffs: Tuple[arb, ...]
    power: int = 0

    def value(self, z: Number) -> Number:
        n = _horner(self.coeffs, z)
        return n / z ** self.power if self.power else n

    def derivative(self, z: Number) -> Number:
        n = _horner(self.coeffs, z)
        dn = _horner(_derivative_coeffs(self.coeffs), z)
        if not self.power:
            return dn
        return (z * dn - self.power * n) / z ** (self.power + 1)

    def derivative_over_t(self, z: Number) -> Number:
        """g'(z)/z, finite at 0 when power is 0 and N has no linear term."""
        if self.power:
            return self.derivative(z) / z
        if len(self.coeffs) > 1 and not self.coeffs[1].is_zero():
            raise DomainStraddle("[testfn] g'(t)/t is singular at 0 for this piece")
        reduced = tuple(i * self.coeffs[i] for i in range(2, len(self.coeffs)))
        return _horner(reduced, z)

    def integral(self, lo: arb, hi: arb) -> arb:
        """Exact antiderivative difference over [lo, hi], 0 < lo unless power is 0."""
        total = arb(0)
        for i, c in enumerate(self.coeffs):
            e = i - self.power
            if e == -1:
                total += c * (hi.log() - lo.log())
            else:
                total += c * (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)
        return total

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


@dataclass(frozen=True)
class HatProfile:
    """
    An even Fourier-side test function given piecewise on [0, 4a].

    pieces[j] lives on [j a, (j+1) a]; `tail` is K / t^2 (or zero) on
    [4a, oo). The first piece must have power 0.
    """
    name: str
    a: arb
    pieces: Tuple[HatPiece, ...]
    tail: HatPiece

    @property
    def support(self) -> arb:
        return 4 * self.a

    def breakpoint(self, j: int) -> arb:
        return j * self.a

    def tail_constant(self) -> arb:
        """K with g(t) = K / t^2 beyond 4a (0 for compact support)."""
        if self.tail.is_zero:
            return arb(0)
        return self.tail.coeffs[0]

    def at_zero(self) -> arb:
        return self.pieces[0].coeffs[0]

    def _piecewise(self, t: arb, method: str) -> arb:
        t = abs(ball(t))
        out = None
        edges = [self.breakpoint(j) for j in range(len(self.pieces) + 1)]
        for j, piece in enumerate(self.pieces):
            lo, hi = edges[j], edges[j + 1]
            if t.upper() < lo or t.lower() > hi:
                continue
            clip = t.intersection(interval(lo.lower(), hi.upper()))
            v = getattr(piece, method)(clip)
            out = v if out is None else out.union(v)
        if not t.upper() < edges[-1]:
            clip = t.intersection(interval(edges[-1].lower(), t.upper()))
            v = getattr(self.tail, method)(clip)
            out = v if out is None else out.union(v)
        return out

    def value(self, t) -> arb:
        """g(t) for a real ball; the hull of both sides at a breakpoint."""
        return self._piecewise(t, 'value')

    def derivative(self, t) -> arb:
        """g'(t) for t >= 0."""
        if ball(t) < 0:
            raise OutOfDomain("[testfn] profile derivative is taken for t >= 0")
        return self._piecewise(t, 'derivative')

    def log_moment(self) -> arb:
        """Integral over [0, a] of log(t) g'(t), summed termwise on the first piece."""
        piece = self.pieces[0]
        log_a = self.a.log()
        total = arb(0)
        for i in range(1, len(piece.coeffs)):
            total += piece.coeffs[i] * self.a ** i * (log_a - arb(1) / i)
        return total


def beta_profile(bp: BetaParams) -> HatProfile:
    pieces = tuple(HatPiece(coeffs=p) for p in bp.pieces)
    return HatProfile(name="beta", a=bp.a, pieces=pieces, tail=HatPiece(coeffs=(arb(0),)))


def h2_profile(bp: BetaParams) -> HatProfile:
    """(1 - beta(t)) / (2 pi^2 t^2) as a profile with a 1/(2 pi^2 t^2) tail."""
    scale = 1 / (2 * arb.pi() ** 2)
    p = bp.pieces[0]
    # 1 - beta(t) = -(p2 t^2 + p4 t^4 + ...) since p0 = 1 and p1 = p3 = 0
    first = tuple([-p[2] * scale, arb(0)] + [-p[i] * scale for i in range(4, 8)])
    pieces = [HatPiece(coeffs=first)]
    for j in range(1, 4):
        q = bp.pieces[j]
        pieces.append(HatPiece(coeffs=tuple([(1 - q[0]) * scale] + [-c * scale for c in q[1:]]),
                               power=2))
    return HatProfile(name="h2", a=bp.a, pieces=tuple(pieces), tail=HatPiece(coeffs=(scale,), power=2))


# =============================================================================
# BETA AND H2
# =============================================================================

def beta_hat(r: Number, bp: BetaParams) -> Number:
    """c sinc(pi a r)^8 (b^2 - r^2) for a real or complex ball."""
    s = sinc(arb.pi() * bp.a * r)
    return bp.c * s ** 8 * (bp.b ** 2 - r * r)


def beta_eval(t, bp: BetaParams) -> arb:
    """beta(t) from the four piece polynomials; exactly 0 beyond 4a."""
    t = abs(ball(t))
    if t >= bp.support:
        return arb(0)
    return beta_profile(bp).value(t)


def h2_hat(t, bp: BetaParams) -> arb:
    """(1 - beta(t))/(2 pi^2 t^2), with the polynomial form of the first piece near 0."""
    return h2_profile(bp).value(t)


def h2_hat_derivative(t, bp: BetaParams) -> arb:
    return h2_profile(bp).derivative(t)


def h2_hat_at_zero(bp: BetaParams) -> arb:
    """Closed form c (pi^2 a^2 b^2 - 1) / (6 a^5 pi^4)."""
    pi = arb.pi()
    return bp.c * (pi ** 2 * bp.a ** 2 * bp.b ** 2 - 1) / (6 * bp.a ** 5 * pi ** 4)


def h2_log_moment_closed(bp: BetaParams) -> arb:
    """Closed form of the integral over [0, a] of log(t) h2-hat'(t)."""
    pi = arb.pi()
    x = pi ** 2 * bp.a ** 2 * bp.b ** 2
    return bp.c * ((195 - 130 * x) * bp.a.log() + 72 * x - 115) / (2880 * bp.a ** 5 * pi ** 4)


def _cosine_integrand(piece: HatPiece, r: arb, name: str) -> Integrand:
    two_pi_r = 2 * arb.pi() * r
    return Integrand(
        eval=lambda t: piece.value(t) * (two_pi_r * t).cos(),
        eval_complex=lambda z: piece.value(z) * (acb(two_pi_r) * z).cos(),
        name=name,
    )


def h2_eval(r, bp: BetaParams, n: int = config.DEFAULT_QUAD_NODES,
            prec: Optional[int] = None, arcs: int = config.DEFAULT_ARCS,
            audit=None) -> arb:
    """
    h2(r) = 2 * integral over [0, 4a] of h2-hat(t) cos(2 pi t r) dt plus the
    closed-form tail (2r/pi)[Si(8 a pi r) - pi/2 + cos(8 a pi r)/(8 a pi r)].
    """
    with workprec(prec):
        r = ball(r)
        if not r > 0:
            raise OutOfDomain("[testfn] h2_eval needs r > 0")
        profile = h2_profile(bp)
        a = bp.a
        # keep cos(2 pi r z) within e^20 on every disk
        cap = min(float(a.mid()), 20.0 / (2 * math.pi * float(r.upper())))
        body = arb(0)
        for j, piece in enumerate(profile.pieces):
            lo, hi = j * a, (j + 1) * a
            points = exact_breakpoints(lo, hi, width_cap=cap)
            f = _cosine_integrand(piece, r, f"h2[{j}]")
            body += integrate_segments(f, points, n, prec, arcs, audit)
        x = 8 * a * arb.pi() * r
        tail = 2 * r / arb.pi() * (sine_integral(x) - arb.pi() / 2 + x.cos() / x)
        return 2 * body + tail


# =============================================================================
# MAJORANT PROFILE
# =============================================================================

def _s3(x: arb) -> arb:
    """(sin x - x cos x)/x^3 for real x >= 0, by series below 1/2."""
    if x.upper() < ball(Fraction(1, 2)):
        x2 = x * x
        term = arb(1) / 3
        total = arb(0)
        m = 0
        target = arb(2) ** (-(current_prec() + 10))
        while True:
            total += term
            nxt = -term * x2 * (m + 2) / ((m + 1) * (2 * m + 4) * (2 * m + 5))
            if abs(nxt) < target:
                return total + pm(2 * abs(nxt))
            term = nxt
            m += 1
    return (x.sin() - x * x.cos()) / x ** 3


def _phi0_inner(v: arb) -> arb:
    pv = arb.pi() * v
    s = pv.sinc()
    return v / s + (1 - v) * pv.cos() / (s * s)


def _phi0_outer(v: arb) -> arb:
    x = arb.pi() * (1 - v)
    if x.lower() < 0:
        x = x.intersection(interval(0, x.upper()))
    s = x.sinc()
    return arb.pi() * v * v * x * _s3(x) / (s * s)


def varphi0_hat(u) -> arb:
    """(|u|/sinc(pi u) + (1-|u|) cos(pi u)/sinc^2(pi u)) on (-1, 1), zero outside."""
    v = abs(ball(u))
    if v.lower() >= 1:
        return arb(0)
    out = None
    half = ball(Fraction(1, 2))
    if v.lower() <= half:
        part = interval(v.lower(), half) if v.upper() > half else v
        out = _phi0_inner(part)
    if v.upper() >= half:
        top = arb(1) if v.upper() > 1 else v.upper()
        low = half if v.lower() < half else v.lower()
        part = interval(low, top)
        w = _phi0_outer(part)
        out = w if out is None else out.union(w)
    if v.upper() >= 1:
        out = out.union(arb(0))
    return out


def eta0_hat(u) -> arb:
    """The correction profile, supported on (-1, 1)."""
    v = abs(ball(u))
    if v.lower() >= 1:
        return arb(0)
    clipped = v.intersection(interval(v.lower(), 1)) if v.upper() > 1 else v
    pi = arb.pi()
    w = 1 - clipped
    inner = 2 * pi ** 2 / 3 * w ** 3 + 4 * w * (1 - (pi * clipped).cos()) - 8 / pi * (pi * clipped).sin()
    value = pi ** 2 / (4 + pi ** 2) * inner
    if v.upper() >= 1:
        value = value.union(arb(0))
    return value


def varphi_hat(t, pp: PhiParams) -> arb:
    """phi-hat(t) = phi0-hat(t/X) + delta t^2/(12 X^3)[2 eta(t/d) + eta((t+X)/d) + eta((t-X)/d)]."""
    t = abs(ball(t))
    X, d = pp.X, pp.delta
    if t.lower() >= X + d:
        return arb(0)
    correction = 2 * eta0_hat(t / d) + eta0_hat((t + X) / d) + eta0_hat((t - X) / d)
    return varphi0_hat(t / X) + d * t * t / (12 * X ** 3) * correction


def check_varphi_nonnegative(pp: PhiParams, points: Optional[Iterable] = None,
                             count: int = 512) -> Tuple[bool, List[arb]]:
    """
    Certify phi-hat(t) >= 0 at each point (default: an even grid on [0, X+delta)).

    Returns (all_certified, points_not_certified).
    """
    if points is None:
        end = pp.X + pp.delta
        points = [end * j / count for j in range(count)]
    failures = []
    for t in points:
        value = varphi_hat(t, pp)
        if not certainly('ge', value, 0):
            failures.append(ball(t))
    if failures:
        logger.warning(f"[testfn] phi-hat >= 0 not certified at {len(failures)} points")
    return not failures, failures


# =============================================================================
# GAP QUOTIENT AND V
# =============================================================================

def _sinc_sum(t: Number) -> Number:
    """f(t) = 2 sinc^2(pi t) + sinc^2(pi t + pi/2) + sinc^2(pi t - pi/2)."""
    pi = arb.pi()
    u = pi * t
    return 2 * sinc(u) ** 2 + sinc(u + pi / 2) ** 2 + sinc(u - pi / 2) ** 2


def _quartic_cos(u: Number) -> Number:
    """(1 - cos 2u - 2u^2)/(4 u^4), equal to -1/6 at 0."""
    if abs(u) < 1:
        u2 = u * u
        term = -arb(1) / 6 + 0 * u
        total = 0 * u
        m = 0
        target = arb(2) ** (-(current_prec() + 10))
        while True:
            total += term
            nxt = term * (-4 * u2) / ((2 * m + 5) * (2 * m + 6))
            if abs(nxt) < target:
                bound = 2 * abs(nxt)
                if isinstance(total, acb):
                    return widen_complex(total, bound)
                return total + pm(bound)
            term = nxt
            m += 1
    return (1 - (2 * u).cos() - 2 * u * u) / (4 * u ** 4)


def sinc_gap(t: Number) -> Number:
    """
    (f(t) - f(0))/t^2 with f the sinc-square sum, f(0) = 2 + 8/pi^2.

    Below |t| = 3/8 a rearranged form without the removable singularity is
    used; it is valid for complex balls as well.
    """
    pi = arb.pi()
    if abs(t) < ball(Fraction(3, 8)):
        u = pi * t
        u2 = u * u
        p = pi ** 2 / 4
        d = _quartic_cos(u)
        c = arb(1) / 2 + u2 * d
        rest = (6 - 2 * u2 / p - 4 * c * (u2 + p)) / (u2 - p) ** 2
        return pi ** 2 * (4 * d + rest)
    f0 = 2 + 8 / pi ** 2
    return (_sinc_sum(t) - f0) / (t * t)


def _pi_factor() -> arb:
    """24 (1 + 4/pi^2)."""
    return 24 * (1 + 4 / arb.pi() ** 2)


def _F_positive(r: Number, pp: PhiParams) -> Number:
    """F on r >= 0 (and its continuation): the form without |r|."""
    X, d = pp.X, pp.delta
    pi = arb.pi()
    xr = X * r
    bracket = -xr * trigamma(xr + arb(1) / 2) + 1 + d * d * sinc_gap(d * r) / (_pi_factor() * X * X)
    return (pi * xr).cos() ** 2 / (pi ** 2 * X) * bracket


def F_eval(r, pp: PhiParams) -> arb:
    """F(r) = V(r) - max(0, r); even, and finite at 0."""
    return _F_positive(abs(ball(r)), pp)


def F_complex(z: acb, pp: PhiParams) -> acb:
    """Holomorphic continuation of F from r > 0."""
    return _F_positive(z, pp)


def _positive_part(r: arb) -> arb:
    if r >= 0:
        return r
    if r <= 0:
        return arb(0)
    return interval(0, r.upper())


def V_eval(z, pp: PhiParams) -> Number:
    """
    V(z) for real or complex z.

    Real z: F(z) + max(0, z). Complex z: the closed form with psi'(1/2 - Xz),
    evaluated with extra working precision to absorb the cancellation at
    large |z|. Complex balls containing 0 raise DomainStraddle.
    """
    if isinstance(z, tuple):
        z = acb(ball(z[0]), ball(z[1]))
    if not isinstance(z, acb) or z.imag.is_zero():
        r = ball(z.real if isinstance(z, acb) else z)
        return F_eval(r, pp) + _positive_part(r)
    if z.real.contains(0) and z.imag.contains(0):
        raise DomainStraddle("[testfn] V at a complex ball containing 0")
    with workprec(current_prec() + 64):
        X, d = pp.X, pp.delta
        pi = arb.pi()
        xz = X * z
        bracket = (xz * trigamma(arb(1) / 2 - xz) + 1 - 1 / (12 * xz * xz)
                   + _sinc_sum(d * z) / (_pi_factor() * xz * xz))
        value = (pi * xz).cos() ** 2 / (pi ** 2 * X) * bracket
    return value + 0


def Fhat_zero(pp: PhiParams) -> arb:
    """F-hat(0) = (3(pi^2+4)X - 2 pi^2 delta) / (72 X^3 (pi^2+4))."""
    pi2 = arb.pi() ** 2
    X, d = pp.X, pp.delta
    return (3 * (pi2 + 4) * X - 2 * pi2 * d) / (72 * X ** 3 * (pi2 + 4))


def F_tail_constant(pp: PhiParams) -> arb:
    """
    K with F(r) <= K/(X^3 r^4) for |r| >= 1/delta.

    For delta = 0.842 the sharper 1/400 holds on all r != 0.
    """
    return 10 / (_pi_factor() * arb.pi() ** 4 * pp.delta ** 2)


def majorant_ratio() -> arb:
    """sqrt(0.35 (pi^2 + 4)), the least admissible X / delta."""
    return (ball(Fraction(7, 20)) * (arb.pi() ** 2 + 4)).sqrt()


def verify_majorant_hypotheses(pp: PhiParams,
                               pieces: int = config.MAJORANT_SUBDIVISIONS) -> Dict[str, bool]:
    """
    Re-check the numeric hypotheses behind F >= 0:

      ratio    X >= delta sqrt(0.35 (pi^2 + 4))
      gap      (f(t) - f(0))/t^2 > -5 on [0, 1/sqrt(12)]
      trigamma -c t psi'(1/2 + c t) + 1 - 5/(24 (1 + 4/pi^2) c^2) > 0 there
    """
    c = majorant_ratio()
    results = {'ratio': certainly('ge', pp.X, pp.delta * c)}
    end = 1 / arb(12).sqrt()
    gap_ok, tri_ok = True, True
    floor = ball(config.GAP_FLOOR)
    constant = 5 / (_pi_factor() * c * c)
    for j in range(pieces):
        cell = interval((end * j / pieces).lower(), (end * (j + 1) / pieces).upper())
        if gap_ok and not certainly('gt', sinc_gap(cell), floor):
            logger.warning(f"[testfn] gap quotient not above {config.GAP_FLOOR} on {cell.str(8)}")
            gap_ok = False
        ct = c * cell
        value = -ct * trigamma(ct + arb(1) / 2) + 1 - constant
        if tri_ok and not certainly('gt', value, 0):
            logger.warning(f"[testfn] trigamma condition not certified on {cell.str(8)}")
            tri_ok = False
    results['gap'] = gap_ok
    results['trigamma'] = tri_ok
    return results


# =============================================================================
# MAIN-TERM KERNEL
# =============================================================================

def _k_kernel(z: Number, re_psi: Number) -> Number:
    pi = arb.pi()
    first = z * (pi * z).tanh() / 12
    second = (arb(1) / 8 + (pi * z / 3).cosh() / (3 * arb(3).sqrt())) / (pi * z).cosh()
    third = ((2 * pi).log() - 2 * re_psi) / (2 * pi)
    return first + second + third


def k_eval(r) -> arb:
    """k(r) = r tanh(pi r)/12 + (1/8 + cosh(pi r/3)/(3 sqrt 3))/cosh(pi r) + (log 2pi - 2 Re psi(1+2ir))/(2 pi)."""
    r = ball(r)
    re_psi = acb(1, 2 * r).digamma().real
    return _k_kernel(r, re_psi)


def k_complex(z: acb) -> acb:
    """Continuation of k, with Re psi(1+2ir) read as (psi(1+2iz) + psi(1-2iz))/2."""
    iz2 = acb(0, 2) * z
    re_psi = ((1 + iz2).digamma() + (1 - iz2).digamma()) / 2
    return _k_kernel(z, re_psi)


# =============================================================================
# LARGE-T CLOSED FORMS
# =============================================================================

def largeT_bound_terms(T, pp: PhiParams) -> Tuple[arb, arb, arb, arb]:
    """
    The four closed-form bounds used for large T, in order:

      kTr   upper bound for the integral of [k(T+r) + k(T-r)] F(r)
      krFr  upper bound for 2 * integral of k(r) F(r)
      Vi2   upper bound for -2 Re V(i/2)
      Vi2T  upper bound for |2 Re V(i/2 - T)|

    Valid for T >= 10 with delta = 0.842.
    """
    T = ball(T)
    if not T >= 10:
        raise OutOfDomain("[testfn] large-T bounds need T >= 10")
    if not abs(pp.delta - ball(config.LARGE_DELTA)) < arb(2) ** -40:
        raise OutOfDomain(f"[testfn] large-T bounds are stated for delta = {float(config.LARGE_DELTA)}")
    X, d = pp.X, pp.delta
    pi2 = arb.pi() ** 2
    poly = 5 * T ** 4 + 15 * T ** 3 + 258 * T ** 2 + 20 * T + 264
    kTr = (T / (144 * X ** 2) - T * pi2 * d / (216 * X ** 3 * (pi2 + 4))
           + poly / (18000 * X ** 3 * (T - 2) ** 3 * (T + 2) ** 3))
    krFr = 1 / (15 * X ** 2)
    ch2 = (arb.pi() * X / 2).cosh() ** 2
    Vi2 = ch2 * (ball('0.09752') / X ** 3 + ball('0.3731') / X ** 5)
    Vi2T = ch2 / (X ** 5 * T ** 4) * (ball('0.07914') + ball('0.01183') / T)
    return kTr, krFr, Vi2, Vi2T


def large_X(T) -> arb:
    """X = log(T/5)/pi, the width used for large T."""
    return (ball(T) / 5).log() / arb.pi()
