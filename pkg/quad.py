"""
maasscheck/quad.py

Certified definite integration.

Molin's double-exponential rule on [-1, 1] with error at most
exp(4 - 5n/log(5n)) times the supremum of |f| on the disk |z| <= 2.
Intervals are rescaled affinely; the supremum is taken over a cover of the
boundary circle by arc boxes, with an interior probe that turns a pole
inside the disk into DomainStraddle instead of a silently wrong bound.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

from flint import arb, acb

import config
from models import DomainStraddle, ErrorBudget, OutOfDomain, SupNotFinite
from rigor import ball, hull, pm, workprec

logger = logging.getLogger(__name__)

_QUARTERS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


# =============================================================================
# TYPES
# =============================================================================

@dataclass(frozen=True)
class MolinRule:
    """Nodes x_k = tanh(sinh(kh)) and weights for k = -n..n."""
    n: int
    prec: int
    h: arb
    nodes: Tuple[arb, ...]
    weights: Tuple[arb, ...]

    def error_factor(self) -> arb:
        """exp(4 - 5n/log(5n)), the multiplier of the supremum."""
        with workprec(self.prec):
            n = arb(self.n)
            return (4 - 5 * n / (5 * n).log()).exp()


@dataclass(frozen=True)
class Integrand:
    """
    A function given by a real evaluator and a complex one.

    `eval_complex` must enclose the holomorphic continuation of `eval` on
    any complex box it is handed. `sup_bound(center, half)` may supply an
    analytic bound for |f| on the disk of radius 2*half about center,
    replacing the boundary scan.
    """
    eval: Callable[[arb], arb]
    eval_complex: Optional[Callable[[acb], acb]] = None
    name: str = "f"
    sup_bound: Optional[Callable[[arb, arb], arb]] = field(default=None, compare=False)

    def rescaled(self, center: arb, half: arb) -> "Integrand":
        """The integrand w -> f(center + half*w) on [-1, 1]."""
        f, fc = self.eval, self.eval_complex
        return Integrand(
            eval=lambda w: f(center + half * w),
            eval_complex=(lambda z: fc(acb(center) + acb(half) * z)) if fc else None,
            name=f"{self.name}@[{center.str(5)}+-{half.str(5)}]",
        )


# =============================================================================
# RULE
# =============================================================================

@lru_cache(maxsize=64)
def molin_rule(n: int, prec: Optional[int] = None) -> MolinRule:
    """Build the rule with 2n+1 certified nodes and weights."""
    if n < 1:
        raise ValueError("node count must be at least 1")
    with workprec(prec) as bits:
        h = arb(5 * n).log() / n
        pos_x, pos_a = [], []
        for k in range(n + 1):
            kh = k * h
            s = kh.sinh()
            pos_x.append(s.tanh())
            pos_a.append(h * kh.cosh() / s.cosh() ** 2)
        nodes = tuple([-x for x in reversed(pos_x[1:])] + pos_x)
        weights = tuple(list(reversed(pos_a[1:])) + pos_a)
    return MolinRule(n=n, prec=bits, h=h, nodes=nodes, weights=weights)


def integrate_unit(f: Integrand, n: int, sup: arb, prec: Optional[int] = None) -> arb:
    """Sum a_k f(x_k), widened by the rule's error bound times sup."""
    sup = ball(sup)
    if not sup.is_finite():
        raise SupNotFinite(f"[quad] supremum for {f.name} is not finite: {sup}")
    rule = molin_rule(n, prec)
    with workprec(prec):
        total = arb(0)
        for x, a in zip(rule.nodes, rule.weights):
            total += a * f.eval(x)
        return total + pm(rule.error_factor() * sup.upper())


# =============================================================================
# BOUNDARY SUPREMUM
# =============================================================================

def _circle_box(rho0: Fraction, rho1: Fraction, th0: Fraction, th1: Fraction) -> acb:
    """Box containing {rho*e^(2 pi i theta)} for rho, theta in the given ranges."""
    re, im = [], []
    r0, r1 = ball(rho0), ball(rho1)
    for th in (th0, th1):
        c = (2 * ball(th)).cos_pi()
        s = (2 * ball(th)).sin_pi()
        for rho in (r0, r1):
            re.append(rho * c)
            im.append(rho * s)
    for q in _QUARTERS:
        if th0 <= q <= th1:
            c = (2 * ball(q)).cos_pi()
            s = (2 * ball(q)).sin_pi()
            re.append(r1 * c)
            im.append(r1 * s)
    return acb(hull(*re), hull(*im))


def _abs_bound(fc: Callable[[acb], acb], box: acb) -> Optional[arb]:
    try:
        v = fc(box)
    except DomainStraddle:
        return None
    m = abs(v)
    return m.upper() if m.is_finite() else None


def _arc_sup(fc, th0: Fraction, th1: Fraction, depth: int) -> arb:
    bound = _abs_bound(fc, _circle_box(Fraction(2), Fraction(2), th0, th1))
    if bound is not None:
        return bound
    if depth == 0:
        raise DomainStraddle(
            f"[quad] integrand not finite on boundary arc [{th0}, {th1}]; "
            "a pole lies on or near |z| = 2")
    mid = (th0 + th1) / 2
    left = _arc_sup(fc, th0, mid, depth - 1)
    right = _arc_sup(fc, mid, th1, depth - 1)
    return left.union(right).upper()


def _probe_sector(fc, rho0: Fraction, rho1: Fraction, th0: Fraction, th1: Fraction,
                  depth: int) -> None:
    if _abs_bound(fc, _circle_box(rho0, rho1, th0, th1)) is not None:
        return
    if depth == 0:
        raise DomainStraddle(
            f"[quad] integrand not finite inside the disk near "
            f"rho in [{rho0}, {rho1}], theta in [{th0}, {th1}]")
    rm, tm = (rho0 + rho1) / 2, (th0 + th1) / 2
    for r0, r1 in ((rho0, rm), (rm, rho1)):
        for t0, t1 in ((th0, tm), (tm, th1)):
            _probe_sector(fc, r0, r1, t0, t1, depth - 1)


def sup_on_boundary(f: Integrand, m: int = config.DEFAULT_ARCS,
                    prec: Optional[int] = None, probe_interior: bool = True) -> arb:
    """
    Upper bound for |f| on the circle |z| = 2.

    The circle is covered by m arc boxes. An arc whose enclosure is not
    finite is bisected up to ARC_REFINE_DEPTH times. When probe_interior is
    set, the disk itself is covered by sector boxes as well, so a pole
    strictly inside the disk is reported instead of missed.
    """
    if m < 8:
        raise ValueError("at least 8 boundary arcs are required")
    if f.eval_complex is None:
        raise SupNotFinite(f"[quad] {f.name} has no complex evaluator")
    with workprec(prec):
        if probe_interior:
            sectors = 16
            for j in range(sectors):
                _probe_sector(f.eval_complex, Fraction(0), Fraction(2),
                              Fraction(j, sectors), Fraction(j + 1, sectors),
                              config.WEDGE_REFINE_DEPTH)
        best = None
        for j in range(m):
            b = _arc_sup(f.eval_complex, Fraction(j, m), Fraction(j + 1, m),
                         config.ARC_REFINE_DEPTH)
            best = b if best is None else best.union(b)
        return best.upper()


# =============================================================================
# INTERVALS
# =============================================================================

def integrate(f: Integrand, t0, t1, n: int = config.DEFAULT_QUAD_NODES,
              prec: Optional[int] = None, arcs: int = config.DEFAULT_ARCS,
              audit: Optional[ErrorBudget] = None) -> arb:
    """
    Enclosure of the integral of f over [t0, t1].

    The caller must keep every pole of f at distance more than
    (t1 - t0) from the midpoint; `pole_segments` places breakpoints that do.
    """
    with workprec(prec):
        t0, t1 = ball(t0), ball(t1)
        if not t0 < t1:
            raise OutOfDomain(f"[quad] integration needs t0 < t1, got {t0} and {t1}")
        center = (t0 + t1) / 2
        half = (t1 - t0) / 2
        g = f.rescaled(center, half)
        if f.sup_bound is not None:
            sup = f.sup_bound(center, half)
        else:
            sup = sup_on_boundary(g, arcs, prec)
        inner = integrate_unit(g, n, sup, prec)
        if audit is not None:
            audit.add('quadrature', half * molin_rule(n, prec).error_factor() * sup)
        return half * inner


def integrate_segments(f: Integrand, breakpoints, n: int = config.DEFAULT_QUAD_NODES,
                       prec: Optional[int] = None, arcs: int = config.DEFAULT_ARCS,
                       audit: Optional[ErrorBudget] = None) -> arb:
    """Sum of `integrate` over consecutive breakpoints, in order."""
    total = arb(0)
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        total += integrate(f, lo, hi, n, prec, arcs, audit)
    return total


def integrate_geometric(f: Integrand, t0, segments: int = config.GEOMETRIC_SEGMENTS,
                        alpha=config.GEOMETRIC_ALPHA, n: int = config.DEFAULT_QUAD_NODES,
                        prec: Optional[int] = None, arcs: int = config.DEFAULT_ARCS,
                        audit: Optional[ErrorBudget] = None) -> arb:
    """Integral over [t0, t0*alpha^segments] on the segments [t0 a^j, t0 a^(j+1)]."""
    with workprec(prec):
        t0, alpha = ball(t0), ball(alpha)
        if not t0 > 0:
            raise OutOfDomain("[quad] geometric splitting needs t0 > 0")
        if not (alpha > 1 and alpha < 3):
            raise OutOfDomain("[quad] geometric ratio must lie in (1, 3)")
        total = arb(0)
        lo = t0
        for _ in range(segments):
            hi = lo * alpha
            total += integrate(f, lo, hi, n, prec, arcs, audit)
            lo = hi
        return total


def geometric_endpoint(t0, segments: int = config.GEOMETRIC_SEGMENTS,
                       alpha=config.GEOMETRIC_ALPHA) -> arb:
    """t0 * alpha^segments, the truncation point after integrate_geometric."""
    return ball(t0) * ball(alpha) ** segments


# =============================================================================
# POLE AVOIDANCE
# =============================================================================

def satisfies_pole_rule(t0, t1, rho) -> bool:
    """True when a real pole at rho < t0 lies outside the disk for [t0, t1]."""
    t0, t1, rho = ball(t0), ball(t1), ball(rho)
    return bool(t1 < 3 * t0 - 2 * rho)


def _max_width(s: float, rho: Optional[float], imag_pole: Optional[float]) -> float:
    k = config.SEGMENT_SAFETY
    widths = []
    if rho is not None:
        if rho >= s:
            raise OutOfDomain(f"[quad] real pole {rho} is not left of segment start {s}")
        # (s - rho) + w/2 >= k*w
        widths.append((s - rho) / (k - 0.5))
    if imag_pole is not None:
        # (s + w/2)^2 + y0^2 >= (k*w)^2
        q = k * k - 0.25
        widths.append((s + math.sqrt(s * s + 4 * q * (s * s + imag_pole ** 2))) / (2 * q))
    return min(widths) if widths else math.inf


def pole_segments(t0, t1, rho: Optional[float] = None, imag_pole: Optional[float] = None,
                  width_cap: Optional[float] = None, limit: int = 10000) -> List[Fraction]:
    """
    Breakpoints t0 = s_0 < s_1 < ... = t1 with every segment clear of the
    given poles: a real pole at rho (left of t0) and/or the pair +-i*imag_pole.

    Breakpoints are exact dyadic rationals; the disk containment they aim
    for is re-checked by the boundary scan, so float placement is safe.
    """
    t0, t1 = Fraction(t0), Fraction(t1)
    if not t0 < t1:
        raise OutOfDomain("[quad] segment placement needs t0 < t1")
    points = [t0]
    s = t0
    while s < t1:
        w = _max_width(float(s), rho, imag_pole)
        if width_cap is not None:
            w = min(w, float(width_cap))
        if w <= 1e-12:
            raise OutOfDomain(f"[quad] pole too close to {float(s)} to place a segment")
        step = Fraction(w).limit_denominator(1 << 20)
        if step <= 0 or step > Fraction(w):
            step = Fraction(math.floor(w * (1 << 20)), 1 << 20)
        nxt = min(s + step, t1)
        points.append(nxt)
        s = nxt
        if len(points) > limit:
            raise OutOfDomain("[quad] too many segments; pole too close to the interval")
    return points


def exact_breakpoints(lo: arb, hi: arb, rho: Optional[float] = None,
                      imag_pole: Optional[float] = None,
                      width_cap: Optional[float] = None) -> List[arb]:
    """
    pole_segments between two balls, keeping lo and hi themselves as ends.

    Interior points come from the float placement; the ends stay exact so
    adjacent pieces of a piecewise integrand meet without a gap.
    """
    inner = pole_segments(float(lo.mid()), float(hi.mid()), rho=rho,
                          imag_pole=imag_pole, width_cap=width_cap)[1:-1]
    points = [lo]
    for p in inner:
        q = ball(p)
        if q > points[-1] and q < hi:
            points.append(q)
    points.append(hi)
    return points
