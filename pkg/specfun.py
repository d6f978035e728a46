"""
maasscheck/specfun.py

Certified special functions and explicit remainder bounds.

Digamma, trigamma and log-gamma are delegated to Arb through python-flint;
this module adds the closed-form remainder regions used by the trace and
majorant computations, the Stirling constants, the sine integral and the
two Taylor enclosures with geometric tails.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Tuple, Union

from flint import arb, acb

import config
from models import DomainStraddle, OutOfDomain, SeriesKind, StirlingConstant
from rigor import ball, constants, current_prec, pm, to_fraction, widen_complex, workprec

logger = logging.getLogger(__name__)

Number = Union[arb, acb]


def _as_complex(z) -> acb:
    if isinstance(z, acb):
        return z
    if isinstance(z, tuple):
        return acb(ball(z[0]), ball(z[1]))
    return acb(ball(z))


def _contains_zero(z: Number) -> bool:
    if isinstance(z, acb):
        return z.real.contains(0) and z.imag.contains(0)
    return z.contains(0)


# =============================================================================
# GAMMA FAMILY
# =============================================================================

def _check_poles(z: acb) -> None:
    """Raise when z may meet a pole 0, -1, -2, ... of the gamma family."""
    if not z.imag.contains(0) or z.real > 0:
        return
    lo = z.real.lower()
    hi = z.real.upper()
    if not (lo.is_finite() and hi.is_finite()):
        raise DomainStraddle("[specfun] unbounded argument")
    top = min(math.floor(to_fraction(hi)), 0)
    if top >= to_fraction(lo):
        raise DomainStraddle(f"[specfun] argument meets the pole at {top}")


def digamma_enclosure(z, prec: Optional[int] = None) -> acb:
    """Enclosure of psi(z) for a complex ball z (or a (re, im) pair)."""
    with workprec(prec):
        z = _as_complex(z)
        _check_poles(z)
        return z.digamma()


def trigamma(z: Number) -> Number:
    """psi'(z) for a real or complex ball, shifted right before summing."""
    real = not isinstance(z, acb)
    w = ball(z) if real else z
    re = w if real else w.real
    _check_poles(acb(w) if real else w)
    shift = max(0, math.ceil(1 - float(re.mid())))
    acc = arb(0) if real else acb(0)
    for j in range(shift):
        acc += 1 / (w + j) ** 2
    if real:
        return acc + arb(2).zeta(w + shift)
    return acc + acb(2).zeta(w + shift)


def trigamma_remainder(z: Number) -> Number:
    """-z psi'(1/2 + z) + 1 - 1/(12 z^2), evaluated directly."""
    if _contains_zero(z):
        raise DomainStraddle("[specfun] trigamma remainder at zero")
    return -z * trigamma(z + arb(1) / 2) + 1 - 1 / (12 * z * z)


def trigamma_bounds(z) -> Number:
    """
    Region containing -z psi'(1/2 + z) + 1 - 1/(12 z^2).

    Real z >= 1/2: the interval [-7/(120 z^4), 0].
    Pure imaginary z: the disk of radius (112 + 105 pi)/(3840 |z|^4).
    Re z > 0: the disk of radius 7(sigma + |t|)/(120 sigma^5).
    """
    if isinstance(z, acb) and not z.imag.is_zero():
        sigma, t = z.real, z.imag
        if sigma.is_zero():
            r = (112 + 105 * arb.pi()) / (3840 * t ** 4)
            return widen_complex(acb(0), r)
        if not sigma > 0:
            raise OutOfDomain("[specfun] complex case needs Re z > 0")
        r = 7 * (sigma + abs(t)) / (120 * sigma ** 5)
        return widen_complex(acb(0), r)
    x = z.real if isinstance(z, acb) else ball(z)
    if not x >= arb(1) / 2:
        raise OutOfDomain("[specfun] real case needs z >= 1/2")
    lo = -7 / (120 * x ** 4)
    return lo.union(arb(0))


def trigamma_check(z) -> Tuple[Number, Number, bool]:
    """
    The region of trigamma_bounds next to the remainder evaluated directly,
    and whether the region contains it. A miss is logged as a warning.
    """
    region = trigamma_bounds(z)
    observed = trigamma_remainder(z)
    inside = region.contains(observed)
    if inside:
        logger.debug(f"[specfun] trigamma remainder {observed.str(12)} inside {region.str(12)}")
    else:
        logger.warning(f"[specfun] trigamma remainder {observed.str(12)} outside {region.str(12)}")
    return region, observed, inside


def stirling_main(z: acb) -> acb:
    """A(z) = (z - 1/2) log z - z + log(2 pi)/2 + 1/(12 z)."""
    half = arb(1) / 2
    return (z - half) * z.log() - z + (2 * arb.pi()).log() / 2 + 1 / (12 * z)


def stirling_remainder(z: acb) -> acb:
    """R(z) = log Gamma(z) - A(z), evaluated directly."""
    return z.lgamma() - stirling_main(z)


def log_gamma_remainder_bound(z) -> acb:
    """
    Disk containing R(z): center -1/(360 z^3), radius 2/(315 |z|^5).

    Valid for Re z >= 1/2, where the sector factor sec^6(arg z / 2) is at
    most 8.
    """
    z = _as_complex(z)
    if not z.real >= arb(1) / 2:
        raise OutOfDomain("[specfun] remainder bound needs Re z >= 1/2")
    center = -1 / (360 * z ** 3)
    return widen_complex(center, 2 / (315 * abs(z) ** 5))


def stirling_constants(which: Union[StirlingConstant, str], prec: Optional[int] = None) -> arb:
    """Closed forms of Re of the vertical-line integrals of R from 1/2 and from 1."""
    if isinstance(which, str):
        which = StirlingConstant(which)
    with workprec(prec):
        zp = constants('zeta_prime_m1')
        if which == StirlingConstant.C_HALF:
            return zp / 2 + arb.const_log2() / 12 + arb(1) / 48
        return -zp - arb(1) / 6


def stirling_constant_numeric(which: Union[StirlingConstant, str], height=20,
                              n: int = 40, prec: Optional[int] = None,
                              arcs: int = 64) -> arb:
    """
    Re of the integral of R(z) from sigma to sigma + i*oo by quadrature.

    The part above `height` uses the leading term -1/(360 z^3) exactly and
    bounds the rest by 1/(630 height^4).
    """
    from quad import Integrand, integrate_segments, pole_segments

    if isinstance(which, str):
        which = StirlingConstant(which)
    sigma = Fraction(1, 2) if which == StirlingConstant.C_HALF else Fraction(1)
    with workprec(prec):
        s = ball(sigma)

        def g(y: acb) -> acb:
            return acb(0, 1) * stirling_remainder(acb(s) + acb(0, 1) * y)

        def real_eval(y: arb) -> arb:
            return g(acb(y)).real

        def complex_eval(y: acb) -> acb:
            # holomorphic continuation of Re g on the real line
            return (g(y) + g(y.conjugate()).conjugate()) / 2

        f = Integrand(real_eval, complex_eval, name=f"R[{which.value}]")
        points = pole_segments(0, height, imag_pole=float(sigma))
        head = integrate_segments(f, points, n=n, prec=prec, arcs=arcs)
        H = ball(height)
        top = acb(s, H)
        tail = (-1 / (720 * top ** 2)).real
        return head + tail + pm(1 / (630 * H ** 4))


# =============================================================================
# SINE INTEGRAL
# =============================================================================

def _si_taylor(x: arb) -> arb:
    x2 = x * x
    term = x
    total = arb(0)
    k = 0
    target = arb(2) ** (-(current_prec() + 10))
    while True:
        total += term / (2 * k + 1)
        nxt = -term * x2 / ((2 * k + 2) * (2 * k + 3))
        ratio = x2 / ((2 * k + 4) * (2 * k + 5))
        if ratio < arb(1) / 2 and abs(nxt) < target:
            # remaining terms shrink at least geometrically with ratio 1/2
            return total + pm(2 * abs(nxt))
        term = nxt
        k += 1


def _si_asymptotic(x: arb) -> arb:
    # f(x) ~ sum (-1)^k (2k)!/x^(2k+1), g(x) ~ sum (-1)^k (2k+1)!/x^(2k+2);
    # both series envelop their functions
    inv = 1 / x
    inv2 = inv * inv
    f_term, g_term = inv, inv2
    f_sum, g_sum = arb(0), arb(0)
    k = 0
    target = arb(2) ** (-(current_prec() + 10))
    while True:
        f_sum += f_term
        g_sum += g_term
        f_next = -f_term * (2 * k + 1) * (2 * k + 2) * inv2
        g_next = -g_term * (2 * k + 2) * (2 * k + 3) * inv2
        shrinking = abs(g_next) < abs(g_term) and abs(f_next) < abs(f_term)
        if abs(g_next) < target or not shrinking:
            f_sum += pm(f_next)
            g_sum += pm(g_next)
            break
        f_term, g_term = f_next, g_next
        k += 1
    return arb.pi() / 2 - f_sum * x.cos() - g_sum * x.sin()


def sine_integral(x, prec: Optional[int] = None) -> arb:
    """Si(x), by Taylor series for moderate x and the asymptotic form beyond."""
    with workprec(prec) as bits:
        x = ball(x)
        if x < 0:
            return -sine_integral(-x, prec)
        if x.is_zero():
            return arb(0)
        size = float(abs(x).upper())
        if size >= max(0.7 * bits, 32.0) and x > 0:
            return _si_asymptotic(x)
        extra = int(1.45 * size) + 20
        with workprec(bits + extra):
            value = _si_taylor(x)
        return value + arb(0)


# =============================================================================
# TAYLOR ENCLOSURES
# =============================================================================

def series_enclosure(kind: Union[SeriesKind, str], t: Number,
                     N: int = config.DEFAULT_SERIES_ORDER,
                     prec: Optional[int] = None) -> Number:
    """
    sinh(t)/t or (cosh(t) - 1)/t^2 as a partial sum plus the geometric tail.

    Works for real and complex balls, including balls that contain 0.
    """
    if isinstance(kind, str):
        kind = SeriesKind(kind)
    with workprec(prec):
        mag2 = abs(t) ** 2
        if kind == SeriesKind.SINH_OVER_T:
            edge = (2 * N + 4) * (2 * N + 5)
            first = 1          # t^(2n)/(2n+1)!
        else:
            edge = (2 * N + 5) * (2 * N + 6)
            first = 2          # t^(2n)/(2n+2)!
        if not mag2 < edge:
            raise OutOfDomain(f"[specfun] |t|^2 must stay below {edge} for order {N}")
        t2 = t * t
        term = arb(1) / math.factorial(first)
        total = term
        for n in range(1, N + 1):
            term = term * t2 / ((2 * n + first - 1) * (2 * n + first))
            total = total + term
        fact = math.factorial(2 * N + 2 + first)
        tail = mag2 ** (N + 1) * edge / (fact * (edge - mag2))
        if isinstance(total, acb):
            return widen_complex(total, tail)
        return total + pm(tail)


def _order_for(z: Number) -> int:
    n = config.DEFAULT_SERIES_ORDER
    mag2 = float(abs(z).upper()) ** 2
    while (2 * n + 4) * (2 * n + 5) <= 2 * mag2 + 1:
        n += 4
    return n


def sinhc(z: Number) -> Number:
    """sinh(z)/z, defined as 1 at 0."""
    small = abs(z).upper() < ball(config.SINHC_SERIES_RADIUS)
    if small or _contains_zero(z):
        return series_enclosure(SeriesKind.SINH_OVER_T, z, _order_for(z))
    return z.sinh() / z


def coshm1c(z: Number) -> Number:
    """(cosh(z) - 1)/z^2, defined as 1/2 at 0."""
    s = sinhc(z / 2)
    return s * s / 2


def sinc(z: Number) -> Number:
    """sin(z)/z, defined as 1 at 0."""
    if isinstance(z, acb):
        return sinhc(acb(0, 1) * z)
    return ball(z).sinc()
