"""
maasscheck/rigor.py

Certified arithmetic kernel.

Every quantity in the package is carried as an Arb ball (python-flint `arb`
for reals, `acb` for the few complex evaluations). This module fixes the
conventions: how inputs become balls, how precision is scoped, how order
relations are decided, and how endpoints are printed.
"""

import logging
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

from flint import arb, acb, ctx, fmpq, fmpz

import config
from models import BallOp, ConstantName, DomainStraddle, Relation

logger = logging.getLogger(__name__)

BallLike = Union[arb, int, float, str, Fraction, fmpz, fmpq]


# =============================================================================
# PRECISION
# =============================================================================

@contextmanager
def workprec(bits: Optional[int]) -> Iterator[int]:
    """Run a block at `bits` of working precision, restoring the previous value."""
    old = ctx.prec
    if bits is not None:
        if bits < config.MIN_PREC:
            raise ValueError(f"precision must be at least {config.MIN_PREC} bits")
        ctx.prec = bits
    try:
        yield ctx.prec
    finally:
        ctx.prec = old


def current_prec() -> int:
    return ctx.prec


# =============================================================================
# CONSTRUCTION
# =============================================================================

def ball(value: BallLike, rad: Optional[BallLike] = None) -> arb:
    """
    Convert value to an arb ball, optionally widened by rad.

    Strings are parsed exactly: '7505/8192' and '0.842' both become the
    rational they denote before rounding to the current precision.
    """
    if isinstance(value, arb):
        x = value
    elif isinstance(value, acb):
        raise TypeError("complex value where a real ball is required")
    elif isinstance(value, str):
        x = _from_fraction(Fraction(value.strip()))
    elif isinstance(value, Fraction):
        x = _from_fraction(value)
    elif isinstance(value, fmpq):
        x = arb(value.p) / arb(value.q)
    elif isinstance(value, (int, fmpz, float)):
        x = arb(value)
    else:
        raise TypeError(f"cannot convert {type(value).__name__} to a ball")
    if rad is not None:
        x = x + pm(rad)
    return x


def _from_fraction(q: Fraction) -> arb:
    if q.denominator == 1:
        return arb(q.numerator)
    return arb(q.numerator) / q.denominator


def pm(rad: BallLike) -> arb:
    """The ball [-r, r] for r an upper bound of |rad|."""
    r = abs(ball(rad)).upper()
    return r.union(-r)


def interval(lo: BallLike, hi: BallLike) -> arb:
    """A ball containing [lo, hi]."""
    return ball(lo).union(ball(hi))


def hull(*values: arb) -> arb:
    """Smallest representable ball containing every argument."""
    if not values:
        raise ValueError("hull of nothing")
    out = values[0]
    for v in values[1:]:
        out = out.union(v)
    return out


def complex_ball(re: BallLike, im: BallLike = 0) -> acb:
    return acb(ball(re), ball(im))


def widen_complex(z: acb, rad: BallLike) -> acb:
    """Add [-rad, rad] to both parts of a complex ball."""
    r = pm(rad)
    return acb(z.real + r, z.imag + r)


def max_upper(values) -> arb:
    """Exact upper bound for the maximum of a collection of balls."""
    best = None
    for v in values:
        u = v.upper()
        best = u if best is None else best.union(u)
    if best is None:
        return arb(0)
    return best.upper()


def to_fraction(x: arb) -> Fraction:
    """Exact rational value of an exact (zero-radius) finite ball."""
    if not x.is_exact() or not x.is_finite():
        raise ValueError("to_fraction needs an exact finite ball")
    if x.is_zero():
        return Fraction(0)
    man, exp = x.man_exp()
    man, exp = int(man), int(exp)
    if exp >= 0:
        return Fraction(man * (1 << exp))
    return Fraction(man, 1 << (-exp))


def to_endpoints(x: arb) -> Tuple[Fraction, Fraction]:
    """Exact rational endpoints of a finite ball, for passing balls between processes."""
    return to_fraction(x.lower()), to_fraction(x.upper())


def from_endpoints(pair: Tuple[Fraction, Fraction]) -> arb:
    return interval(pair[0], pair[1])


# =============================================================================
# OPERATIONS
# =============================================================================

_UNARY = {
    BallOp.EXP: lambda x: x.exp(),
    BallOp.SIN: lambda x: x.sin(),
    BallOp.COS: lambda x: x.cos(),
    BallOp.SINH: lambda x: x.sinh(),
    BallOp.COSH: lambda x: x.cosh(),
    BallOp.TANH: lambda x: x.tanh(),
    BallOp.ATAN: lambda x: x.atan(),
}


def ball_arith(op: Union[BallOp, str], x: BallLike, y: Optional[BallLike] = None,
               prec: Optional[int] = None) -> arb:
    """
    Apply op to ball operands at the given precision.

    Raises DomainStraddle when the input set meets a singularity or branch
    point of op.
    """
    if isinstance(op, str):
        op = BallOp(op)
    if op.is_binary and y is None:
        raise ValueError(f"{op.value} needs two operands")
    with workprec(prec):
        x = ball(x)
        y = ball(y) if y is not None else None
        if op == BallOp.ADD:
            return x + y
        if op == BallOp.SUB:
            return x - y
        if op == BallOp.MUL:
            return x * y
        if op == BallOp.DIV:
            if y.contains(0):
                raise DomainStraddle(f"[rigor] division by a ball containing zero: {y.str(10)}")
            return x / y
        if op == BallOp.SQRT:
            if not x >= 0:
                raise DomainStraddle(f"[rigor] sqrt of a ball reaching below zero: {x.str(10)}")
            return x.sqrt()
        if op == BallOp.LOG:
            if not x > 0:
                raise DomainStraddle(f"[rigor] log of a ball touching zero or below: {x.str(10)}")
            return x.log()
        if op == BallOp.POW:
            return _pow(x, y)
        return _UNARY[op](x)


def _pow(x: arb, y: arb) -> arb:
    n = y.unique_fmpz() if y.is_exact() else None
    if n is not None:
        if n < 0 and x.contains(0):
            raise DomainStraddle("[rigor] negative power of a ball containing zero")
        return x ** int(n)
    if not x > 0:
        raise DomainStraddle("[rigor] real power of a ball touching zero or below")
    return (y * x.log()).exp()


def certainly(rel: Union[Relation, str], x: BallLike, y: BallLike) -> bool:
    """
    True only when rel holds for every pair of points of x and y.

    False means "not provable at this precision", never "provably false".
    """
    if isinstance(rel, str):
        rel = Relation.from_string(rel)
    x, y = ball(x), ball(y)
    if not (x.is_finite() and y.is_finite()):
        return False
    if rel == Relation.LT:
        return bool(x < y)
    if rel == Relation.LE:
        return bool(x <= y)
    if rel == Relation.GT:
        return bool(x > y)
    return bool(x >= y)


# =============================================================================
# CONSTANTS
# =============================================================================

def constants(name: Union[ConstantName, str], prec: Optional[int] = None) -> arb:
    """Enclosure of a named constant at the given precision."""
    if isinstance(name, str):
        name = ConstantName.from_string(name)
    with workprec(prec):
        if name == ConstantName.PI:
            return arb.pi()
        if name == ConstantName.EULER_GAMMA:
            return arb.const_euler()
        if name == ConstantName.ZETA3:
            return arb(3).zeta()
        if name == ConstantName.LOG2:
            return arb.const_log2()
        if name == ConstantName.ZETA_PRIME_M1:
            # Glaisher-Kinkelin: zeta'(-1) = 1/12 - log A
            return arb(1) / 12 - arb.const_glaisher().log()
        if name == ConstantName.L2_CHI_M4:
            return arb.const_catalan()
        # sum chi_{-3}(n)/n^2 = (zeta(2, 1/3) - zeta(2, 2/3)) / 9
        third = arb(1) / 3
        return (arb(2).zeta(third) - arb(2).zeta(2 * third)) / 9


# =============================================================================
# PRINTING
# =============================================================================

def _decimal(q: Fraction, digits: int, round_up: bool) -> str:
    scale = 10 ** digits
    n = q * scale
    i = -((-n.numerator) // n.denominator) if round_up else n.numerator // n.denominator
    sign = '-' if i < 0 else ''
    s = str(abs(i)).rjust(digits + 1, '0')
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def format_lower(x: arb, digits: int = config.REPORT_DIGITS) -> str:
    """Decimal string not above the lower endpoint of x."""
    if not x.is_finite():
        return '-inf'
    return _decimal(to_fraction(x.lower()), digits, round_up=False)


def format_upper(x: arb, digits: int = config.REPORT_DIGITS) -> str:
    """Decimal string not below the upper endpoint of x."""
    if not x.is_finite():
        return '+inf'
    return _decimal(to_fraction(x.upper()), digits, round_up=True)


def format_ball(x: arb, digits: int = config.REPORT_DIGITS) -> str:
    """Endpoint form [lo, hi] with outward rounding."""
    return f"[{format_lower(x, digits)}, {format_upper(x, digits)}]"


def format_fraction(q: Fraction, digits: int = config.REPORT_DIGITS) -> str:
    """Decimal form of an exact rational, truncated toward minus infinity."""
    if q.denominator == 1:
        return str(q.numerator)
    return _decimal(q, digits, round_up=False)
