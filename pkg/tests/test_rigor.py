from fractions import Fraction

import mpmath
import pytest
from flint import arb

from models import DomainStraddle
from rigor import (
    ball, ball_arith, certainly, constants, format_ball, format_fraction, format_lower,
    format_upper, from_endpoints, hull, interval, pm, to_endpoints, to_fraction, workprec,
)


def test_exact_string_parsing():
    x = ball('7505/8192')
    assert x.is_exact()
    assert to_fraction(x) == Fraction(7505, 8192)
    assert ball('0.1').contains(ball(Fraction(1, 10)))


def test_workprec_restores_previous():
    from flint import ctx
    before = ctx.prec
    with workprec(256) as bits:
        assert bits == 256
        assert ctx.prec == 256
    assert ctx.prec == before


def test_workprec_rejects_low_precision():
    with pytest.raises(ValueError):
        with workprec(10):
            pass


@pytest.mark.parametrize('op,x,y,expected', [
    ('add', '1/3', '2/3', 1),
    ('mul', 3, '1/3', 1),
    ('sub', 5, 2, 3),
    ('div', 1, 4, Fraction(1, 4)),
])
def test_ball_arith_encloses(op, x, y, expected):
    assert ball_arith(op, x, y).contains(ball(expected))


def test_ball_arith_exp_and_sqrt():
    assert ball_arith('exp', 0).contains(1)
    assert ball_arith('sqrt', 2, prec=200).overlaps(arb(2).sqrt())


@pytest.mark.parametrize('op,x,y', [
    ('div', 1, pm('1/10')),
    ('log', interval(-1, 1), None),
    ('sqrt', interval(-1, 1), None),
])
def test_ball_arith_domain_straddle(op, x, y):
    with pytest.raises(DomainStraddle):
        ball_arith(op, x, y)


def test_binary_op_needs_two_operands():
    with pytest.raises(ValueError):
        ball_arith('add', 1)


def test_certainly_is_conservative():
    a = interval(0, 1)
    b = interval('1/2', 2)
    assert not certainly('lt', a, b)
    assert not certainly('gt', a, b)
    assert certainly('<', a, 3)
    assert certainly('ge', 3, a)


@pytest.mark.parametrize('name,value', [
    ('pi', mpmath.pi),
    ('euler_gamma', mpmath.euler),
    ('zeta3', mpmath.zeta(3)),
    ('log2', mpmath.log(2)),
    ('catalan', mpmath.catalan),
])
def test_constants_match_mpmath(name, value):
    c = constants(name, prec=128)
    assert abs(float(c.mid()) - float(value)) < 1e-15
    assert c.rad() < 1e-30


def test_zeta_prime_at_minus_one():
    with mpmath.workdps(30):
        expected = mpmath.zeta(-1, derivative=1)
    assert abs(float(constants("zeta'(-1)").mid()) - float(expected)) < 1e-15


def test_l_chi_minus_three():
    # sum over n of chi_{-3}(n)/n^2
    with mpmath.workdps(30):
        expected = mpmath.nsum(lambda k: 1 / (3 * k + 1) ** 2 - 1 / (3 * k + 2) ** 2, [0, mpmath.inf])
    assert abs(float(constants('L2_chi_m3').mid()) - float(expected)) < 1e-14


def test_endpoints_roundtrip_encloses():
    x = arb(2).sqrt()
    lo, hi = to_endpoints(x)
    assert lo < hi
    assert from_endpoints((lo, hi)).contains(x)


def test_hull_and_interval():
    h = hull(ball(1), ball(3), ball(-2))
    assert h.contains(-2) and h.contains(3)
    assert interval(1, 2).contains(ball('3/2'))


def test_outward_printing():
    x = ball('1/3')
    assert format_lower(x, 5) == '0.33333'
    assert format_upper(x, 5) == '0.33334'
    assert format_ball(ball(-1), 2) == '[-1.00, -1.00]'
    assert format_fraction(Fraction(7, 2), 3) == '3.500'
    assert format_fraction(Fraction(5)) == '5'
