import mpmath
import pytest
from flint import arb, acb

from models import DomainStraddle, OutOfDomain
from rigor import ball, pm, workprec
from specfun import (
    coshm1c, digamma_enclosure, log_gamma_remainder_bound, series_enclosure, sine_integral,
    sinhc, stirling_constant_numeric, stirling_constants, stirling_remainder, trigamma,
    trigamma_bounds, trigamma_check, trigamma_remainder,
)


def close(x: arb, expected, tol=1e-13) -> bool:
    return abs(float(x.mid()) - float(expected)) < tol


def test_digamma_at_one_is_minus_gamma():
    psi = digamma_enclosure(1, prec=128)
    assert psi.real.overlaps(-arb.const_euler())
    assert psi.imag.contains(0)


def test_digamma_complex_matches_mpmath():
    psi = digamma_enclosure((ball('0.5'), ball(3)))
    expected = mpmath.digamma(mpmath.mpc(0.5, 3))
    assert close(psi.real, expected.real)
    assert close(psi.imag, expected.imag)


@pytest.mark.parametrize('z', [0, -1, pm('1/10')])
def test_digamma_pole_straddle(z):
    with pytest.raises(DomainStraddle):
        digamma_enclosure(z)


def test_trigamma_real_and_complex():
    assert close(trigamma(ball('1.5')), mpmath.psi(1, 1.5))
    z = acb(ball('0.5'), ball(2))
    expected = mpmath.psi(1, mpmath.mpc(0.5, 2))
    value = trigamma(z)
    assert close(value.real, expected.real)
    assert close(value.imag, expected.imag)


@pytest.mark.parametrize('x', ['1/2', 1, 3, 10])
def test_trigamma_bounds_real(x):
    with workprec(128):
        z = ball(x)
        assert trigamma_bounds(z).contains(trigamma_remainder(z))


@pytest.mark.parametrize('z', [(1, 2), ('1/2', 5), (3, -1)])
def test_trigamma_bounds_complex(z):
    with workprec(128):
        w = acb(ball(z[0]), ball(z[1]))
        assert trigamma_bounds(w).contains(trigamma_remainder(w))


def test_trigamma_bounds_imaginary_axis():
    with workprec(128):
        w = acb(0, 4)
        assert trigamma_bounds(w).contains(trigamma_remainder(w))


def test_trigamma_check_records_observed_value():
    with workprec(128):
        region, observed, inside = trigamma_check(ball(1))
        # psi'(3/2) = pi^2/2 - 4
        expected = -(arb.pi() ** 2 / 2 - 4) + ball(11) / 12
        assert observed.overlaps(expected)
        assert inside
        assert observed < 0
        assert region.lower() < ball('-0.058')


def test_trigamma_check_complex():
    with workprec(128):
        region, observed, inside = trigamma_check(acb(2, 3))
        assert inside
        assert region.contains(observed)


def test_trigamma_bounds_domain():
    with pytest.raises(OutOfDomain):
        trigamma_bounds(ball('1/4'))


@pytest.mark.parametrize('z', [(1, 0), ('1/2', 3), (4, -7)])
def test_log_gamma_remainder_region(z):
    with workprec(128):
        w = acb(ball(z[0]), ball(z[1]))
        assert log_gamma_remainder_bound(w).contains(stirling_remainder(w))


def test_log_gamma_remainder_domain():
    with pytest.raises(OutOfDomain):
        log_gamma_remainder_bound(acb(ball('1/4'), 1))


def test_stirling_constants_closed_forms_stable_across_precision():
    for which in ('C_half', 'C_one'):
        low = stirling_constants(which, prec=128)
        high = stirling_constants(which, prec=256)
        assert low.overlaps(high)
        assert high.rad() < low.rad()


@pytest.mark.slow
@pytest.mark.parametrize('which', ['C_half', 'C_one'])
def test_stirling_constants_against_quadrature(which):
    closed = stirling_constants(which, prec=128)
    numeric = stirling_constant_numeric(which, height=20, n=40, prec=128)
    assert closed.overlaps(numeric)


@pytest.mark.parametrize('x', [1, '1/3', 5, 40])
def test_sine_integral_taylor_region(x):
    with mpmath.workdps(30):
        expected = mpmath.si(mpmath.mpf(ball(x).mid().str(30, radius=False)))
    assert close(sine_integral(x, prec=128), expected, 1e-14)


def test_sine_integral_known_value():
    assert abs(float(sine_integral(1).mid()) - 0.9460830703) < 1e-10


def test_sine_integral_asymptotic_region():
    with mpmath.workdps(30):
        expected = mpmath.si(200)
    value = sine_integral(200, prec=128)
    assert close(value, expected, 1e-14)


def test_sine_integral_is_odd():
    assert sine_integral(-3, prec=128).overlaps(-sine_integral(3, prec=128))


def test_series_enclosures_real():
    with workprec(128):
        t = ball('1/2')
        assert series_enclosure('sinh_over_t', t).contains(t.sinh() / t)
        assert series_enclosure('coshm1_over_t2', t).contains((t.cosh() - 1) / (t * t))


def test_series_enclosures_at_zero_ball():
    t = pm('1/10')
    assert series_enclosure('sinh_over_t', t).contains(1)
    assert series_enclosure('coshm1_over_t2', t).contains(ball('1/2'))


def test_series_enclosure_complex():
    with workprec(128):
        z = acb(ball('0.3'), ball('1.2'))
        assert series_enclosure('sinh_over_t', z).contains(z.sinh() / z)


def test_series_enclosure_outside_radius():
    with pytest.raises(OutOfDomain):
        series_enclosure('sinh_over_t', ball(5), N=0)


def test_holomorphic_helpers():
    with workprec(128):
        z = ball(3)
        assert sinhc(z).overlaps(z.sinh() / z)
        assert coshm1c(z).overlaps((z.cosh() - 1) / 9)
        assert sinhc(pm('1/100')).contains(1)
