import mpmath
import pytest
from flint import arb

from arithdata import prime_power_terms
from models import CTermMode, InsufficientData, OutOfDomain, RunConfig, ZeroList
from rigor import ball
from testfn import beta_eval, beta_profile, h2_hat, h2_hat_derivative, h2_profile
from traceformula import (
    DTermCache, c0_constant, elliptic_kernel, h_zero, hyperbolic_argument, m_h0_negativity_guard,
    m_h0_upper, term_C, term_D, term_E_h2, term_I_h2, term_P_h2, trace_spectral,
)

FAST = RunConfig(quad_nodes=60)


def mp_ball(t):
    return ball(mpmath.nstr(t, 25))


def breakpoints(bp, tail=False):
    a = mpmath.mpf(bp.a.mid().str(30, radius=False))
    points = [j * a for j in range(5)]
    return points + [mpmath.inf] if tail else points


def test_identity_term_matches_quadrature(default_beta):
    value = term_I_h2(default_beta, FAST)
    assert value.rad() < 1e-12
    f = lambda t: float(h2_hat_derivative(mp_ball(t), default_beta).mid()) / mpmath.sinh(mpmath.pi * t)
    expected = -mpmath.quad(f, breakpoints(default_beta, tail=True)) / (12 * mpmath.pi)
    assert abs(float(value.mid()) - float(expected)) < 1e-10


def test_elliptic_term_matches_quadrature(default_beta):
    value = term_E_h2(default_beta, FAST)
    kernel = lambda t: 1 / (8 * mpmath.cosh(mpmath.pi * t)) + 2 * mpmath.cosh(mpmath.pi * t) / (
        3 + 6 * mpmath.cosh(2 * mpmath.pi * t))
    f = lambda t: kernel(t) * float(h2_hat(mp_ball(t), default_beta).mid())
    expected = 2 * mpmath.quad(f, breakpoints(default_beta, tail=True))
    assert abs(float(value.mid()) - float(expected)) < 1e-10


def test_parabolic_term_matches_quadrature(default_beta):
    value = term_P_h2(default_beta, FAST)
    points = breakpoints(default_beta, tail=True)
    g = lambda t: float(h2_hat(mp_ball(t), default_beta).mid())
    dg = lambda t: float(h2_hat_derivative(mp_ball(t), default_beta).mid())
    h0 = 2 * mpmath.quad(g, points)
    g0 = float(h2_profile(default_beta).at_zero().mid())
    integral = mpmath.quad(lambda t: mpmath.log(4 * mpmath.sinh(mpmath.pi * t / 2)) * dg(t), points)
    expected = (g0 * (mpmath.log(mpmath.pi / 2) + 2 * mpmath.euler) / (2 * mpmath.pi)
                - h0 / 4 - integral / mpmath.pi)
    assert abs(float(value.mid()) - float(expected)) < 1e-9


def test_elliptic_kernel_at_zero():
    assert elliptic_kernel(arb(0)).overlaps(arb(1) / 8 + arb(2) / 9)


def test_h_zero_of_beta_is_beta_hat_at_zero(default_beta):
    # integral of beta over R is beta-hat(0) = c b^2
    assert h_zero(beta_profile(default_beta)).overlaps(default_beta.c * default_beta.b ** 2)


def test_h_zero_of_h2_is_positive(default_beta):
    assert h_zero(h2_profile(default_beta)) > 0


def test_continuous_term_beta(default_beta):
    value = term_C(CTermMode.BETA_OVER_T2, bp=default_beta, cfg=FAST)
    f = lambda t: float(beta_eval(mp_ball(t), default_beta).mid()) * 2 * (
        mpmath.sinh(mpmath.pi * t / 2) / (mpmath.pi * t)) ** 2
    expected = mpmath.quad(f, breakpoints(default_beta))
    assert abs(float(value.mid()) - float(expected)) < 1e-10


def test_continuous_term_accepts_mode_string(default_beta):
    by_name = term_C('beta_over_t2', bp=default_beta, cfg=FAST)
    by_enum = term_C(CTermMode.BETA_OVER_T2, bp=default_beta, cfg=FAST)
    assert by_name.overlaps(by_enum)


def test_continuous_term_needs_parameters():
    with pytest.raises(ValueError):
        term_C(CTermMode.BETA_OVER_T2)
    with pytest.raises(ValueError):
        term_C(CTermMode.PHI_COS_CLOSED, T=5)


def test_hyperbolic_argument():
    expected = mpmath.log((3 + mpmath.sqrt(5)) / 2) / mpmath.pi
    assert abs(float(hyperbolic_argument(3).mid()) - float(expected)) < 1e-15


def test_discrete_term_first_rows(small_db):
    # support 0.32 holds the class with t = 3 and the prime power n = 2
    primes = prime_power_terms(100)
    value = term_D(lambda t: arb(1), ball('0.32'), small_db, primes)
    golden = (1 + mpmath.sqrt(5)) / 2
    expected = (2 * mpmath.log(golden) / mpmath.sqrt(5) + mpmath.log(2) / 2) / mpmath.pi
    assert abs(float(value.mid()) - float(expected)) < 1e-14


def test_discrete_term_needs_data(small_db):
    primes = prime_power_terms(100)
    with pytest.raises(InsufficientData):
        term_D(lambda t: arb(1), 2, small_db, primes)


def test_discrete_cache_restriction(small_db):
    cache = DTermCache.build(small_db, prime_power_terms(100))
    assert cache.covers('1.2')
    assert not cache.covers('1.6')
    xhat = lambda t: 1 - t
    restricted = cache.restricted(xhat, '1.2')
    assert restricted.cosine_sum(0).overlaps(cache.evaluate(xhat, '1.2'))


def test_trace_spectral(synthetic_zeros):
    assert trace_spectral(lambda r: arb(1), synthetic_zeros).overlaps(arb(len(synthetic_zeros)))
    assert trace_spectral(lambda r: r, None).is_zero()
    squares = trace_spectral(lambda r: r * r, ZeroList(entries=[ball(2), ball(3)]))
    assert squares.overlaps(arb(13))


def test_c0_constant():
    with mpmath.workdps(30):
        pi = mpmath.pi
        l2_m3 = (mpmath.psi(1, mpmath.mpf(1) / 3) - mpmath.psi(1, mpmath.mpf(2) / 3)) / 9
        expected = (mpmath.zeta(3) / (16 * pi ** 3)
                    - (2 * mpmath.catalan + 3 * mpmath.sqrt(3) * l2_m3) / (4 * pi ** 2)
                    - (mpmath.zeta(-1, 1, 1) - (mpmath.log(2) + 1) / 12) / (2 * pi))
    assert abs(float(c0_constant().mid()) - float(expected)) < 1e-15


def test_m_h0_upper():
    T = mpmath.mpf(10)
    with mpmath.workdps(30):
        pi = mpmath.pi
        l2_m3 = (mpmath.psi(1, mpmath.mpf(1) / 3) - mpmath.psi(1, mpmath.mpf(2) / 3)) / 9
        c0 = (mpmath.zeta(3) / (16 * pi ** 3)
              - (2 * mpmath.catalan + 3 * mpmath.sqrt(3) * l2_m3) / (4 * pi ** 2)
              - (mpmath.zeta(-1, 1, 1) - (mpmath.log(2) + 1) / 12) / (2 * pi))
        expected = (T ** 3 / 36 - T ** 2 * mpmath.log(T) / pi + (3 + mpmath.log(pi / 2)) * T ** 2 / (2 * pi)
                    - 131 * T / 144 + mpmath.log(T) / (24 * pi) + c0)
    assert abs(float(m_h0_upper(10).mid()) - float(expected)) < 1e-12


def test_m_h0_domain():
    with pytest.raises(OutOfDomain):
        m_h0_upper(3)


@pytest.mark.parametrize('T', [4, 10, 100, 5000])
def test_m_h0_guard_negative(T):
    assert m_h0_negativity_guard(T) < 0
