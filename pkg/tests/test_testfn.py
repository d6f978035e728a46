from fractions import Fraction

import mpmath
import pytest
from flint import arb, acb

from models import OutOfDomain, PhiParams
from rigor import ball, certainly, workprec
from testfn import (
    F_eval, F_tail_constant, V_eval, beta_eval, beta_hat, beta_params, beta_profile,
    check_varphi_nonnegative, h2_eval, h2_hat, h2_hat_at_zero, h2_log_moment_closed, h2_profile,
    k_complex, k_eval, large_X, largeT_bound_terms, sinc_gap, unconditional_b, varphi_hat,
    verify_majorant_hypotheses,
)

MEDIUM = dict(X='2.55', delta='0.1')


def medium_params():
    return PhiParams(X=ball(MEDIUM['X']), delta=ball(MEDIUM['delta']))


def large_params(T=27400):
    return PhiParams(X=large_X(T), delta=ball('0.842'))


def mp_beta_hat(r, bp):
    a, b, c = (mpmath.mpf(x.mid().str(30, radius=False)) for x in (bp.a, bp.b, bp.c))
    return c * mpmath.sinc(mpmath.pi * a * r) ** 8 * (b * b - r * r)


def test_unconditional_b():
    assert abs(float(unconditional_b().mid()) - float(mpmath.sqrt(6 * mpmath.pi ** 2 - 1) / 2)) < 1e-14


def test_beta_normalized_at_zero(default_beta):
    assert beta_eval(0, default_beta).contains(1)


def test_beta_vanishes_beyond_support(default_beta):
    assert beta_eval(default_beta.support + 1, default_beta).is_zero()
    assert beta_eval(-(default_beta.support + 1), default_beta).is_zero()


def test_beta_pieces_join_continuously(default_beta):
    profile = beta_profile(default_beta)
    for j in range(1, 4):
        edge = profile.breakpoint(j)
        left = profile.pieces[j - 1].value(edge)
        right = profile.pieces[j].value(edge)
        assert abs(left - right) < ball('1e-9')


def test_beta_rejects_bad_parameters():
    with pytest.raises(OutOfDomain):
        beta_params(0, 1)


@pytest.mark.parametrize('t', ['0.05', '0.3', '0.6', '0.9', '1.2', '1.7', '2.0', '2.5', '2.9', '3.4'])
def test_beta_matches_inverse_transform(default_beta, t):
    tt = mpmath.mpf(t)
    with mpmath.workdps(20):
        expected = 2 * mpmath.quad(lambda r: mp_beta_hat(r, default_beta) * mpmath.cos(2 * mpmath.pi * r * tt),
                                   mpmath.linspace(0, 40, 161))
    assert abs(float(beta_eval(ball(t), default_beta).mid()) - float(expected)) < 1e-8


def test_beta_hat_real_and_complex_agree(default_beta):
    r = ball('1.25')
    real = beta_hat(r, default_beta)
    cplx = beta_hat(acb(r), default_beta)
    assert cplx.real.overlaps(real)
    assert beta_hat(ball(0), default_beta).overlaps(default_beta.c * default_beta.b ** 2)


def test_h2_hat_matches_definition(default_beta):
    for t in ('0.5', '1.2', '2.9'):
        tt = ball(t)
        direct = (1 - beta_eval(tt, default_beta)) / (2 * arb.pi() ** 2 * tt * tt)
        assert h2_hat(tt, default_beta).overlaps(direct)
    far = ball(10)
    assert h2_hat(far, default_beta).overlaps(1 / (2 * arb.pi() ** 2 * far * far))


def test_h2_closed_forms(default_beta):
    with workprec(128):
        bp = beta_params('7505/8192', unconditional_b())
        profile = h2_profile(bp)
        assert profile.at_zero().overlaps(h2_hat_at_zero(bp))
        assert profile.log_moment().overlaps(h2_log_moment_closed(bp))


def test_h2_eval_against_convolution(default_beta):
    # h2(r) = integral of beta-hat(s) (|r - s| - |r|) ds
    r = mpmath.mpf('0.5')
    with mpmath.workdps(20):
        points = sorted(set(list(mpmath.linspace(-40, 40, 321)) + [r]))
        expected = mpmath.quad(lambda s: mp_beta_hat(s, default_beta) * (abs(r - s) - abs(r)), points)
    value = h2_eval('1/2', default_beta, n=60)
    assert value.rad() < 1e-10
    assert abs(float(value.mid()) - float(expected)) < 1e-8


def test_h2_eval_needs_positive_r(default_beta):
    with pytest.raises(OutOfDomain):
        h2_eval(0, default_beta)


def test_varphi_hat_profile():
    pp = medium_params()
    assert abs(float(varphi_hat(0, pp).mid()) - 1) < 1e-12
    assert varphi_hat(pp.X + pp.delta + ball('0.01'), pp).is_zero()
    assert varphi_hat(-3, pp).is_zero()
    ok, failures = check_varphi_nonnegative(pp, points=[ball(x) for x in ('0.5', '1', '1.5', '2')])
    assert ok and not failures


def test_v_shift_identity_real():
    pp = medium_params()
    z = ball('1.3')
    assert (V_eval(z, pp) - V_eval(-z, pp)).overlaps(z)


def test_v_shift_identity_complex():
    with workprec(128):
        pp = medium_params()
        z = acb(ball('1.3'), ball('0.4'))
        diff = V_eval((ball('1.3'), ball('0.4')), pp) - V_eval((ball('-1.3'), ball('-0.4')), pp)
        assert diff.overlaps(z)


@pytest.mark.parametrize('r', ['0', '0.1', '1', '3'])
def test_F_nonnegative_medium(r):
    assert certainly('ge', F_eval(ball(r), medium_params()), 0)


@pytest.mark.parametrize('r', [1, 2, 3])
def test_F_large_decay(r):
    pp = large_params()
    bound = 1 / (400 * pp.X ** 3 * ball(r) ** 4)
    assert certainly('le', F_eval(ball(r), pp), bound)


def test_F_tail_constant_medium():
    pp = medium_params()
    r = ball('12.3')
    K = F_tail_constant(pp)
    assert certainly('le', F_eval(r, pp), K / (pp.X ** 3 * r ** 4))


def test_sinc_gap_at_zero():
    # (f(t) - f(0))/t^2 tends to about -4.853
    assert abs(float(sinc_gap(ball('1e-6')).mid()) + 4.853) < 1e-3


def test_majorant_hypotheses_medium():
    checks = verify_majorant_hypotheses(medium_params(), pieces=256)
    assert checks == {'ratio': True, 'gap': True, 'trigamma': True}


def test_majorant_ratio_failure():
    pp = PhiParams(X=ball('0.1'), delta=ball('0.1'))
    assert verify_majorant_hypotheses(pp, pieces=8)['ratio'] is False


def test_k_at_zero():
    assert abs(float(k_eval(0).mid()) - 0.79369) < 1e-5


def test_k_complex_continuation():
    r = ball('1.7')
    assert k_complex(acb(r)).real.overlaps(k_eval(r))


def test_large_bound_terms():
    pp = large_params()
    terms = largeT_bound_terms(27400, pp)
    assert len(terms) == 4
    assert all(t.is_finite() for t in terms)
    kTr, krFr, Vi2, Vi2T = terms
    assert krFr > 0 and Vi2 > 0 and Vi2T > 0


def test_large_bound_domain():
    with pytest.raises(OutOfDomain):
        largeT_bound_terms(5, large_params())
    with pytest.raises(OutOfDomain):
        largeT_bound_terms(100, medium_params())


def test_large_X():
    assert abs(float(large_X(27400).mid()) - float(mpmath.log(5480) / mpmath.pi)) < 1e-14
