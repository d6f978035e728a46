from fractions import Fraction

import pytest
from flint import arb, acb

from models import DomainStraddle, ErrorBudget, OutOfDomain
from quad import (
    Integrand, integrate, integrate_geometric, integrate_segments, integrate_unit, molin_rule,
    pole_segments, satisfies_pole_rule, sup_on_boundary,
)
from rigor import ball


def exp_integrand():
    return Integrand(lambda x: x.exp(), lambda z: z.exp(), name='exp')


def test_rule_shape():
    rule = molin_rule(20, prec=128)
    assert len(rule.nodes) == 41
    assert len(rule.weights) == 41
    assert all(a < b for a, b in zip(rule.nodes, rule.nodes[1:]))
    assert all(w > 0 for w in rule.weights)


def test_rule_rejects_zero_nodes():
    with pytest.raises(ValueError):
        molin_rule(0)


def test_exp_on_unit_interval():
    f = exp_integrand()
    exact = arb(1).exp() - (-arb(1)).exp()
    value = integrate(f, -1, 1, n=20)
    assert value.contains(exact)
    sup = sup_on_boundary(f)
    assert value.rad() <= molin_rule(20).error_factor() * sup * (1 + ball('1/1000'))


def test_error_radius_shrinks_with_nodes():
    f = exp_integrand()
    radii = [integrate(f, -1, 1, n=n).rad() for n in (10, 20, 40)]
    assert radii[0] > radii[1] > radii[2]


def test_boundary_sup_of_exp():
    sup = sup_on_boundary(exp_integrand())
    e2 = arb(2).exp()
    assert sup >= ball('7.389')
    assert sup < e2 * ball('1.05')


def test_integrate_unit_with_given_sup():
    f = exp_integrand()
    value = integrate_unit(f, 30, arb(2).exp())
    assert value.contains(arb(1).exp() - (-arb(1)).exp())


def test_pole_inside_disk_is_reported():
    f = Integrand(lambda x: 1 / (x - ball('1/2')), lambda z: 1 / (z - acb(ball('1/2'))), name='pole')
    with pytest.raises(DomainStraddle):
        integrate(f, -1, 1, n=10)


def test_reversed_interval_rejected():
    with pytest.raises(OutOfDomain):
        integrate(exp_integrand(), 1, 0)


def test_audit_collects_quadrature_budget():
    budget = ErrorBudget()
    integrate(exp_integrand(), 0, 1, n=20, audit=budget)
    assert 'quadrature' in budget.entries
    assert budget.total() > 0


def test_geometric_splitting_of_inverse_square():
    f = Integrand(lambda x: 1 / (x * x), lambda z: 1 / (z * z), name='t^-2')
    alpha = Fraction(2)
    value = integrate_geometric(f, 1, segments=3, alpha=alpha, n=40)
    assert value.contains(1 - ball(Fraction(1, 8)))


def test_segments_concatenate():
    f = exp_integrand()
    whole = integrate(f, 0, 2, n=30)
    split = integrate_segments(f, [0, Fraction(1, 2), 2], n=30)
    assert whole.overlaps(split)


def test_pole_segments_respect_real_pole():
    points = pole_segments(1, 10, rho=0)
    assert points[0] == 1 and points[-1] == 10
    assert all(a < b for a, b in zip(points, points[1:]))
    assert all(satisfies_pole_rule(a, b, 0) for a, b in zip(points, points[1:]))
    assert all(isinstance(p, Fraction) for p in points)


def test_pole_segments_width_cap():
    points = pole_segments(0, 4, imag_pole=1.0, width_cap=Fraction(1, 2))
    assert len(points) >= 9
    assert all(b - a <= Fraction(1, 2) for a, b in zip(points, points[1:]))


def test_pole_segments_reject_pole_to_the_right():
    with pytest.raises(OutOfDomain):
        pole_segments(1, 2, rho=3)
