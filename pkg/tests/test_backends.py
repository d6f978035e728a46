import pytest

from arithdata import is_fundamental, pqa_unit, split_discriminant
from backends import (
    AnalyticBackend, BruteForceBackend, available_backends, form_cycles, get_backend,
    l_value_series, reduced_forms,
)
from backends.analytic import terms_needed
from backends.bruteforce import is_reduced, rho


def test_registry():
    assert available_backends() == ['analytic', 'bruteforce']
    assert isinstance(get_backend('bruteforce'), BruteForceBackend)
    assert isinstance(get_backend('analytic'), AnalyticBackend)
    assert get_backend('analytic') is get_backend('analytic')


def test_unknown_backend():
    with pytest.raises(ValueError):
        get_backend('pari')


def test_reduced_forms_of_five():
    assert reduced_forms(5) == [(-1, 1, 1), (1, 1, -1)]
    assert all(is_reduced(f, 5) for f in reduced_forms(5))


def test_reduced_forms_reject_square():
    with pytest.raises(ValueError):
        reduced_forms(16)


def test_rho_permutes_reduced_forms():
    d = 229
    forms = set(reduced_forms(d))
    assert {rho(f, d) for f in forms} == forms


def test_cycles_partition_reduced_forms():
    d = 316
    cycles = form_cycles(d)
    flat = [f for c in cycles for f in c]
    assert sorted(flat) == reduced_forms(d)


def test_backends_agree_up_to_500():
    brute, analytic = get_backend('bruteforce'), get_backend('analytic')
    for d in sorted({split_discriminant(t)[0] for t in range(3, 501)}):
        assert is_fundamental(d)
        unit = pqa_unit(d)
        assert brute.class_number(d, unit) == analytic.class_number(d, unit)


def test_narrow_and_wide():
    # Q(sqrt 3): unit 2 + sqrt 3 of norm +1, so h+ = 2 h
    backend = get_backend('bruteforce')
    unit = pqa_unit(12)
    assert backend.narrow_class_number(12, unit) == 2
    assert backend.class_number(12, unit) == 1
    assert get_backend('analytic').narrow_class_number(12, unit) == 2


def test_analytic_series_encloses_value():
    # L(1, chi_5) = 2 log(golden ratio) / sqrt 5
    from flint import arb
    L = l_value_series(5, terms_needed(5, (1, 1)), prec=128)
    golden = (1 + arb(5).sqrt()) / 2
    assert L.contains(2 * golden.log() / arb(5).sqrt())
