from fractions import Fraction

import pytest
from flint import arb

from arithdata import (
    class_number, db_build, db_info, db_io, db_verify, exhaustive_unit, from_bytes, is_fundamental,
    kronecker, l_value, local_factor, pqa_unit, prime_power_terms, prime_sieve,
    split_discriminant, squarefree_decomposition, to_bytes,
)
from models import ClassDB, FormatError


@pytest.mark.parametrize('t,expected', [
    (3, (5, 1)),
    (4, (12, 1)),
    (5, (21, 1)),
    (6, (8, 2)),
    (7, (5, 3)),
    (18, (5, 8)),
])
def test_split_discriminant(t, expected):
    d, l = split_discriminant(t)
    assert (d, l) == expected
    assert d * l * l == t * t - 4
    assert is_fundamental(d)


def test_split_discriminant_rejects_small_t():
    with pytest.raises(ValueError):
        split_discriminant(2)


def test_squarefree_decomposition():
    assert squarefree_decomposition(72) == (2, 6)
    assert squarefree_decomposition(1) == (1, 1)


@pytest.mark.parametrize('d,ok', [(5, True), (8, True), (12, True), (20, False), (9, False), (7, False)])
def test_is_fundamental(d, ok):
    assert is_fundamental(d) is ok


@pytest.mark.parametrize('a,n,expected', [(5, 2, -1), (8, 3, -1), (12, 5, -1), (13, 3, 1), (12, 2, 0)])
def test_kronecker(a, n, expected):
    assert kronecker(a, n) == expected


@pytest.mark.parametrize('d,unit', [(5, (1, 1)), (8, (2, 1)), (12, (4, 1)), (13, (3, 1)),
                                    (21, (5, 1)), (40, (6, 1))])
def test_pqa_unit_known(d, unit):
    assert pqa_unit(d) == unit


def test_pqa_matches_exhaustive_search():
    seen = {split_discriminant(t)[0] for t in range(3, 501)}
    for d in sorted(seen):
        u, v = pqa_unit(d)
        assert u * u - d * v * v in (4, -4)
        if v <= 2000:
            assert exhaustive_unit(d, 2000) == (u, v)


@pytest.mark.parametrize('d,h', [(5, 1), (8, 1), (12, 1), (13, 1), (40, 2), (60, 2), (65, 2),
                                 (229, 3), (316, 3)])
def test_class_numbers(d, h):
    assert class_number(d, 'bruteforce') == h
    assert class_number(d, 'analytic') == h


def test_l_value_matches_class_number_formula():
    # Q(sqrt 5): L(1, chi_5) = 2 log((1 + sqrt 5)/2) / sqrt 5
    value = l_value(5, 1, 1, 1, prec=128)
    golden = (1 + arb(5).sqrt()) / 2
    assert value.overlaps(2 * golden.log() / arb(5).sqrt())


@pytest.mark.parametrize('d,l,expected', [(5, 1, 1), (5, 3, 5), (5, 2, 4), (12, 1, 1)])
def test_local_factor(d, l, expected):
    assert local_factor(d, l).contains(expected)


def test_local_factor_prime_power():
    # p = 2, e = 3 with chi_5(2) = -1: 1 + 3 * 7 / 1
    assert local_factor(5, 8).contains(22)


def test_prime_sieve():
    assert prime_sieve(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_sieve(1) == []


def test_prime_power_terms():
    terms = prime_power_terms(10, prec=128)
    assert [t.n for t in terms] == [2, 3, 4, 5, 7, 8, 9]
    by_n = {t.n: t for t in terms}
    assert by_n[8].p == 2
    assert by_n[8].Lambda_n.overlaps(arb(2).log())
    assert by_n[8].xhat_arg.overlaps(3 * arb(2).log() / arb.pi())
    assert by_n[9].weight.overlaps(arb(3).log() / 9)


def test_db_build_identities(small_db):
    assert small_db.tmax == 120
    assert small_db.is_complete()
    for e in small_db.entries:
        assert e.d * e.l * e.l == e.t * e.t - 4
        assert e.unit_norm() in (4, -4)
        assert e.L1 > 0


def test_db_build_parallel_matches_serial():
    assert db_build(40, workers=2) == db_build(40)


def test_db_bytes_roundtrip(small_db):
    restored = from_bytes(to_bytes(small_db))
    assert restored == small_db
    assert restored.entry(50).L1.overlaps(small_db.entry(50).L1)


def test_db_io_file(tmp_path, small_db):
    path = str(tmp_path / 'db.bin')
    db_io('write', path, small_db)
    assert db_io('read', path) == small_db


def test_db_io_bad_mode(tmp_path):
    with pytest.raises(ValueError):
        db_io('append', str(tmp_path / 'x'))


@pytest.mark.parametrize('mangle', [
    lambda b: b'NOTMAASS' + b[8:],
    lambda b: b[:-3],
    lambda b: b + b'\x00',
    lambda b: b[:10],
])
def test_db_format_errors(small_db, mangle):
    with pytest.raises(FormatError):
        from_bytes(mangle(to_bytes(small_db)))


def test_db_verify_passes(small_db):
    result = db_verify(small_db, oracle_tmax=60)
    assert result['passed'], result['failures']
    assert result['classes_checked'] > 0
    assert result['units_checked'] > 0


def test_db_verify_catches_bad_class_number(small_db):
    broken = ClassDB(tmax=small_db.tmax, entries=[
        type(e)(**{**e.__dict__, 'h': e.h + 1}) if e.t == 10 else e for e in small_db.entries])
    result = db_verify(broken, oracle_tmax=20)
    assert not result['passed']
    assert any('d=' in msg for msg in result['failures'])


def test_db_info(small_db):
    info = db_info(small_db)
    assert info['tmax'] == 120
    assert info['entries'] == 118
    assert info['complete'] is True
    assert info['norm_minus_4'] > 0
