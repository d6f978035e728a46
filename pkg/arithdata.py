"""
maasscheck/arithdata.py

Arithmetic data behind the hyperbolic and prime terms of the trace formula.

For each t >= 3 we write t^2 - 4 = d l^2 with d a fundamental discriminant,
find the proper fundamental unit (u + v sqrt d)/2 by the PQA continued
fraction, and the class number h paired with it in Dirichlet's formula
L(1, chi_d) = 2 h log((u + v sqrt d)/2) / sqrt(d).

Databases are persisted in a small versioned binary format; L(1, chi_d) is
recomputed on load at the reader's precision.
"""

import logging
import struct
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Optional, Tuple

from flint import arb, fmpz

import config
from models import ClassDB, ClassEntry, FormatError, PrimePowerTerm
from rigor import workprec

logger = logging.getLogger(__name__)

_HEADER = struct.Struct('<8sIQ')
_RECORD = struct.Struct('<QQQQ')
_LENGTH = struct.Struct('<I')


# =============================================================================
# DISCRIMINANTS AND CHARACTERS
# =============================================================================

def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """(m, k) with n = m k^2 and m squarefree."""
    m, k = 1, 1
    for p, e in fmpz(n).factor():
        p = int(p)
        m *= p ** (e % 2)
        k *= p ** (e // 2)
    return m, k


def is_fundamental(d: int) -> bool:
    if d <= 1:
        return False
    if d % 4 == 1:
        return squarefree_decomposition(d)[1] == 1
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree_decomposition(m)[1] == 1
    return False


def split_discriminant(t: int) -> Tuple[int, int]:
    """(d, l) with t^2 - 4 = d l^2 and d a fundamental discriminant."""
    if t < 3:
        raise ValueError("t must be at least 3")
    m, k = squarefree_decomposition(t * t - 4)
    if m % 4 == 1:
        return m, k
    # m = 2, 3 (mod 4): 4 | m k^2 forces k even
    return 4 * m, k // 2


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1."""
    if n < 1:
        raise ValueError("kronecker symbol needs n >= 1")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(fmpz(a).jacobi(n))


# =============================================================================
# UNITS
# =============================================================================

def pqa_unit(d: int) -> Tuple[int, int]:
    """
    Proper fundamental unit (u, v): least v > 0 with u^2 - d v^2 = +-4.

    Runs the PQA recurrence on (P0 + sqrt D)/Q0 with (D, P0, Q0) = (d, 1, 2)
    for d = 1 (mod 4) and (d/4, 0, 1) for d = 0 (mod 4); the period ends at
    the first i with Q_(i+1) = Q0, and (G_i, B_i) give the unit.
    """
    if d % 4 == 1:
        D, P, Q, scale = d, 1, 2, 1
    elif d % 4 == 0:
        D, P, Q, scale = d // 4, 0, 1, 2
    else:
        raise ValueError(f"{d} is not a discriminant")
    q0 = Q
    root = isqrt(D)
    g_prev2, g_prev = -P, Q
    b_prev2, b_prev = 1, 0
    while True:
        a = (P + root) // Q
        g = a * g_prev + g_prev2
        b = a * b_prev + b_prev2
        P = a * Q - P
        Q = (D - P * P) // Q
        if Q == q0:
            u, v = scale * g, b
            break
        g_prev2, g_prev = g_prev, g
        b_prev2, b_prev = b_prev, b
    norm = u * u - d * v * v
    if norm not in (4, -4):
        raise ArithmeticError(f"PQA produced ({u}, {v}) of norm {norm} for d={d}")
    return u, v


def exhaustive_unit(d: int, vmax: int = config.DEFAULT_UNIT_VMAX) -> Optional[Tuple[int, int]]:
    """Search v = 1..vmax for the least solution of u^2 - d v^2 = +-4."""
    for v in range(1, vmax + 1):
        for sign in (-4, 4):
            sq = d * v * v + sign
            if sq > 0:
                u = isqrt(sq)
                if u * u == sq:
                    return u, v
    return None


def unit_log(d: int, u: int, v: int) -> arb:
    """log((u + v sqrt d)/2) at the current precision."""
    return ((u + v * arb(d).sqrt()) / 2).log()


# =============================================================================
# CLASS NUMBERS AND L-VALUES
# =============================================================================

def class_number(d: int, backend: str = config.DEFAULT_BACKEND,
                 unit: Optional[Tuple[int, int]] = None) -> int:
    """Class number paired with the proper fundamental unit."""
    from backends import get_backend
    return get_backend(backend).class_number(d, unit)


def l_value(d: int, h: int, u: int, v: int, prec: Optional[int] = None) -> arb:
    """L(1, chi_d) = 2 h log((u + v sqrt d)/2) / sqrt d."""
    with workprec(prec):
        return 2 * h * unit_log(d, u, v) / arb(d).sqrt()


def local_factor(d: int, l: int) -> arb:
    """Product over p | l of 1 + (p - chi_d(p)) (p^e - 1)/(p - 1), p^e || l."""
    value = Fraction(1)
    for p, e in fmpz(l).factor():
        p = int(p)
        chi = kronecker(d, p)
        value *= 1 + Fraction((p - chi) * (p ** e - 1), p - 1)
    return arb(value.numerator) / value.denominator


# =============================================================================
# PRIMES
# =============================================================================

def prime_sieve(limit: int) -> List[int]:
    """Primes up to limit."""
    if limit < 2:
        return []
    mark = bytearray([1]) * (limit + 1)
    mark[0] = mark[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if mark[p]:
            mark[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
    return [n for n in range(limit + 1) if mark[n]]


def prime_power_terms(limit: int, prec: Optional[int] = None) -> List[PrimePowerTerm]:
    """Every prime power n <= limit with Lambda(n) = log p and log(n)/pi."""
    terms = []
    with workprec(prec):
        pi = arb.pi()
        for p in prime_sieve(limit):
            log_p = arb(p).log()
            n, k = p, 1
            while n <= limit:
                terms.append(PrimePowerTerm(n=n, p=p, Lambda_n=log_p, xhat_arg=k * log_p / pi))
                n *= p
                k += 1
    terms.sort(key=lambda term: term.n)
    return terms


# =============================================================================
# DATABASE BUILD
# =============================================================================

def _unit_and_class(job: Tuple[int, str]) -> Tuple[int, int, int, int]:
    d, backend = job
    u, v = pqa_unit(d)
    return d, class_number(d, backend, (u, v)), u, v


def db_build(tmax: int, backend: str = config.DEFAULT_BACKEND, prec: Optional[int] = None,
             workers: int = 1) -> ClassDB:
    """One entry for every t in [3, tmax]."""
    if tmax < 3:
        raise ValueError("tmax must be at least 3")
    splits = {t: split_discriminant(t) for t in range(3, tmax + 1)}
    jobs = sorted({d for d, _ in splits.values()})
    logger.info(f"[arithdata] building t <= {tmax}: {len(jobs)} discriminants via {backend}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_unit_and_class, [(d, backend) for d in jobs], chunksize=16))
    else:
        rows = [_unit_and_class((d, backend)) for d in jobs]
    table = {d: (h, u, v) for d, h, u, v in rows}
    entries = []
    for t, (d, l) in splits.items():
        h, u, v = table[d]
        entries.append(ClassEntry(t=t, d=d, l=l, h=h, u=u, v=v, L1=l_value(d, h, u, v, prec)))
    return ClassDB(tmax=tmax, entries=entries)


# =============================================================================
# DATABASE FILES
# =============================================================================

def _pack_int(n: int) -> bytes:
    raw = n.to_bytes(max(1, (n.bit_length() + 7) // 8), 'little')
    return _LENGTH.pack(len(raw)) + raw


def to_bytes(db: ClassDB) -> bytes:
    chunks = [_HEADER.pack(config.DB_MAGIC, db.format_version, db.tmax)]
    for e in db.entries:
        chunks.append(_RECORD.pack(e.t, e.d, e.l, e.h))
        chunks.append(_pack_int(e.u))
        chunks.append(_pack_int(e.v))
    return b''.join(chunks)


def from_bytes(data: bytes, prec: Optional[int] = None) -> ClassDB:
    if len(data) < _HEADER.size:
        raise FormatError("[arithdata] file shorter than its header")
    magic, version, tmax = _HEADER.unpack_from(data, 0)
    if magic != config.DB_MAGIC:
        raise FormatError(f"[arithdata] bad magic {magic!r}")
    if version != config.DB_FORMAT_VERSION:
        raise FormatError(
            f"[arithdata] format version {version}, expected {config.DB_FORMAT_VERSION}")
    offset = _HEADER.size
    entries = []

    def take(struct_: struct.Struct):
        nonlocal offset
        if offset + struct_.size > len(data):
            raise FormatError(f"[arithdata] truncated record at byte {offset}")
        out = struct_.unpack_from(data, offset)
        offset += struct_.size
        return out

    def take_int() -> int:
        nonlocal offset
        (length,) = take(_LENGTH)
        if offset + length > len(data):
            raise FormatError(f"[arithdata] truncated integer at byte {offset}")
        n = int.from_bytes(data[offset:offset + length], 'little')
        offset += length
        return n

    for _ in range(max(tmax - 2, 0)):
        t, d, l, h = take(_RECORD)
        u, v = take_int(), take_int()
        entries.append(ClassEntry(t=t, d=d, l=l, h=h, u=u, v=v, L1=l_value(d, h, u, v, prec)))
    if offset != len(data):
        raise FormatError(f"[arithdata] {len(data) - offset} trailing bytes")
    db = ClassDB(tmax=tmax, entries=entries, format_version=version)
    if not db.is_complete():
        raise FormatError("[arithdata] records do not run over t = 3..tmax")
    return db


def db_write(db: ClassDB, path: str) -> None:
    with open(path, 'wb') as fh:
        fh.write(to_bytes(db))
    logger.info(f"[arithdata] wrote {len(db.entries)} entries to {path}")


def db_read(path: str, prec: Optional[int] = None) -> ClassDB:
    with open(path, 'rb') as fh:
        return from_bytes(fh.read(), prec)


def db_io(mode: str, path: str, db: Optional[ClassDB] = None,
          prec: Optional[int] = None) -> ClassDB:
    """Read or write a class database; returns the database either way."""
    if mode == 'write':
        if db is None:
            raise ValueError("db_io('write') needs a database")
        db_write(db, path)
        return db
    if mode == 'read':
        return db_read(path, prec)
    raise ValueError(f"Unknown db_io mode: {mode!r}")


# =============================================================================
# DATABASE CHECKS
# =============================================================================

def db_verify(db: ClassDB, oracle_tmax: Optional[int] = None,
              unit_vmax: int = config.DEFAULT_UNIT_VMAX,
              oracle_backend: str = 'analytic',
              reference_backend: str = 'bruteforce') -> Dict[str, Any]:
    """
    Re-check every entry. Identities are exact integer checks; for
    t <= oracle_tmax the unit is compared with exhaustive search and the
    class number is recomputed by both backends.
    """
    failures: List[str] = []
    checked_units = 0
    checked_classes = 0
    seen = set()
    if not db.is_complete():
        failures.append("database does not cover every t in [3, tmax]")
    for e in db.entries:
        if e.d * e.l * e.l != e.t * e.t - 4:
            failures.append(f"t={e.t}: d l^2 != t^2 - 4")
        if not is_fundamental(e.d):
            failures.append(f"t={e.t}: d={e.d} is not fundamental")
        if e.unit_norm() not in (4, -4):
            failures.append(f"t={e.t}: u^2 - d v^2 = {e.unit_norm()}")
        if e.L1 is not None and not (e.L1 > 0 and e.L1 < 10):
            failures.append(f"t={e.t}: L(1, chi_d) = {e.L1.str(10)} outside (0, 10)")
        if oracle_tmax is None or e.t > oracle_tmax or e.d in seen:
            continue
        seen.add(e.d)
        if e.v <= unit_vmax:
            checked_units += 1
            if exhaustive_unit(e.d, unit_vmax) != (e.u, e.v):
                failures.append(f"d={e.d}: PQA unit ({e.u}, {e.v}) differs from exhaustive search")
        checked_classes += 1
        ref = class_number(e.d, reference_backend, (e.u, e.v))
        alt = class_number(e.d, oracle_backend, (e.u, e.v))
        if not (ref == alt == e.h):
            failures.append(
                f"d={e.d}: stored h={e.h}, {reference_backend}={ref}, {oracle_backend}={alt}")
    for msg in failures:
        logger.warning(f"[arithdata] {msg}")
    return {
        'passed': not failures,
        'entries': len(db.entries),
        'units_checked': checked_units,
        'classes_checked': checked_classes,
        'failures': failures,
    }


def db_info(db: ClassDB) -> Dict[str, Any]:
    """Summary statistics of a database."""
    ds = {e.d for e in db.entries}
    return {
        'tmax': db.tmax,
        'format_version': db.format_version,
        'entries': len(db.entries),
        'discriminants': len(ds),
        'max_h': max((e.h for e in db.entries), default=0),
        'max_unit_digits': max((len(str(e.u)) for e in db.entries), default=0),
        'norm_minus_4': sum(1 for e in db.entries if e.unit_norm() == -4),
        'complete': db.is_complete(),
    }
