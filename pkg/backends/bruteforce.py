"""
maasscheck/backends/bruteforce.py

Narrow class numbers by counting cycles of reduced indefinite forms.

A form (a, b, c) of discriminant d = b^2 - 4ac > 0 is reduced when
0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b. The reduction
operator rho permutes the reduced forms; its orbits are the proper
equivalence classes.
"""

import logging
from math import gcd, isqrt
from typing import Dict, List, Set, Tuple

from flint import fmpz

from backends.base import ClassNumberBackend, register_backend

logger = logging.getLogger(__name__)

Form = Tuple[int, int, int]


def _divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in fmpz(n).factor():
        p = int(p)
        divs = [q * p ** k for q in divs for k in range(e + 1)]
    return divs


def is_reduced(form: Form, d: int) -> bool:
    a, b, c = form
    s = isqrt(d)
    if not 0 < b <= s:
        return False
    two_a = 2 * abs(a)
    # sqrt(d) is irrational, so strict inequalities become integer tests
    if (two_a + b) ** 2 <= d:
        return False
    return two_a <= b or (two_a - b) ** 2 < d


def reduced_forms(d: int) -> List[Form]:
    """All primitive reduced forms of discriminant d, sorted."""
    s = isqrt(d)
    if s * s == d:
        raise ValueError(f"discriminant {d} is a square")
    forms = []
    for b in range(1, s + 1):
        if (b - d) % 2:
            continue
        n = (d - b * b) // 4
        for a0 in _divisors(n):
            for a in (a0, -a0):
                c = -n // a
                form = (a, b, c)
                if gcd(gcd(a, b), c) == 1 and is_reduced(form, d):
                    forms.append(form)
    return sorted(forms)


def rho(form: Form, d: int) -> Form:
    """The reduction step (a, b, c) -> (c, b', (b'^2 - d)/(4c))."""
    _, b, c = form
    s = isqrt(d)
    m = 2 * abs(c)
    b2 = s - (s + b) % m
    return (c, b2, (b2 * b2 - d) // (4 * c))


def form_cycles(d: int) -> List[List[Form]]:
    """Orbits of rho on the reduced forms, each starting at its smallest form."""
    remaining: Set[Form] = set(reduced_forms(d))
    cycles = []
    while remaining:
        start = min(remaining)
        cycle = [start]
        f = rho(start, d)
        while f != start:
            if f not in remaining:
                raise ArithmeticError(f"[Brute force] rho left the reduced set at {f} for d={d}")
            cycle.append(f)
            f = rho(f, d)
        remaining.difference_update(cycle)
        cycles.append(cycle)
    return cycles


@register_backend('bruteforce')
class BruteForceBackend(ClassNumberBackend):
    """Counts rho-cycles of reduced forms."""

    name = "Brute force"

    def __init__(self):
        self._cache: Dict[int, int] = {}

    def narrow_class_number(self, d: int, unit: Tuple[int, int]) -> int:
        if d not in self._cache:
            self._cache[d] = len(form_cycles(d))
            logger.debug(f"[{self.name}] d={d}: h+={self._cache[d]}")
        return self._cache[d]
