"""
maasscheck/backends/analytic.py

Class numbers from a certified value of L(1, chi_d).

L(1, chi_d) is the partial sum up to M plus a tail of at most
sqrt(d) log(d) / M: by partial summation the tail is bounded by the
largest character sum over an interval divided by M, and every interval
sum is at most sqrt(d) log(d). The class number is the unique integer in
L1 sqrt(d) / (2 log eps).
"""

import logging
from math import ceil, isqrt, log
from typing import List, Optional, Tuple

from flint import arb

import config
from backends.base import ClassNumberBackend, register_backend
from models import PrecisionExhausted
from rigor import pm, workprec

logger = logging.getLogger(__name__)


def _character_table(d: int) -> List[int]:
    from arithdata import kronecker
    return [kronecker(d, n) if n else 0 for n in range(d)]


def terms_needed(d: int, unit: Tuple[int, int], factor: int = config.ANALYTIC_TERMS_FACTOR) -> int:
    """M with d log d / (2 M log eps) <= 1/factor."""
    u, v = unit
    # isqrt keeps this a lower bound for log eps, so M errs on the large side
    log_eps = log(u + v * isqrt(d)) - log(2)
    return max(d, ceil(factor * d * log(d) / (2 * log_eps)) + 1)


def l_value_series(d: int, terms: int, prec: Optional[int] = None) -> arb:
    """Enclosure of L(1, chi_d) from `terms` terms and the interval-sum tail."""
    table = _character_table(d)
    with workprec(prec):
        total = arb(0)
        for n in range(1, terms + 1):
            chi = table[n % d]
            if chi:
                total += arb(chi) / n
        tail = arb(d).sqrt() * arb(d).log() / terms
        return total + pm(tail)


@register_backend('analytic')
class AnalyticBackend(ClassNumberBackend):
    """Rounds the class-number formula evaluated on a character sum."""

    name = "Analytic"

    def narrow_class_number(self, d: int, unit: Tuple[int, int]) -> int:
        u, v = unit
        h = self.class_number(d, unit)
        return h if u * u - d * v * v == -4 else 2 * h

    def class_number(self, d: int, unit: Optional[Tuple[int, int]] = None) -> int:
        from arithdata import pqa_unit

        if unit is None:
            unit = pqa_unit(d)
        u, v = unit
        with workprec(config.DEFAULT_PREC):
            terms = terms_needed(d, unit)
            L1 = l_value_series(d, terms)
            eps = (u + v * arb(d).sqrt()) / 2
            h = L1 * arb(d).sqrt() / (2 * eps.log())
            if not h.rad() < arb(1) / 4:
                raise PrecisionExhausted(
                    f"[{self.name}] enclosure {h.str(10, radius=True)} too wide for d={d}")
            n = h.unique_fmpz()
            if n is None:
                raise PrecisionExhausted(f"[{self.name}] no integer isolated for d={d}")
            logger.debug(f"[{self.name}] d={d}: M={terms}, h={n}")
            return int(n)
