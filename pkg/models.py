"""
maasscheck/models.py

Core data models for the verification system.
All modules communicate through these standardized structures.
"""

from dataclasses import dataclass, field
from enum import Enum, auto
from fractions import Fraction
from typing import Optional, List, Dict, Any, Tuple

from flint import arb

import config


# =============================================================================
# ERRORS
# =============================================================================

class MaassCheckError(Exception):
    """Base class for every failure raised by the library."""


class DomainStraddle(MaassCheckError):
    """An input set crosses a singularity or branch point of the operation."""


class OutOfDomain(MaassCheckError):
    """An input fails the stated precondition of a bound or formula."""


class SupNotFinite(MaassCheckError):
    """A quadrature supremum is not a finite enclosure."""


class PrecisionExhausted(MaassCheckError):
    """An enclosure is too wide to decide the requested quantity."""


class InsufficientData(MaassCheckError):
    """The class database or prime table does not cover the required range."""


class FormatError(MaassCheckError):
    """A data file has a bad header, version or truncated record."""


class NegativeGap(MaassCheckError):
    """The Turing gap came out negative, which signals a data or precision error."""


class Inconclusive(MaassCheckError):
    """Width or precision ran out before a check could be decided."""


class PreconditionUnsound(MaassCheckError):
    """A parameter choice is not backed by a proven statement."""


# =============================================================================
# ENUMERATIONS
# =============================================================================

class BallOp(Enum):
    """Operations supported by rigor.ball_arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    SQRT = "sqrt"
    EXP = "exp"
    LOG = "log"
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"
    TANH = "tanh"
    ATAN = "atan"
    POW = "pow"

    @property
    def is_binary(self) -> bool:
        return self in (BallOp.ADD, BallOp.SUB, BallOp.MUL, BallOp.DIV, BallOp.POW)


class Relation(Enum):
    """Order relations decided by rigor.certainly."""
    LT = "lt"
    LE = "le"
    GT = "gt"
    GE = "ge"

    @classmethod
    def from_string(cls, s: str) -> "Relation":
        """Parse relation from string, accepting symbolic aliases."""
        mapping = {
            'lt': cls.LT, '<': cls.LT,
            'le': cls.LE, '<=': cls.LE,
            'gt': cls.GT, '>': cls.GT,
            'ge': cls.GE, '>=': cls.GE,
        }
        key = s.lower().strip()
        if key not in mapping:
            raise ValueError(f"Unknown relation: {s!r}")
        return mapping[key]


class ConstantName(Enum):
    """Named constants available from rigor.constants."""
    PI = "pi"
    EULER_GAMMA = "euler_gamma"
    ZETA3 = "zeta3"
    ZETA_PRIME_M1 = "zeta_prime_m1"
    LOG2 = "log2"
    L2_CHI_M3 = "L2_chi_m3"
    L2_CHI_M4 = "L2_chi_m4"

    @classmethod
    def from_string(cls, s: str) -> "ConstantName":
        aliases = {
            'gamma': cls.EULER_GAMMA,
            'catalan': cls.L2_CHI_M4,
            "zeta'(-1)": cls.ZETA_PRIME_M1,
        }
        key = s.strip()
        if key in aliases:
            return aliases[key]
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise ValueError(f"Unknown constant: {s!r}")


class SeriesKind(Enum):
    """Series with explicit geometric tail bounds."""
    SINH_OVER_T = "sinh_over_t"
    COSHM1_OVER_T2 = "coshm1_over_t2"


class StirlingConstant(Enum):
    C_HALF = "C_half"
    C_ONE = "C_one"


class TraceTerm(Enum):
    """Labels for trace-formula term reports."""
    I = "I"
    E = "E"
    P = "P"
    D = "D"
    C = "C"
    M_H0 = "M_h0"
    C0 = "C0"
    CONT_CLOSED = "cont_closed"
    H_ZERO = "h(0)"
    TRACE = "Tr*"


class CTermMode(Enum):
    BETA_OVER_T2 = "beta_over_t2"
    PHI_COS_CLOSED = "phi_cos_closed"


class BoundMode(Enum):
    """Which proposition assembles the S-integral bound."""
    MEDIUM = "medium"
    LARGE = "large"


class TheoremRange(Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"
    ASYMPTOTIC = "asymptotic"

    @classmethod
    def from_string(cls, s: str) -> "TheoremRange":
        for member in cls:
            if member.value == s.lower().strip():
                return member
        raise ValueError(f"Unknown theorem range: {s!r}")

    @property
    def default_bounds(self) -> Tuple[int, int]:
        return config.THEOREM_RANGES[self.value]


class ReportStyle(Enum):
    """Output styles served by the formatters package."""
    TEXT = "text"
    KEYVALUE = "keyvalue"
    CSV = "csv"

    @classmethod
    def from_string(cls, s: str) -> "ReportStyle":
        key = s.lower().strip().replace("-", "").replace("_", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"Unknown report style: {s!r}")


class Verdict(Enum):
    PASS = auto()
    FAIL = auto()
    INCONCLUSIVE = auto()


# =============================================================================
# AUDIT
# =============================================================================

@dataclass
class ErrorBudget:
    """
    Accumulates the radius contributions behind an enclosure.

    Keys are contribution kinds ('quadrature', 'series', 'truncation',
    'rounding'); values are non-negative upper bounds (exact arb values).
    """
    entries: Dict[str, arb] = field(default_factory=dict)

    def add(self, kind: str, amount) -> None:
        amount = abs(arb(amount)).upper()
        if kind in self.entries:
            self.entries[kind] = (self.entries[kind] + amount).upper()
        else:
            self.entries[kind] = amount

    def merge(self, other: "ErrorBudget") -> None:
        for kind, amount in other.entries.items():
            self.add(kind, amount)

    def total(self) -> arb:
        total = arb(0)
        for amount in self.entries.values():
            total = (total + amount).upper()
        return total

    def to_dict(self) -> Dict[str, str]:
        return {kind: amount.str(5) for kind, amount in sorted(self.entries.items())}


@dataclass
class TestFnAudit:
    """An enclosure together with the budget that produced its radius."""
    __test__ = False

    term: str
    value: Any
    budget: ErrorBudget = field(default_factory=ErrorBudget)


@dataclass
class TraceTermReport:
    """One evaluated trace-formula term."""
    term: TraceTerm
    value: Any
    budget: ErrorBudget = field(default_factory=ErrorBudget)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'term': self.term.value,
            'value': self.value.str(20, radius=True),
            'budget': self.budget.to_dict(),
        }


# =============================================================================
# TEST-FUNCTION PARAMETERS
# =============================================================================

@dataclass(frozen=True)
class BetaParams:
    """
    Parameters of the band-limited weight beta.

    c is derived from (a, b) so that beta(0) = 1. The piece polynomials are
    stored with the normalization already applied: pieces[j] holds the
    coefficients (lowest degree first) of beta on [j*a, (j+1)*a).
    """
    a: arb
    b: arb
    c: arb
    k: arb
    pieces: Tuple[Tuple[arb, ...], ...]

    @property
    def support(self) -> arb:
        return 4 * self.a


@dataclass(frozen=True)
class PhiParams:
    """Width X and smoothing delta of the majorant phi."""
    X: arb
    delta: arb


# =============================================================================
# ARITHMETIC DATA
# =============================================================================

@dataclass
class ClassEntry:
    """One hyperbolic-term record: t^2 - 4 = d l^2 with unit and class number."""
    t: int
    d: int
    l: int
    h: int
    u: int
    v: int
    L1: Optional[arb] = None

    def unit_norm(self) -> int:
        """Return +4 or -4, the value of u^2 - d v^2."""
        return self.u * self.u - self.d * self.v * self.v

    def has_minimum_data(self) -> bool:
        return (self.t >= 3 and self.d > 0 and self.l > 0 and self.h > 0
                and self.u > 0 and self.v > 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            't': self.t, 'd': self.d, 'l': self.l, 'h': self.h,
            'u': self.u, 'v': self.v,
            'L1': self.L1.str(20, radius=True) if self.L1 is not None else None,
        }


@dataclass
class ClassDB:
    """Complete run of ClassEntry records for t = 3..tmax."""
    tmax: int
    entries: List[ClassEntry] = field(default_factory=list)
    format_version: int = config.DB_FORMAT_VERSION

    def entry(self, t: int) -> ClassEntry:
        return self.entries[t - 3]

    def is_complete(self) -> bool:
        return (len(self.entries) == max(self.tmax - 2, 0)
                and all(e.t == t for e, t in zip(self.entries, range(3, self.tmax + 1))))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassDB):
            return NotImplemented
        key = lambda e: (e.t, e.d, e.l, e.h, e.u, e.v)
        return (self.tmax == other.tmax
                and self.format_version == other.format_version
                and [key(e) for e in self.entries] == [key(e) for e in other.entries])


@dataclass(frozen=True)
class PrimePowerTerm:
    """A prime power n = p^k with Lambda(n) = log p and the argument log n / pi."""
    n: int
    p: int
    Lambda_n: arb
    xhat_arg: arb

    @property
    def weight(self) -> arb:
        return self.Lambda_n / self.n


# =============================================================================
# ZERO LISTS AND RESULTS
# =============================================================================

@dataclass
class ZeroList:
    """
    Ordered certified spectral parameters r_j.

    Each entry is an arb ball whose radius is the declared accuracy of the
    source data; exact entries are rejected by the loader.
    """
    entries: List[arb] = field(default_factory=list)
    source: str = ""
    declared_radius: str = config.DEFAULT_ZERO_RADIUS

    def __len__(self) -> int:
        return len(self.entries)

    def lower(self, j: int) -> arb:
        return self.entries[j].lower()

    def upper(self, j: int) -> arb:
        return self.entries[j].upper()

    def without(self, j: int) -> "ZeroList":
        """Copy with entry j removed."""
        return ZeroList(entries=self.entries[:j] + self.entries[j + 1:],
                        source=f"{self.source} (without #{j + 1})",
                        declared_radius=self.declared_radius)

    def up_to(self, height) -> "ZeroList":
        """Entries whose lower endpoint does not exceed height."""
        height = arb(height)
        kept = [r for r in self.entries if not r.lower() > height]
        return ZeroList(entries=kept, source=self.source,
                        declared_radius=self.declared_radius)


@dataclass
class CertResult:
    """Outcome of a completeness certification."""
    T_ref: arb
    certified_height: arb
    zero_count: int
    integral_upper: arb
    integral_lower: arb
    gap: arb
    ambiguous: int = 0
    pairwise_disjoint: bool = True
    audit: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'T_ref': self.T_ref,
            'certified_height': self.certified_height,
            'zero_count': self.zero_count,
            'integral_upper': self.integral_upper,
            'integral_lower': self.integral_lower,
            'gap': self.gap,
            'ambiguous': self.ambiguous,
            'pairwise_disjoint': self.pairwise_disjoint,
        }


@dataclass
class SBoundInputs:
    """Ingredients of the S-integral upper bound at one T (ball)."""
    T: arb
    B: arb
    C0: arb
    pp: PhiParams
    mode: BoundMode = BoundMode.MEDIUM
    db: Optional[ClassDB] = None
    primes: Optional[List[PrimePowerTerm]] = None
    bp: Optional[BetaParams] = None
    exact_V: bool = False
    # restricted discrete-term cache for the medium bound, built once per sweep
    dterm: Optional[Any] = None


@dataclass
class IntervalCheck:
    """One T-interval of a theorem sweep."""
    lo: Fraction
    hi: Fraction
    bound: arb
    target: arb
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'lo': self.lo, 'hi': self.hi, 'bound': self.bound,
                'target': self.target, 'passed': self.passed}


@dataclass
class RangeReport:
    """Result of verifying the averaged S bound over one theorem range."""
    range: TheoremRange
    verdict: Verdict
    intervals: List[IntervalCheck] = field(default_factory=list)
    first_failure: Optional[IntervalCheck] = None
    nearest_miss: Optional[Tuple[Any, arb]] = None
    audit: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


# =============================================================================
# RUN CONFIGURATION
# =============================================================================

@dataclass
class RunConfig:
    """Validated run-time settings shared by every command."""
    prec: int = config.DEFAULT_PREC
    dterm_prec: int = config.DTERM_PREC
    quad_nodes: int = config.DEFAULT_QUAD_NODES
    arcs: int = config.DEFAULT_ARCS
    series_order: int = config.DEFAULT_SERIES_ORDER
    alpha: Fraction = config.GEOMETRIC_ALPHA
    segments: int = config.GEOMETRIC_SEGMENTS
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    X: Optional[Fraction] = None
    delta: Optional[Fraction] = None
    workers: int = config.DEFAULT_WORKERS
    medium_sweep: Dict[str, Any] = field(default_factory=lambda: dict(config.MEDIUM_SWEEP))
    large_sweep: Dict[str, Any] = field(default_factory=lambda: dict(config.LARGE_SWEEP))
    paths: Dict[str, str] = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        """Check every override against module preconditions; raise ValueError."""
        if self.prec < config.MIN_PREC:
            raise ValueError(f"precision must be at least {config.MIN_PREC} bits")
        if self.dterm_prec < self.prec:
            raise ValueError("D-term precision must not be below working precision")
        if self.quad_nodes < 1:
            raise ValueError("quadrature node count must be positive")
        if self.arcs < 8:
            raise ValueError("boundary arc count must be at least 8")
        if self.series_order < 0:
            raise ValueError("series order must be non-negative")
        if not (1 < self.alpha < 3):
            raise ValueError("geometric ratio alpha must lie in (1, 3)")
        if self.segments < 0:
            raise ValueError("segment count must be non-negative")
        for name in ('a', 'b', 'X', 'delta'):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"parameter {name} must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        for sweep in (self.medium_sweep, self.large_sweep):
            if not (0 < sweep['min_width'] <= sweep['start_width'] <= sweep['max_width']):
                raise ValueError("sweep widths must satisfy 0 < min <= start <= max")
        return self


# =============================================================================
# COMMAND REPORTS
# =============================================================================

@dataclass
class CommandReport:
    """
    What a CLI command hands to a formatter.

    sections maps a section title to ordered key/value pairs; values may be
    balls, Fractions, ints, bools, strings or enums. rows/columns carry
    tabular output such as the (t, S) samples.
    """
    command: str
    status: str = "OK"
    sections: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    columns: List[str] = field(default_factory=list)
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def section(self, title: str) -> Dict[str, Any]:
        """The named section, created empty on first use."""
        return self.sections.setdefault(title, {})
