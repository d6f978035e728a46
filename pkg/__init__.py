"""
maasscheck - Certified Turing's method for the Selberg zeta-function of PSL(2, Z)

Certifies that a list of spectral parameters r_j of Maass cusp forms is
complete up to a height, and re-verifies the explicit bound on the averaged
error term of Weyl's law, with every number carried as an Arb ball.

Usage:
    from maasscheck import beta_params, compute_B_bound, certify_completeness

    db = db_io('read', 'db.bin')
    bp = beta_params('7505/8192', unconditional_b())
    B = compute_B_bound(bp, db=db)

    zeros = load_zero_list('zeros.txt')
    cert = certify_completeness(zeros, 178, db=db, B=B.upper())

Architecture:
    ┌─────────────────────────────────────────┐
    │ LAYER 1: Ball arithmetic (rigor.py)     │
    │ python-flint arb/acb, scoped precision  │
    └─────────────────┬───────────────────────┘
                      │
            ┌─────────┴──────────┐
            │                    │
            ▼                    ▼
    ┌───────────────┐   ┌─────────────────────┐
    │ quad.py       │   │ specfun.py          │
    │ DE quadrature │   │ psi, psi', Stirling │
    └───────┬───────┘   └──────────┬──────────┘
            │                      │
            ▼                      ▼
    ┌───────────────┐   ┌─────────────────────┐
    │ arithdata.py  │   │ testfn.py           │
    │ + backends/   │   │ beta, h2, phi, V, F │
    └───────┬───────┘   └──────────┬──────────┘
            └──────────┬───────────┘
                       ▼
            ┌─────────────────────┐
            │ traceformula.py     │
            │ I, E, P, D, C terms │
            └──────────┬──────────┘
                       ▼
            ┌─────────────────────┐
            │ certify.py          │
            │ B, S bounds, Turing │
            └──────────┬──────────┘
                       ▼
            ┌─────────────────────┐
            │ cli.py + sources.py │
            │ formatters/         │
            └─────────────────────┘

Modules:
    - models.py: Data structures, enums and the MaassCheckError hierarchy
    - config.py: Defaults, environment overrides, theorem constants
    - rigor.py: Ball construction, certified relations, constants, printing
    - quad.py: Double-exponential quadrature with certified error
    - specfun.py: Gamma-family enclosures, remainder bounds, Si, series
    - arithdata.py: Discriminants, units, class numbers, prime powers, DB files
    - backends/: Class-number implementations
        - base.py: Abstract base and registry
        - bruteforce.py: Reduced indefinite forms and their cycles
        - analytic.py: Truncated L(1, chi_d) sums
    - testfn.py: The test functions and the band-limited majorant
    - traceformula.py: Both sides of the trace formula
    - certify.py: The constant B, S-integral bounds, theorem ranges, Turing gap
    - sources.py: Zero lists from files or URLs
    - formatters/: Report styles (text, keyvalue, csv)
    - cli.py: Command-line entry point
"""

__version__ = "1.0.0"

# =============================================================================
# PUBLIC API
# =============================================================================

# Models
from models import (
    MaassCheckError,
    DomainStraddle,
    OutOfDomain,
    SupNotFinite,
    PrecisionExhausted,
    InsufficientData,
    FormatError,
    NegativeGap,
    Inconclusive,
    PreconditionUnsound,
    BetaParams,
    PhiParams,
    ClassEntry,
    ClassDB,
    ZeroList,
    CertResult,
    RangeReport,
    RunConfig,
    TheoremRange,
    Verdict,
)

# Ball arithmetic
from rigor import (
    ball,
    ball_arith,
    certainly,
    constants,
    workprec,
    format_ball,
)

# Numerics
from quad import molin_rule, integrate, integrate_geometric, sup_on_boundary
from specfun import (
    digamma_enclosure,
    trigamma_bounds,
    trigamma_check,
    log_gamma_remainder_bound,
    stirling_constants,
    sine_integral,
    series_enclosure,
)

# Arithmetic data
from arithdata import (
    split_discriminant,
    pqa_unit,
    class_number,
    local_factor,
    prime_power_terms,
    db_build,
    db_io,
    db_verify,
)

# Test functions
from testfn import (
    beta_params,
    unconditional_b,
    beta_hat,
    beta_eval,
    h2_hat,
    h2_eval,
    varphi_hat,
    V_eval,
    F_eval,
    k_eval,
    largeT_bound_terms,
)

# Trace formula
from traceformula import (
    term_I_h2,
    term_E_h2,
    term_P_h2,
    term_D,
    term_C,
    m_h0_upper,
    trace_spectral,
)

# Certification
from certify import (
    compute_B_bound,
    s_integral_upper,
    verify_theorem_range,
    certify_completeness,
    nbar_integral,
    s_of_t_emit,
)

# I/O
from sources import load_zero_list, parse_zero_list
from formatters import get_formatter, render_report

__all__ = [
    # Version
    '__version__',

    # Errors
    'MaassCheckError',
    'DomainStraddle',
    'OutOfDomain',
    'SupNotFinite',
    'PrecisionExhausted',
    'InsufficientData',
    'FormatError',
    'NegativeGap',
    'Inconclusive',
    'PreconditionUnsound',

    # Models
    'BetaParams',
    'PhiParams',
    'ClassEntry',
    'ClassDB',
    'ZeroList',
    'CertResult',
    'RangeReport',
    'RunConfig',
    'TheoremRange',
    'Verdict',

    # Ball arithmetic
    'ball',
    'ball_arith',
    'certainly',
    'constants',
    'workprec',
    'format_ball',

    # Numerics
    'molin_rule',
    'integrate',
    'integrate_geometric',
    'sup_on_boundary',
    'digamma_enclosure',
    'trigamma_bounds',
    'trigamma_check',
    'log_gamma_remainder_bound',
    'stirling_constants',
    'sine_integral',
    'series_enclosure',

    # Arithmetic data
    'split_discriminant',
    'pqa_unit',
    'class_number',
    'local_factor',
    'prime_power_terms',
    'db_build',
    'db_io',
    'db_verify',

    # Test functions
    'beta_params',
    'unconditional_b',
    'beta_hat',
    'beta_eval',
    'h2_hat',
    'h2_eval',
    'varphi_hat',
    'V_eval',
    'F_eval',
    'k_eval',
    'largeT_bound_terms',

    # Trace formula
    'term_I_h2',
    'term_E_h2',
    'term_P_h2',
    'term_D',
    'term_C',
    'm_h0_upper',
    'trace_spectral',

    # Certification
    'compute_B_bound',
    's_integral_upper',
    'verify_theorem_range',
    'certify_completeness',
    'nbar_integral',
    's_of_t_emit',

    # I/O
    'load_zero_list',
    'parse_zero_list',
    'get_formatter',
    'render_report',
]
