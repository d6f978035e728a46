"""
maasscheck/config.py

Configuration, constants, and shared settings.
"""

import os
from fractions import Fraction
from typing import Dict

from dotenv import load_dotenv

load_dotenv()

# =============================================================================
# PRECISION (from environment)
# =============================================================================

DEFAULT_PREC = int(os.environ.get('MAASSCHECK_PREC', '128'))
DTERM_PREC = int(os.environ.get('MAASSCHECK_DTERM_PREC', '192'))
MIN_PREC = 53

# =============================================================================
# QUADRATURE
# =============================================================================

DEFAULT_QUAD_NODES = int(os.environ.get('MAASSCHECK_QUAD_NODES', '100'))
DEFAULT_ARCS = int(os.environ.get('MAASSCHECK_ARCS', '256'))
ARC_REFINE_DEPTH = 12
WEDGE_REFINE_DEPTH = 10

# Geometric truncation: segments [t0*alpha^j, t0*alpha^(j+1)]
GEOMETRIC_ALPHA = Fraction(3) - Fraction(1, 128)
GEOMETRIC_SEGMENTS = 4
P_TERM_GEOMETRIC_SEGMENTS = 3

# Margin applied when placing segment breakpoints around poles
SEGMENT_SAFETY = 1.1

# =============================================================================
# SERIES
# =============================================================================

DEFAULT_SERIES_ORDER = 8
SINHC_SERIES_RADIUS = Fraction(1, 8)

# =============================================================================
# TEST-FUNCTION PARAMETERS
# =============================================================================

DEFAULT_A = Fraction(7505, 8192)
B_HEIGHT = Fraction(17775, 100)

MEDIUM_X = Fraction(255, 100)
MEDIUM_DELTA = Fraction(1, 10)
LARGE_DELTA = Fraction(842, 1000)

# Quotient (f(t) - f(0))/t^2 must stay above this on [0, 1/sqrt(12)]
GAP_FLOOR = -5
MAJORANT_SUBDIVISIONS = 1024

# =============================================================================
# THEOREM CONSTANTS
# =============================================================================

# E(T) = (1 + THEOREM_E_COEFF / log T) * (pi / (12 log T))^2
THEOREM_E_COEFF = Fraction(659125, 100000)

# Unconditional bound for B (b = sqrt(6 pi^2 - 1)/2), used when no value is supplied
DEFAULT_B_BOUND = '0.272955804771976'

# Sharper bound with b = B_HEIGHT; valid only once the zero list is certified to that height
CERTIFIED_HEIGHT_B_BOUND = '0.2729558044747431'

LARGE_CUBIC_COEFF = Fraction(1052, 10000)
LARGE_INTERMEDIATE_COEFF = Fraction(308, 10000)

# =============================================================================
# THEOREM RANGES
# =============================================================================

THEOREM_RANGES: Dict[str, tuple] = {
    'small': (1, 100),
    'medium': (100, 27400),
    'large': (27400, 10**6),
    'asymptotic': (10**6, 10**12),
}

MEDIUM_SWEEP = {
    'start_width': 2,
    'max_width': 128,
    'min_width': Fraction(1, 64),
    'double_after': 20,
    'tile_width': Fraction(1, 256),
    'tail_radius': 64,
    'k_width_cap': 1,
    'inner_width_cap': Fraction(2, 5),
}

LARGE_SWEEP = {
    'start_width': 2,
    'max_width': 16384,
    'min_width': Fraction(1, 64),
    'double_after': 20,
}

SMALL_RANGE_DEPTH = 40
ASYMPTOTIC_COVER_STEPS = 256

# =============================================================================
# ARITHMETIC DATA
# =============================================================================

DB_MAGIC = b'MAASSDB\x00'
DB_FORMAT_VERSION = 1
# Terms M = FACTOR * d log d / (2 log eps); the class-number radius is then 1/FACTOR
ANALYTIC_TERMS_FACTOR = 5
DEFAULT_UNIT_VMAX = 10000
DEFAULT_BACKEND = 'bruteforce'

# =============================================================================
# ZERO LISTS
# =============================================================================

DEFAULT_ZERO_RADIUS = '1e-18'

# =============================================================================
# HTTP SETTINGS
# =============================================================================

DEFAULT_TIMEOUT = int(os.environ.get('MAASSCHECK_HTTP_TIMEOUT', '30'))  # seconds
DEFAULT_HEADERS = {
    'User-Agent': 'maasscheck/1.0',
    'Accept': 'text/plain',
}

# =============================================================================
# RUNTIME
# =============================================================================

DEFAULT_WORKERS = int(os.environ.get('MAASSCHECK_WORKERS', '1'))
LOG_LEVEL = os.environ.get('MAASSCHECK_LOG_LEVEL', 'WARNING')
REPORT_DIGITS = 20

# CLI exit statuses
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_IO = 74
