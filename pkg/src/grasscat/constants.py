"""Constants for grasscat."""

# =============================================================================
# Polygon Bounds
# =============================================================================

# Smallest polygon with arcs at all
MIN_POLYGON = 3

# Smallest polygon whose AR quiver has a non-projective vertex
MIN_AR_POLYGON = 4

# verify --nmax bounds
NMAX_LOWER = 4
NMAX_UPPER = 10
DEFAULT_NMAX = 8

# Largest rigid set swept by the property suites
MAX_SWEEP_RIGID = 2

# Laurent-valued sweeps (characters, restriction) stop at this polygon size
MAX_LAURENT_POLYGON = 8

# The frieze sweep recomputes each frieze in reverse flip order up to this size
MAX_FLIP_ORDER_POLYGON = 8

# =============================================================================
# Built-in Quivers
# =============================================================================

# Stable quiver of the alternating strand diagram for Gr(3,7), 1-based
Q37_SIZE = 6
Q37_ARROWS = [(2, 1), (2, 3), (5, 4), (6, 5), (1, 4), (2, 5), (4, 2)]

# Stable quiver for Gr(3,8), 1-based
Q38_SIZE = 8
Q38_ARROWS = [
    (1, 2),
    (2, 6),
    (6, 5),
    (5, 1),
    (3, 2),
    (6, 7),
    (7, 3),
    (3, 4),
    (4, 8),
    (8, 7),
]

# Mutation sequence taking Q38 to an E8 orientation
Q38_E8_SEQUENCE = ["2", "6", "3", "4", "8", "1", "7", "6", "5", "3", "4", "5"]

BUILTIN_QUIVERS = ["Q37", "Q38", "fan_quiver(n, v)"]

# Dynkin families accepted by the recognizer
DYNKIN_FAMILIES = ["A", "D", "E"]
EXCEPTIONAL_RANKS = [6, 7, 8]

# =============================================================================
# Output Formats
# =============================================================================

QUIVER_FORMATS = ["dot", "json"]
FRIEZE_FORMATS = ["ascii", "json"]
EXCHANGE_FORMATS = ["text", "json"]
REPORT_FORMATS = ["text", "json"]
CHECK_MODES = ["mesh", "ptolemy", "both"]
CHARACTER_METHODS = ["ptolemy", "cc"]

DEFAULT_QUIVER_FORMAT = "json"
DEFAULT_FRIEZE_FORMAT = "ascii"
DEFAULT_EXCHANGE_FORMAT = "text"

# Variable names in Laurent output, e.g. x[1,3]
VARIABLE_TEMPLATE = "x[{i},{j}]"

# DOT vertex names, e.g. M_1_3
DOT_VERTEX_TEMPLATE = "M_{i}_{j}"

# Placeholder for arcs a frieze leaves unvalued
ASCII_MISSING = "."

# =============================================================================
# Verification Suites
# =============================================================================

SUITES = ["reduction", "frieze", "character", "morphisms", "mutation"]
SUITE_CHOICES = SUITES + ["all"]

# =============================================================================
# Configuration
# =============================================================================

CONFIG_FILE = "grasscat.yaml"
NO_COLOR_ENV = "NO_COLOR"

DEFAULT_LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

# =============================================================================
# Exit Codes
# =============================================================================

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
