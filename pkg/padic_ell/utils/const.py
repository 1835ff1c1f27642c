SUCCESS = 0
FAILURE = 1
INDETERMINATE = 2
CHECK_FAILED = 3

# Directory names for path management
CACHE_DIR = ".padic_ell_cache"
OUTPUT_DIR = "output"
DATA_DIR = "data"
CURVE_TABLE_FILE = "curves.yaml"

# Environment variables
ENV_CACHE = "PADIC_ELL_CACHE"
ENV_OUTPUT = "PADIC_ELL_OUTPUT_DIR"

# Numerical defaults
DEFAULT_WORKING_DIGITS = 30
DEFAULT_REAL_DIGITS = 25
DEFAULT_DEN_BOUND = 10 ** 6
DEFAULT_ELL_MAX = 20
DEFAULT_CHECK_PRIMES = 5
DEFAULT_LEVEL = 4
DEFAULT_T_ORDER = 4

# Above this many columns exact elimination switches to the sparse backend
DENSE_COLUMN_LIMIT = 200

# Hard cap on the number of terms summed for a complex L-value
MAX_LSERIES_TERMS = 200000

# Report schema
SCHEMA_VERSION = "1"
KAPPA_GAMMA_LABEL = "1+p"

# Emoji constants for CLI verdict lines
EMOJI = {
    "check": "✅",
    "error": "❌",
    "warning": "⚠️",
    "clock": "⏱️",
}
