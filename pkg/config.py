import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Verification ceiling
DEFAULT_MAX_ORDER = 14

def get_max_order() -> int:
    """Largest order `verify` accepts; TREEBOUND_MAX_ORDER overrides it"""
    return int(os.getenv('TREEBOUND_MAX_ORDER', str(DEFAULT_MAX_ORDER)))

# Workers
DEFAULT_JOBS = int(os.getenv('TREEBOUND_JOBS', '1'))

# Alpha grid: two points per regime plus M1 (alpha=2) and classic 0R (alpha=-0.5)
DEFAULT_ALPHA_GRID = [-1, -0.5, 0.25, 0.5, 0.75, 2, 3]

# Comparisons
RELATIVE_TOLERANCE = 1e-9

# Oracle cost guards
PRUFER_ORACLE_MAX_ORDER = 10
PRUFER_EXHAUSTIVE_MAX_ORDER = 8
BRUTE_FORCE_MAX_ORDER = 16

# Logging
LOG_LEVEL = os.getenv('TREEBOUND_LOG_LEVEL', 'INFO')
LOG_FILE = os.getenv('TREEBOUND_LOG_FILE')  # None = console only
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
