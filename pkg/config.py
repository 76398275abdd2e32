"""
🔧 Configuration RootBounds
Configuration centralisée pour tous les composants
"""

import logging.config
import os
from pathlib import Path

from dotenv import load_dotenv

# ===== PATHS =====
PROJECT_ROOT = Path(__file__).parent
DATA_DIR = PROJECT_ROOT / "data"

# Variables d'environnement (.env optionnel à la racine)
load_dotenv(PROJECT_ROOT / ".env")
ENV_PREFIX = "ROOTBOUNDS_"


def _env(name, default, cast=float):
    """Lit ROOTBOUNDS_<name> si défini, sinon la valeur par défaut"""
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    return cast(raw)


# ===== POLYNÔMES =====
ZERO_RTOL = _env("ZERO_RTOL", 1e-14)          # p(ζ) = 0 (profil dégénéré)
CRITICAL_RTOL = _env("CRITICAL_RTOL", 1e-10)  # p'(ζ) = 0 (point critique)
ROUNDTRIP_RTOL = 1e-10

# ===== SOLVEUR SCALAIRE (bissection + Newton) =====
SOLVER_BRACKET_RTOL = 1e-3   # largeur relative avant de passer à Newton
SOLVER_FTOL = 1e-14
SOLVER_MAX_ITER = 200

# ===== ORACLE (itération simultanée) =====
ORACLE_MAX_ITER = _env("ORACLE_MAX_ITER", 200, int)
ORACLE_ANGLE_OFFSET = 0.4          # radians
ORACLE_LOCK_RTOL = 1e-14           # verrouillage par racine
ORACLE_RESIDUAL_TOL = 1e-10        # résidu relatif max si converged
CLUSTER_RTOL = 1e-5                # fusion des racines multiples
CLUSTER_CAP_RTOL = 0.05            # plafond des disques d'inclusion
POLISH_STEPS = 8

# ===== BORNES =====
UPPER_SLACK = _env("UPPER_SLACK", 1e-10)
LOWER_SLACK = _env("LOWER_SLACK", 1e-12)
MEMBERSHIP_RTOL = 1e-12

# ===== CONJECTURE =====
DEFAULT_IOTA1 = _env("IOTA1", 0.618)
DEFAULT_IOTA2 = _env("IOTA2", 10.0)

# ===== SWEEPS =====
DEFAULT_SWEEP_N_LIST = [10, 100, 1000]
DEFAULT_SWEEP_K = 2
DEFAULT_RANDOM_COUNT = 100
DEFAULT_SEED = 42
SLOPE_TOLERANCE = 0.1

# ===== EXÉCUTION =====
N_JOBS = _env("N_JOBS", 1, int)

# ===== CODES DE SORTIE =====
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND_VIOLATION = 2
EXIT_ORACLE_FAILURE = 3

# ===== LOGGING CONFIGURATION =====
LOG_LEVEL = _env("LOG_LEVEL", "WARNING", str)
LOG_FILE = _env("LOG_FILE", None, str)

LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
        },
    },
    'handlers': {
        'default': {
            'level': LOG_LEVEL,
            'formatter': 'standard',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        '': {
            'handlers': ['default'],
            'level': LOG_LEVEL,
            'propagate': False
        }
    }
}

if LOG_FILE:
    LOGGING_CONFIG['handlers']['file'] = {
        'level': LOG_LEVEL,
        'formatter': 'standard',
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'mode': 'a',
    }
    LOGGING_CONFIG['loggers']['']['handlers'].append('file')


def setup_logging(level=None):
    """Applique LOGGING_CONFIG (niveau éventuellement surchargé)"""
    config = LOGGING_CONFIG
    if level is not None:
        config = {**LOGGING_CONFIG, 'loggers': {'': {**LOGGING_CONFIG['loggers'][''], 'level': level}}}
        config['handlers'] = {
            name: {**handler, 'level': level} for name, handler in LOGGING_CONFIG['handlers'].items()
        }
    logging.config.dictConfig(config)
