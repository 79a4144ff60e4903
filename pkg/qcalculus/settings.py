"""
Django settings for the qcalculus project.
Command-line only: no URLs, templates or middleware are configured.
"""

from pathlib import Path
import os

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='qcalculus-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'rest_framework',
    'core',
    'trees',
    'distributions',
]

# Database (unused by the q-calculus apps; Django requires a default alias)
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Serializers only; no auth app is installed
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# ============================================================================
# Q-CALCULUS CONFIGURATION
# ============================================================================

QCALC = {
    # Truncation policy shared by every series, product and lattice sum
    'SERIES_RTOL': config('QCALC_SERIES_RTOL', default=1e-14, cast=float),
    'SERIES_CONSECUTIVE': config('QCALC_SERIES_CONSECUTIVE', default=3, cast=int),
    'SERIES_MAX_TERMS': config('QCALC_SERIES_MAX_TERMS', default=100_000, cast=int),
    # Largest accepted deformation parameter
    'Q_MAX': config('QCALC_Q_MAX', default=1 - 1e-6, cast=float),
    # Estimated relative rounding error tolerated in alternating series
    'CANCELLATION_LIMIT': config('QCALC_CANCELLATION_LIMIT', default=1e-8, cast=float),
    # Brute-force tree enumeration cap (number of grafting sequences)
    'ENUMERATION_BUDGET': config('QCALC_ENUMERATION_BUDGET', default=10_000_000, cast=int),
    # Lattice measures and sampling
    'DEFAULT_TAIL_TOL': config('QCALC_TAIL_TOL', default=1e-12, cast=float),
    'DEFAULT_SEED': config('QCALC_DEFAULT_SEED', default=0, cast=int),
    # Number of values in a float parameter sweep such as --q 0..0.95
    'GRID_SWEEPS': config('QCALC_GRID_SWEEPS', default=20, cast=int),
}

# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================

logs_dir = os.path.join(BASE_DIR, 'logs')
os.makedirs(logs_dir, exist_ok=True)

LOG_LEVEL = config('QCALC_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{levelname}] {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '[{levelname}] {message}',
            'style': '{',
        },
    },
    'handlers': {
        # StreamHandler writes to stderr; stdout is reserved for command output
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'verbose' if DEBUG else 'simple',
        },
        'file': {
            'level': 'WARNING',
            'class': 'logging.FileHandler',
            'filename': os.path.join(logs_dir, 'qcalc.log'),
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
        'core': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'trees': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'distributions': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
