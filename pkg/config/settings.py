"""
Settings for the cliffordlab project.
"""

from decouple import config

# Arithmetic defaults
DEFAULT_TOLERANCE = config('CLIFFORDLAB_TOLERANCE', default=1e-12, cast=float)
DEGREE_CAP = config('CLIFFORDLAB_DEGREE_CAP', default=64, cast=int)

# Blade count grows as 2^n, keep n practical
MAX_DIMENSION = config('CLIFFORDLAB_MAX_DIMENSION', default=11, cast=int)

# Truncation order for kernel sums
KERNEL_TRUNCATION = config('CLIFFORDLAB_KERNEL_TRUNCATION', default=64, cast=int)

# Randomness is always seeded
DEFAULT_SEED = config('CLIFFORDLAB_SEED', default=7, cast=int)

# Machine-readable output
SCHEMA_VERSION = 'cliffordlab/v1'

LOG_LEVEL = config('CLIFFORDLAB_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'standard',
        },
    },
    'loggers': {
        'src': {
            'handlers': ['stderr'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
