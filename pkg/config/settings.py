from pathlib import Path
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='django-insecure-change-me-in-production')

DEBUG = config('DEBUG', default=True, cast=bool)


INSTALLED_APPS = [
    'apps.core',
    'apps.exactla',
    'apps.simplex',
    'apps.families',
    'apps.tracer',
    'apps.finder',
    'apps.hull',
    'apps.cli',
]

# Everything is computed; nothing is stored.
DATABASES = {}


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


BILLIARDS_DECIMAL_DIGITS = config('BILLIARDS_DECIMAL_DIGITS', default=12, cast=int)
BILLIARDS_FLOAT_TIE_TOLERANCE = config('BILLIARDS_FLOAT_TIE_TOLERANCE', default=1e-12, cast=float)
BILLIARDS_HULL_MAX_DIM = config('BILLIARDS_HULL_MAX_DIM', default=4, cast=int)
BILLIARDS_SYMMETRY_MAX_DIM = config('BILLIARDS_SYMMETRY_MAX_DIM', default=8, cast=int)
BILLIARDS_RELABEL_CHECK_MAX_DIM = config('BILLIARDS_RELABEL_CHECK_MAX_DIM', default=6, cast=int)


LOG_LEVEL = config('LOG_LEVEL', default='INFO')
LOG_FORMAT = '[%(asctime)s: %(levelname)s/%(name)s] %(message)s'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'default': {'format': LOG_FORMAT},
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'default',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
