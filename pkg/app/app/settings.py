import os
from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

env = environ.Env()
environ.Env.read_env(os.path.join(BASE_DIR.parent, '.env'))

SECRET_KEY = env.str('SECRET_KEY', default='connected-treewidth-local')

DEBUG = env.bool('DEBUG', default=False)
LOG_LEVEL = env.str('LOG_LEVEL', default='INFO')

# Solver guards. Exact searches are exponential; these are the vertex counts
# above which they refuse to run.
TREEWIDTH_EXACT_LIMIT = env.int('TREEWIDTH_EXACT_LIMIT', default=20)
TREEWIDTH_BRANCH_AND_BOUND_LIMIT = env.int('TREEWIDTH_BRANCH_AND_BOUND_LIMIT', default=12)
BRAMBLE_EXACT_LIMIT = env.int('BRAMBLE_EXACT_LIMIT', default=16)
WCTW_EXACT_LIMIT = env.int('WCTW_EXACT_LIMIT', default=8)
GEODESIC_SEARCH_LIMIT = env.int('GEODESIC_SEARCH_LIMIT', default=12)
# 0 means no cap on the cycle length searched by ell().
CYCLE_LENGTH_LIMIT = env.int('CYCLE_LENGTH_LIMIT', default=0)

DEFAULT_SEED = env.int('DEFAULT_SEED', default=20240517)
ARTIFACT_DIR = Path(env.str('ARTIFACT_DIR', default=str(BASE_DIR.parent / 'artifacts')))

ALLOWED_HOSTS = []

# Application definition
PROJECT_APPS = [
    'graphs',
    'decompositions',
    'cycles',
    'brambles',
    'families',
    'reports',
]

INSTALLED_APPS = [
    'rest_framework',
    *PROJECT_APPS
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

# Everything is computed in memory; artifacts are JSON files.
DATABASES = {}

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
        **{
            app: {'level': LOG_LEVEL, 'propagate': True}
            for app in PROJECT_APPS
        },
    },
}
