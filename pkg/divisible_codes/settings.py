"""
Django settings for divisible_codes project.

Generated by 'django-admin startproject' using Django 5.2.7.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os

from pathlib import Path

import dj_database_url

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Quick-start development settings - unsuitable for production
# See https://docs.djangoproject.com/en/5.2/howto/deployment/checklist/

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get("SECRET_KEY", "divisible-codes-dev-key")

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get("DEBUG", "0") == "1"

ALLOWED_HOSTS = [
    "localhost",
    "127.0.0.1",
    "testserver",
]


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',

    'qarith',
    'lengths',
    'macwilliams',
    'lp',
    'exclusion',
    'geometry',
    'applications',
    'cli',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    "whitenoise.middleware.WhiteNoiseMiddleware",
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'divisible_codes.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'divisible_codes.wsgi.application'


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    "default": dj_database_url.config(
        default=os.environ.get("DATABASE_URL", f"sqlite:///{BASE_DIR / 'db.sqlite3'}"),
        conn_max_age=600,
    )
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (admin)

STATIC_URL = "/static/"
STATIC_ROOT = BASE_DIR / "staticfiles"

STORAGES = {
    "default": {"BACKEND": "django.core.files.storage.FileSystemStorage"},
    "staticfiles": {"BACKEND": "whitenoise.storage.CompressedStaticFilesStorage"},
}

# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# ==========================
# Cálculo de códigos divisibles
# ==========================
# Cada clave puede sobreescribirse con la variable de entorno
# DIVISIBLE_CODES_<CLAVE> (ver divisible_codes/conf.py).

DIVISIBLE_CODES = {
    # Presupuestos de enumeración por fuerza bruta
    "ENUMERATION_BUDGET": 2 ** 24,
    "HYPERPLANE_BUDGET": 2 ** 22,
    "SOLUTION_SEARCH_LIMIT": 2 ** 20,
    "ROUNDING_SCAN_LIMIT": 10 ** 6,

    # Programación lineal: número de ecuaciones de MacWilliams
    "LP_DEPTH": 4,
    "LP_FIVE_EQUATION_CASES": [(3, 9, 89)],
    "LP_MAX_ROUNDS": 50,

    # Polinomios módulo por defecto (coeficientes de menor a mayor grado)
    "DEFAULT_MODULI": {
        4: [1, 1, 1],
        8: [1, 1, 0, 1],
        9: [1, 0, 1],
    },

    # Datos curados: ejemplos base, exclusiones esporádicas, hechos de clasificación
    "CLASSIFICATION_DATA": BASE_DIR / "exclusion" / "data" / "classification.json",

    # Profundidad de las tablas para cotas de spreads parciales: q -> v máximo
    "SPREAD_TABLE_DEPTH": {2: 19, 3: 19, 4: 19, 5: 16, 7: 14, 8: 14, 9: 14},
}


# ==========================
# Logging
# ==========================

LOG_LEVEL = os.environ.get("DIVISIBLE_CODES_LOG_LEVEL", "WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in (
            "qarith",
            "lengths",
            "macwilliams",
            "lp",
            "exclusion",
            "geometry",
            "applications",
            "cli",
        )
    },
}
