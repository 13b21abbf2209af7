"""
    Django settings for the Kuperberg invariants project.

    Partially generated by "django-admin startproject" using Django 4.2.1.
"""

from pathlib import Path
from typing import Sequence

from django.core.exceptions import ImproperlyConfigured
from environ import Env


BASE_DIR = Path(__file__).resolve().parent.parent  # NOTE: Build paths inside the project like this: BASE_DIR / "subdir"


Env.read_env(BASE_DIR / ".env")
env: Env = Env(
    PRODUCTION=(bool, False),
    SECRET_KEY=(str, "kuperberg-development-key"),
    LOG_LEVEL=(str, "INFO"),
    KUPERBERG_BUDGET=(int, 2 ** 26),
    KUPERBERG_NAIVE_BUDGET=(int, 2 ** 30),
    KUPERBERG_HALFINT_COINTEGRAL=(str, "antipode-inverse"),
    KUPERBERG_DEFAULT_TRIALS=(int, 50),
    KUPERBERG_RANDOM_SEED=(int, 0),
    KUPERBERG_MAX_CYCLOTOMIC_ORDER=(int, 64)
)


# Production Vs Development settings

DEBUG = not env("PRODUCTION")  # NOTE: Security Warning - Don't run with debug turned on in production!

log_level: str = env("LOG_LEVEL").upper()

log_level_choices: Sequence[str] = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
if log_level not in log_level_choices:
    raise ImproperlyConfigured(f"""LOG_LEVEL must be one of {",".join(f'"{log_level_choice}"' for log_level_choice in log_level_choices[:-1])} or \"{log_level_choices[-1]}\".""")


# Invariant computation settings

KUPERBERG_BUDGET: int = env("KUPERBERG_BUDGET")
KUPERBERG_NAIVE_BUDGET: int = env("KUPERBERG_NAIVE_BUDGET")
KUPERBERG_HALFINT_COINTEGRAL: str = env("KUPERBERG_HALFINT_COINTEGRAL")
KUPERBERG_DEFAULT_TRIALS: int = env("KUPERBERG_DEFAULT_TRIALS")
KUPERBERG_RANDOM_SEED: int = env("KUPERBERG_RANDOM_SEED")
KUPERBERG_MAX_CYCLOTOMIC_ORDER: int = env("KUPERBERG_MAX_CYCLOTOMIC_ORDER")

if not KUPERBERG_BUDGET > 0:
    raise ImproperlyConfigured("KUPERBERG_BUDGET must be an integer greater than 0.")

if not KUPERBERG_NAIVE_BUDGET > 0:
    raise ImproperlyConfigured("KUPERBERG_NAIVE_BUDGET must be an integer greater than 0.")

halfint_cointegral_choices: Sequence[str] = ("g-action", "antipode-inverse")
if KUPERBERG_HALFINT_COINTEGRAL not in halfint_cointegral_choices:
    raise ImproperlyConfigured("""KUPERBERG_HALFINT_COINTEGRAL must be either "g-action" or "antipode-inverse".""")

if not KUPERBERG_DEFAULT_TRIALS > 0:
    raise ImproperlyConfigured("KUPERBERG_DEFAULT_TRIALS must be an integer greater than 0.")

if not KUPERBERG_MAX_CYCLOTOMIC_ORDER >= 1:
    raise ImproperlyConfigured("KUPERBERG_MAX_CYCLOTOMIC_ORDER must be an integer greater than or equal to 1.")


# Tests settings

TEST_RUNNER = "core.testing.TestRunner"


# Logging settings

LOGGING = {
    "version": 1,
    "formatters": {
        "kuperberg": {
            "format": "{levelname} - {module}: {message}",
            "style": "{"
        }
    },
    "handlers": {
        "kuperberg": {
            "class": "logging.StreamHandler",
            "formatter": "kuperberg"
        }
    },
    "root": {"handlers": ["kuperberg"], "level": log_level}
}


SECRET_KEY = env("SECRET_KEY")  # NOTE: Security Warning - The secret key is used for important secret stuff (keep the one used in production a secret!)


# Application Definition

INSTALLED_APPS = [
    "kuperberg"
]


# Database settings

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3"
    }
}
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Internationalization, Language & Time settings

LANGUAGE_CODE = "en-gb"
TIME_ZONE = "Europe/London"
USE_I18N = True
USE_TZ = True
