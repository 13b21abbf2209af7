"""
    Defaults for the KUPERBERG_* settings. The math modules read them through
    `setting()` so they also work without a configured Django project.
"""

from typing import Any, Final

DEFAULTS: Final[dict[str, Any]] = {
    "KUPERBERG_BUDGET": 2 ** 26,
    "KUPERBERG_NAIVE_BUDGET": 2 ** 30,
    "KUPERBERG_HALFINT_COINTEGRAL": "antipode-inverse",
    "KUPERBERG_DEFAULT_TRIALS": 50,
    "KUPERBERG_RANDOM_SEED": 0,
    "KUPERBERG_MAX_CYCLOTOMIC_ORDER": 64
}


def setting(name: str) -> Any:
    from django.conf import settings

    if settings.configured:
        return getattr(settings, name, DEFAULTS[name])
    return DEFAULTS[name]
