"""
    Pytest wiring for the Django test suites: configure settings and set
    up the test database, as `manage.py test` does.
"""

import os

import django


def pytest_configure(config):  # type: ignore[no-untyped-def]
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings")
    django.setup()

    from django.test.utils import setup_test_environment

    from core.testing import TestRunner

    setup_test_environment()
    runner = TestRunner(verbosity=0, interactive=False)
    config._django_runner = runner
    config._django_old_config = runner.setup_databases()


def pytest_unconfigure(config):  # type: ignore[no-untyped-def]
    runner = getattr(config, "_django_runner", None)
    if runner is not None:
        runner.teardown_databases(config._django_old_config)

        from django.test.utils import teardown_test_environment

        teardown_test_environment()
