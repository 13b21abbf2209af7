"""
    Test runner that discovers the project's `*_tests.py` modules.
"""

from typing import Any

from django.test.runner import DiscoverRunner


class TestRunner(DiscoverRunner):
    def __init__(self, pattern: str | None = None, **kwargs: Any) -> None:
        super().__init__(pattern=pattern or "*_tests.py", **kwargs)
