from django.test.utils import iter_test_cases

from core.testing import TestRunner
from kuperberg.tests.utils import SimpleTestCase


class TestDiscoveryTests(SimpleTestCase):
    def test_app_label_collects_every_suite(self) -> None:
        test_ids: set[str] = {test.id() for test in iter_test_cases(TestRunner(verbosity=0).build_suite(["kuperberg"]))}

        module: str
        for module in ("evaluator_tests", "heegaard_tests", "integrals_tests", "lemma_tests", "runner_tests"):
            with self.subTest(module=module):
                self.assertTrue(any(test_id.startswith(f"kuperberg.tests.{module}.") for test_id in test_ids))

    def test_pattern_defaults_to_tests_suffix(self) -> None:
        self.assertEqual(TestRunner().pattern, "*_tests.py")
