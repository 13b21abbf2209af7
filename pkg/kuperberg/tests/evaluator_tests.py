from typing import Any

from django.core.exceptions import ValidationError
from django.test import override_settings

from kuperberg.evaluator import (
    GaugeVerdict,
    InvariantResult,
    evaluate,
    evaluate_naive,
    framing_ratio,
    gauge_check,
    group_algebra_invariant,
    plan_contraction,
    torus_closed_form,
    weeks_closed_form
)
from kuperberg.evaluator.network import ContractionPlan
from kuperberg.exceptions import BudgetExceededError, PlanFailureError
from kuperberg.heegaard import BUILTIN_NAMES, FramedHeegaardDiagram, parse_khd
from kuperberg.hopf.algebra import HopfAlgebra
from kuperberg.hopf.catalog import GROUP_NAMES, catalog_names, named_group
from kuperberg.hopf.integrals import HALFINT_ANTIPODE_INVERSE, HALFINT_G_ACTION, IntegralPair
from kuperberg.scalars import Scalar
from kuperberg.tests.utils import SimpleTestCase, TestAlgebraFactory, TestCocycleFactory, TestDiagramFactory, TestIntegralsFactory

CLOSED_FORM_ALGEBRAS: tuple[str, ...] = (
    "k", "group_algebra_Z2", "group_algebra_Z3", "group_algebra_S3", "dual_group_algebra_Z2xZ2", "sweedler_h4", "taft_3"
)

ORACLE_BUDGET: int = 2 ** 20
# Δ⁹(δ_e) has |G|⁸ terms on each lower curve of weeks
NAIVE_OUT_OF_BUDGET: frozenset[tuple[str, str]] = frozenset({
    ("dual_group_algebra_Z3", "weeks"),
    ("dual_group_algebra_Z4", "weeks"),
    ("dual_group_algebra_Z2xZ2", "weeks")
})


def _z(algebra: str, diagram: str, **kwargs: Any) -> Scalar:
    return evaluate(
        TestAlgebraFactory.create(algebra),
        TestIntegralsFactory.create(algebra),
        TestDiagramFactory.create(diagram),
        **kwargs
    ).value


class SmallManifoldTests(SimpleTestCase):
    def test_ground_field_gives_one(self) -> None:
        name: str
        for name in BUILTIN_NAMES:
            with self.subTest(diagram=name):
                self.assertEqual(_z("k", name), 1)

    def test_sphere_gives_one(self) -> None:
        name: str
        for name in ("group_algebra_S3", "dual_group_algebra_Z3", "sweedler_h4", "taft_3"):
            with self.subTest(algebra=name):
                self.assertEqual(_z(name, "sphere3"), 1)

    def test_s1xs2_counts_the_dimension_when_semisimple(self) -> None:
        self.assertEqual(_z("group_algebra_Z3", "s1xs2"), 3)
        self.assertEqual(_z("group_algebra_S3", "s1xs2"), 6)
        self.assertEqual(_z("dual_group_algebra_Z3", "s1xs2"), 3)

    def test_s1xs2_vanishes_for_sweedler(self) -> None:
        self.assertEqual(_z("sweedler_h4", "s1xs2"), 0)


class GroupAlgebraTests(SimpleTestCase):
    def test_invariant_counts_homomorphisms(self) -> None:
        group: str
        for group in ("Z2", "Z3", "S3"):
            diagram: str
            for diagram in ("weeks", "torus3"):
                with self.subTest(group=group, diagram=diagram):
                    self.assertEqual(
                        _z(f"group_algebra_{group}", diagram),
                        group_algebra_invariant(TestDiagramFactory.create(diagram), named_group(group))
                    )

    def test_torus_values(self) -> None:
        self.assertEqual(_z("group_algebra_Z2", "torus3"), 8)
        self.assertEqual(_z("group_algebra_S3", "torus3"), 48)
        self.assertEqual(_z("group_algebra_Z3", "weeks"), 1)


class NaiveEvaluationTests(SimpleTestCase):
    def test_naive_matches_planned_on_small_algebras(self) -> None:
        algebras: list[str] = [name for name in catalog_names() if TestAlgebraFactory.create(name).dim <= 4]
        algebra: str
        for algebra in algebras:
            diagram: str
            for diagram in BUILTIN_NAMES:
                if (algebra, diagram) in NAIVE_OUT_OF_BUDGET:
                    continue
                with self.subTest(algebra=algebra, diagram=diagram):
                    self.assert_naive_matches_planned(algebra, diagram)

    def test_naive_matches_planned_on_torus_over_group_algebras(self) -> None:
        group: str
        for group in GROUP_NAMES:
            if named_group(group).order > 8:
                continue
            with self.subTest(group=group):
                self.assert_naive_matches_planned(f"group_algebra_{group}", "torus3")

    def test_large_expansions_exceed_the_budget(self) -> None:
        algebra: str
        diagram: str
        for algebra, diagram in NAIVE_OUT_OF_BUDGET:
            with self.subTest(algebra=algebra, diagram=diagram):
                with self.assertRaises(BudgetExceededError):
                    evaluate_naive(
                        TestAlgebraFactory.create(algebra),
                        TestIntegralsFactory.create(algebra),
                        TestDiagramFactory.create(diagram),
                        budget=ORACLE_BUDGET
                    )

    def test_naive_budget(self) -> None:
        with self.assertRaises(BudgetExceededError):
            evaluate_naive(
                TestAlgebraFactory.create("sweedler_h4"),
                TestIntegralsFactory.create("sweedler_h4"),
                TestDiagramFactory.create("weeks"),
                budget=10
            )

    def assert_naive_matches_planned(self, algebra: str, diagram: str) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create(algebra)
        P: IntegralPair = TestIntegralsFactory.create(algebra)
        d: FramedHeegaardDiagram = TestDiagramFactory.create(diagram)

        naive: InvariantResult = evaluate_naive(H, P, d, budget=ORACLE_BUDGET)

        self.assertEqual(naive.method, "naive")
        self.assertEqual(naive.value, evaluate(H, P, d).value)


class ClosedFormTests(SimpleTestCase):
    def test_weeks_closed_form(self) -> None:
        name: str
        for name in CLOSED_FORM_ALGEBRAS:
            with self.subTest(algebra=name):
                H: HopfAlgebra = TestAlgebraFactory.create(name)
                P: IntegralPair = TestIntegralsFactory.create(name)
                self.assertEqual(P.alpha_of_g * _z(name, "weeks"), weeks_closed_form(H, P))

    def test_weeks_closed_form_needs_the_character_on_taft(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("taft_3")
        P: IntegralPair = TestIntegralsFactory.create("taft_3")

        self.assertFalse(weeks_closed_form(H, P).is_zero())
        self.assertNotEqual(_z("taft_3", "weeks"), weeks_closed_form(H, P))

    def test_torus_closed_form(self) -> None:
        name: str
        for name in CLOSED_FORM_ALGEBRAS:
            with self.subTest(algebra=name):
                H: HopfAlgebra = TestAlgebraFactory.create(name)
                P: IntegralPair = TestIntegralsFactory.create(name)
                self.assertEqual(torus_closed_form(H, P), _z(name, "torus3"))


class FramingTests(SimpleTestCase):
    def test_degree_offset_scales_by_distinguished_character(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("taft_3")
        P: IntegralPair = TestIntegralsFactory.create("taft_3")
        d: FramedHeegaardDiagram = TestDiagramFactory.create("sphere3")

        offset: int
        for offset in (-1, 1, 2):
            with self.subTest(offset=offset):
                self.assertEqual(framing_ratio(H, P, d, offset), P.alpha_of_g ** offset)
                self.assertEqual(evaluate(H, P, d, offset).value, P.alpha_of_g ** offset)

    def test_sweedler_framing_ratio(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        P: IntegralPair = TestIntegralsFactory.create("sweedler_h4")

        diagram: str
        for diagram in ("sphere3", "weeks"):
            d: FramedHeegaardDiagram = TestDiagramFactory.create(diagram)
            offset: int
            for offset in range(-2, 3):
                with self.subTest(diagram=diagram, offset=offset):
                    self.assertEqual(framing_ratio(H, P, d, offset), P.alpha_of_g ** offset)

    def test_framing_ratio_when_the_invariant_vanishes(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        P: IntegralPair = TestIntegralsFactory.create("sweedler_h4")

        self.assertEqual(framing_ratio(H, P, TestDiagramFactory.create("s1xs2"), 1), -H.field.one())

    def test_unimodular_algebras_ignore_framing(self) -> None:
        self.assertEqual(_z("group_algebra_Z2", "torus3", degree_offset=3), 8)

    def test_conventions_give_equal_invariants(self) -> None:
        name: str
        for name in ("sweedler_h4", "dual_group_algebra_Z3"):
            diagram: str
            for diagram in ("weeks", "torus3"):
                with self.subTest(algebra=name, diagram=diagram):
                    self.assertEqual(
                        _z(name, diagram, convention=HALFINT_G_ACTION),
                        _z(name, diagram, convention=HALFINT_ANTIPODE_INVERSE)
                    )

    @override_settings(KUPERBERG_HALFINT_COINTEGRAL=HALFINT_G_ACTION)
    def test_default_convention_follows_settings(self) -> None:
        result: InvariantResult = evaluate(
            TestAlgebraFactory.create("sweedler_h4"),
            TestIntegralsFactory.create("sweedler_h4"),
            TestDiagramFactory.create("sphere3")
        )

        self.assertEqual(result.convention, HALFINT_G_ACTION)

    def test_t_power_is_trivial_when_s_squared_is_conjugation_by_g(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(
            "genus 1\n"
            "lower eta1 theta 1/2 phi 1/2 order a\n"
            "upper mu1 theta -1/2 phi 1/2 order a\n"
            "point a on eta1 mu1 theta_eta 1/4 theta_mu 0 phi_eta 1 phi_mu 0\n",
            name="sphere3_t1"
        )

        name: str
        for name in ("group_algebra_S3", "sweedler_h4"):
            with self.subTest(algebra=name):
                self.assertEqual(
                    evaluate(TestAlgebraFactory.create(name), TestIntegralsFactory.create(name), d).value,
                    _z(name, "sphere3")
                )


class GaugeTests(SimpleTestCase):
    def test_sweedler_idempotent_twists(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        P: IntegralPair = TestIntegralsFactory.create("sweedler_h4")
        c: int
        for c in (2, 3):
            diagram: str
            for diagram in ("sphere3", "weeks", "torus3"):
                with self.subTest(c=c, diagram=diagram):
                    verdict: GaugeVerdict = gauge_check(
                        H, P, TestCocycleFactory.create("h4_idempotent", c=c), TestDiagramFactory.create(diagram)
                    )
                    self.assertTrue(verdict.equal, str(verdict))
                    self.assertTrue(str(verdict).startswith("EQUAL: "))

    def test_sweedler_weeks_value_survives_the_twist(self) -> None:
        verdict: GaugeVerdict = gauge_check(
            TestAlgebraFactory.create("sweedler_h4"),
            TestIntegralsFactory.create("sweedler_h4"),
            TestCocycleFactory.create("h4_idempotent", c=2),
            TestDiagramFactory.create("weeks")
        )

        self.assertEqual(verdict.z, -25)
        self.assertEqual(verdict.z_twisted, -25)

    def test_bicharacter_twist(self) -> None:
        diagram: str
        for diagram in ("weeks", "torus3"):
            with self.subTest(diagram=diagram):
                verdict: GaugeVerdict = gauge_check(
                    TestAlgebraFactory.create("dual_group_algebra_Z2xZ2"),
                    TestIntegralsFactory.create("dual_group_algebra_Z2xZ2"),
                    TestCocycleFactory.create("z2xz2_bicharacter"),
                    TestDiagramFactory.create(diagram)
                )

                self.assertTrue(verdict.equal, str(verdict))
                self.assertEqual(verdict.z, verdict.z_twisted)

    def test_bicharacter_torus_value(self) -> None:
        self.assertEqual(_z("dual_group_algebra_Z2xZ2", "torus3"), 64)


class PlanningTests(SimpleTestCase):
    def test_plan_covers_every_tensor(self) -> None:
        plan: ContractionPlan = plan_contraction(TestDiagramFactory.create("weeks"), TestAlgebraFactory.create("sweedler_h4"))

        self.assertEqual(len(plan.steps), len(plan.nodes) - 1)
        self.assertTrue(plan.describe().startswith(f"{len(plan.nodes)} tensors"))

    def test_budget_too_small_to_plan(self) -> None:
        with self.assertRaises(PlanFailureError):
            _z("sweedler_h4", "weeks", budget=1)

    def test_invalid_diagram_is_refused(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(
            "genus 1\n"
            "lower eta1 theta 1/2 phi -1/2 order a\n"
            "upper mu1 theta -1/2 phi 1/2 order a\n"
            "point a on eta1 mu1 theta_eta 1/4 theta_mu 0 phi_eta 0 phi_mu 0\n"
        )

        with self.assertRaises(ValidationError):
            evaluate(TestAlgebraFactory.create("k"), TestIntegralsFactory.create("k"), d)


class InvariantResultTests(SimpleTestCase):
    def test_result_text(self) -> None:
        result: InvariantResult = evaluate(
            TestAlgebraFactory.create("group_algebra_Z2"),
            TestIntegralsFactory.create("group_algebra_Z2"),
            TestDiagramFactory.create("torus3")
        )

        self.assertEqual(str(result), "Z(torus3, group_algebra_Z2; degree 0) = 8")
        self.assertTrue(result.as_machine_record().startswith(
            "algebra=group_algebra_Z2 diagram=torus3 degree_offset=0 convention=antipode-inverse value=8 field=rational "
        ))
        self.assertTrue(result.as_machine_record().endswith(" method=planned"))
        self.assertGreater(result.term_count, 0)

    def test_record_quotes_values_with_spaces(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4@F5")
        P: IntegralPair = TestIntegralsFactory.create("sweedler_h4@F5")

        result: InvariantResult = evaluate(H, P, TestDiagramFactory.create("sphere3"))

        self.assertIn("value='1 mod 5' field='prime 5'", result.as_machine_record())
