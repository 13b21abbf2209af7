from django.core.exceptions import ValidationError

from kuperberg.exceptions import DuplicatePointIdError, KhdSyntaxError, NonIntegralExponentError, UnknownCurveRefError, UnknownDiagramError
from kuperberg.heegaard import (
    BUILTIN_NAMES,
    DiagramReport,
    FramedHeegaardDiagram,
    GroupPresentation,
    builtin,
    fundamental_group_presentation,
    parse_khd,
    rotation_exponents,
    serialize_khd,
    validate
)
from kuperberg.tests.utils import SimpleTestCase, TestDiagramFactory

SPHERE_TEXT: str = """
genus 1
lower eta1 theta 1/2 phi 1/2 order a
upper mu1 theta -1/2 phi 1/2 order a
point a on eta1 mu1 theta_eta 1/4 theta_mu 0 phi_eta 0 phi_mu 0
"""


class BuiltinDiagramTests(SimpleTestCase):
    def test_builtins_are_valid(self) -> None:
        name: str
        for name in BUILTIN_NAMES:
            with self.subTest(diagram=name):
                report: DiagramReport = validate(TestDiagramFactory.create(name))
                self.assertTrue(report.passed, report.summary())

    def test_shapes(self) -> None:
        weeks: FramedHeegaardDiagram = TestDiagramFactory.create("weeks")
        torus: FramedHeegaardDiagram = TestDiagramFactory.create("torus3")

        self.assertEqual(str(weeks), "weeks (genus 2, 18 points)")
        self.assertEqual(torus.genus, 3)
        self.assertEqual(len(torus.points), 12)
        self.assertEqual(TestDiagramFactory.create("s1xs2").points, ())

    def test_unknown_builtin(self) -> None:
        with self.assertRaises(UnknownDiagramError):
            builtin("poincare")


class RotationExponentTests(SimpleTestCase):
    def test_weeks_exponents(self) -> None:
        exponents: dict[str, tuple[int, int]] = rotation_exponents(TestDiagramFactory.create("weeks"))

        self.assertEqual(list(exponents), [f"p{index}" for index in range(1, 10)] + [f"q{index}" for index in range(1, 10)])
        self.assertEqual(
            [s for s, _ in exponents.values()],
            [-1, 0, -1, -3, -2, -3, -1, -1, 1] + [-1, 0, 0, 0, -2, -2, -1, 0, 0]
        )
        self.assertTrue(all(t == 0 for _, t in exponents.values()))

    def test_torus_exponents(self) -> None:
        exponents: dict[str, tuple[int, int]] = rotation_exponents(TestDiagramFactory.create("torus3"))

        self.assertEqual(
            [s for s, _ in exponents.values()],
            [1, 2, 2, 1] + [1, 1, 2, 2] + [1, 3, 2, 2]
        )
        self.assertTrue(all(t == 0 for _, t in exponents.values()))

    def test_t_exponent(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("phi_eta 0", "phi_eta 1"))

        self.assertEqual(rotation_exponents(d), {"a": (1, 1)})
        self.assertTrue(validate(d).passed)

    def test_nonintegral_exponent(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("theta_mu 0", "theta_mu 1/4"))

        with self.assertRaises(NonIntegralExponentError):
            rotation_exponents(d)

        self.assertIn("exponent", validate(d).rules())


class ValidationTests(SimpleTestCase):
    def test_inadmissible_lower_curve(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("lower eta1 theta 1/2 phi 1/2", "lower eta1 theta 1/2 phi -1/2"))

        report: DiagramReport = validate(d)

        self.assertEqual(report.rules(), {"admissible"})
        with self.assertRaises(ValidationError):
            report.raise_for_violations()

    def test_whole_totals_are_rejected(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("upper mu1 theta -1/2 phi 1/2", "upper mu1 theta -1 phi 1"))

        self.assertIn("half-integer", validate(d).rules())

    def test_eighth_turns_are_rejected(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("theta_eta 1/4", "theta_eta 1/8"))

        self.assertIn("quarter-integer", validate(d).rules())

    def test_order_must_list_incident_points(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("upper mu1 theta -1/2 phi 1/2 order a", "upper mu1 theta -1/2 phi 1/2 order a a"))

        self.assertIn("curve-order", validate(d).rules())

    def test_curve_count_must_match_genus(self) -> None:
        d: FramedHeegaardDiagram = parse_khd(SPHERE_TEXT.replace("genus 1", "genus 2"))

        self.assertIn("curve-count", validate(d).rules())


class ParserTests(SimpleTestCase):
    def test_errors_carry_position(self) -> None:
        with self.assertRaises(KhdSyntaxError) as raised:
            parse_khd("genus 1\nlower eta1 theta x phi 1/2 order\n")

        self.assertEqual(raised.exception.context["line"], 2)
        self.assertEqual(raised.exception.context["column"], 18)
        self.assertIn("theta total", raised.exception.context["expected"])

    def test_missing_genus_header(self) -> None:
        with self.assertRaises(KhdSyntaxError) as raised:
            parse_khd("# comment\nlower eta1 theta 1/2 phi 1/2 order\n")

        self.assertEqual(raised.exception.context["line"], 2)
        self.assertEqual(raised.exception.context["expected"], "genus")

    def test_empty_text(self) -> None:
        with self.assertRaisesMessage(KhdSyntaxError, "Diagram text is empty."):
            parse_khd("\n# nothing\n")

    def test_zero_denominator(self) -> None:
        with self.assertRaises(KhdSyntaxError):
            parse_khd("genus 1\nlower eta1 theta 1/0 phi 1/2 order\n")

    def test_trailing_tokens(self) -> None:
        with self.assertRaises(KhdSyntaxError):
            parse_khd(SPHERE_TEXT.replace("phi_mu 0", "phi_mu 0 extra"))

    def test_unknown_declaration(self) -> None:
        with self.assertRaisesMessage(KhdSyntaxError, "Unknown declaration 'curve'."):
            parse_khd("genus 1\ncurve eta1\n")

    def test_duplicate_point(self) -> None:
        with self.assertRaises(DuplicatePointIdError):
            parse_khd(SPHERE_TEXT + "point a on eta1 mu1 theta_eta 1/4 theta_mu 0 phi_eta 0 phi_mu 0\n")

    def test_point_on_undeclared_curve(self) -> None:
        with self.assertRaises(UnknownCurveRefError):
            parse_khd(SPHERE_TEXT.replace("point a on eta1 mu1", "point a on eta1 mu2"))

    def test_curve_through_undeclared_point(self) -> None:
        with self.assertRaises(UnknownCurveRefError):
            parse_khd(SPHERE_TEXT.replace("order a\nupper", "order a b\nupper"))

    def test_points_are_sorted_naturally(self) -> None:
        d: FramedHeegaardDiagram = TestDiagramFactory.create("weeks")

        self.assertEqual(d.points[8].id, "p9")
        self.assertEqual(d.points[9].id, "q1")

    def test_serialized_text_is_canonical(self) -> None:
        d: FramedHeegaardDiagram = TestDiagramFactory.create("torus3")

        text: str = serialize_khd(d)

        self.assertTrue(text.startswith("genus 3\nlower eta1 theta 1/2 phi 1/2 order p1 p2 p3 p4\n"))
        self.assertEqual(parse_khd(text, name="torus3"), d)
        self.assertEqual(serialize_khd(parse_khd(text)), text)


class PresentationTests(SimpleTestCase):
    def test_torus_relators_are_commutators(self) -> None:
        presentation: GroupPresentation = fundamental_group_presentation(TestDiagramFactory.create("torus3"))

        self.assertEqual(presentation.generators, ("eta1", "eta2", "eta3"))
        self.assertEqual(presentation.relators[0], (("eta1", -1), ("eta3", 1), ("eta1", 1), ("eta3", -1)))

    def test_sphere_presentation_kills_its_generator(self) -> None:
        presentation: GroupPresentation = fundamental_group_presentation(TestDiagramFactory.create("sphere3"))

        self.assertEqual(str(presentation), "⟨eta1 | eta1⁻¹⟩")

    def test_s1xs2_has_an_empty_relator(self) -> None:
        presentation: GroupPresentation = fundamental_group_presentation(TestDiagramFactory.create("s1xs2"))

        self.assertEqual(str(presentation), "⟨eta1 | 1⟩")
