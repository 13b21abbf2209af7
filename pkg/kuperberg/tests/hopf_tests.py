import json
from typing import Any

from django.core.exceptions import ValidationError

from kuperberg.exceptions import BadParamsError, DimensionMismatchError, HopfFormatError, UnknownAlgebraError
from kuperberg.hopf.algebra import AlgebraElement, AxiomReport, HopfAlgebra, TensorElement, antipode_power, check_hopf_axioms, iterated_coproduct
from kuperberg.hopf.catalog import catalog, catalog_names, named_group
from kuperberg.hopf.serialization import dump_hopf, parse_hopf
from kuperberg.scalars import prime_field
from kuperberg.tests.utils import SimpleTestCase, TestAlgebraFactory, data_file


class HopfAxiomTests(SimpleTestCase):
    def test_catalog_algebras_pass(self) -> None:
        name: str
        for name in ("k", "group_algebra_Z3", "group_algebra_S3", "dual_group_algebra_Z2xZ2", "dual_group_algebra_S3", "sweedler_h4", "taft_3"):
            with self.subTest(algebra=name):
                report: AxiomReport = check_hopf_axioms(TestAlgebraFactory.create(name))
                self.assertTrue(report.passed, [str(check) for check in report.failures])

    def test_sweedler_h4_from_its_presentation_passes(self) -> None:
        H: HopfAlgebra = parse_hopf(data_file("sweedler_h4.hopf").read_text(encoding="utf-8"), verify=False)

        report: AxiomReport = check_hopf_axioms(H)

        self.assertTrue(report.passed)
        self.assertEqual(H.mult, TestAlgebraFactory.create("sweedler_h4").mult)

    def test_broken_antipode_is_witnessed(self) -> None:
        H: HopfAlgebra = parse_hopf(data_file("broken_antipode.hopf").read_text(encoding="utf-8"), verify=False)

        report: AxiomReport = check_hopf_axioms(H)

        self.assertFalse(report.passed)
        self.assertEqual([check.name for check in report.failures], ["antipode"])
        self.assertEqual(report.failures[0].witness, ("g",))

        with self.assertRaises(ValidationError):
            report.raise_for_violations()

    def test_verified_parse_rejects_broken_antipode(self) -> None:
        with self.assertRaises(ValidationError):
            parse_hopf(data_file("broken_antipode.hopf").read_text(encoding="utf-8"))


class CoproductTests(SimpleTestCase):
    def test_grouplike_iterates_to_pure_tensor(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("group_algebra_Z2")
        g: AlgebraElement = H.basis_element(H.basis_index("g"))

        self.assertEqual(iterated_coproduct(H, 3, g), TensorElement.pure(g, g, g))

    def test_first_iterate_is_identity(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        x: AlgebraElement = H.basis_element(H.basis_index("x"))

        self.assertEqual(iterated_coproduct(H, 1, x), TensorElement.from_element(x))

    def test_sweedler_x_coproduct(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        x: AlgebraElement = H.basis_element(H.basis_index("x"))
        g: AlgebraElement = H.basis_element(H.basis_index("g"))

        self.assertEqual(iterated_coproduct(H, 2, x), TensorElement.pure(x, H.one()) + TensorElement.pure(g, x))

    def test_iterates_agree_with_both_associations(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        gx: AlgebraElement = H.basis_element(H.basis_index("gx"))
        twice: TensorElement = iterated_coproduct(H, 2, gx)

        self.assertEqual(iterated_coproduct(H, 3, gx), twice.coproduct_on_leg(0))
        self.assertEqual(iterated_coproduct(H, 3, gx), twice.coproduct_on_leg(1))

    def test_zeroth_iterate_is_counit(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")

        self.assertTrue(iterated_coproduct(H, 0, H.basis_element(H.basis_index("x"))).is_zero())
        self.assertEqual(iterated_coproduct(H, 0, H.basis_element(H.basis_index("g"))).as_element(), H.one())

    def test_negative_iterate_is_rejected(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("k")
        with self.assertRaises(DimensionMismatchError):
            iterated_coproduct(H, -1, H.one())


class AntipodePowerTests(SimpleTestCase):
    def test_zeroth_power_is_identity(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        x: AlgebraElement = H.basis_element(H.basis_index("x"))

        self.assertEqual(antipode_power(H, 0, x), x)

    def test_sweedler_square_conjugates_by_g(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("sweedler_h4")
        x: AlgebraElement = H.basis_element(H.basis_index("x"))
        g: AlgebraElement = H.basis_element(H.basis_index("g"))

        self.assertEqual(antipode_power(H, 2, x), g * x * g)
        self.assertEqual(antipode_power(H, 2, x), -x)

    def test_negative_powers_invert(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("taft_3")
        index: int
        for index in range(H.dim):
            element: AlgebraElement = H.basis_element(index)
            with self.subTest(element=H.basis_labels[index]):
                self.assertEqual(antipode_power(H, -3, antipode_power(H, 3, element)), element)

    def test_group_algebra_antipode_is_involutive(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("group_algebra_S3")
        index: int
        for index in range(H.dim):
            self.assertEqual(antipode_power(H, 2, H.basis_element(index)), H.basis_element(index))


class CatalogTests(SimpleTestCase):
    def test_names_build(self) -> None:
        name: str
        for name in catalog_names():
            with self.subTest(algebra=name):
                self.assertEqual(TestAlgebraFactory.create(name).name, name)

    def test_dimensions(self) -> None:
        self.assertEqual(TestAlgebraFactory.create("group_algebra_Q8").dim, 8)
        self.assertEqual(TestAlgebraFactory.create("dual_group_algebra_Z2xZ2xZ2").dim, 8)
        self.assertEqual(TestAlgebraFactory.create("taft_4").dim, 16)
        self.assertEqual(TestAlgebraFactory.create("k").dim, 1)

    def test_prime_field_suffix(self) -> None:
        self.assertEqual(catalog("sweedler_h4@F5").field, prime_field(5))

    def test_prime_dividing_dimension_needs_override(self) -> None:
        with self.assertRaises(BadParamsError):
            catalog("group_algebra_Z2@F2")

        self.assertEqual(catalog("group_algebra_Z2@F2", allow_degenerate=True).field, prime_field(2))

    def test_unknown_name(self) -> None:
        with self.assertRaises(UnknownAlgebraError):
            catalog("quantum_sl2")

        with self.assertRaises(UnknownAlgebraError):
            named_group("A5")

    def test_named_groups(self) -> None:
        self.assertEqual(named_group("Z2xZ4").order, 8)
        self.assertEqual(named_group("D4").order, 8)
        self.assertEqual(named_group("S3").order, 6)


class HopfDocumentTests(SimpleTestCase):
    def test_dump_then_parse_keeps_structure(self) -> None:
        H: HopfAlgebra = TestAlgebraFactory.create("taft_3")

        parsed: HopfAlgebra = parse_hopf(dump_hopf(H))

        self.assertEqual(parsed.name, H.name)
        self.assertEqual(parsed.field, H.field)
        self.assertEqual(parsed.mult, H.mult)
        self.assertEqual(parsed.comult, H.comult)
        self.assertEqual(parsed.antipode_matrix(), H.antipode_matrix())

    def test_invalid_json(self) -> None:
        with self.assertRaisesMessage(HopfFormatError, "Document is not valid JSON."):
            parse_hopf("{\"name\": ")

    def test_missing_fields(self) -> None:
        with self.assertRaisesMessage(HopfFormatError, "Document lacks required fields."):
            parse_hopf("{\"name\": \"empty\"}")

    def test_unreadable_scalar(self) -> None:
        document: dict[str, Any] = json.loads(dump_hopf(TestAlgebraFactory.create("group_algebra_Z2")))
        document["mult"][0][3] = "one"

        with self.assertRaises(HopfFormatError):
            parse_hopf(json.dumps(document))
