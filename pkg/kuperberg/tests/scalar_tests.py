import random
from fractions import Fraction

from hypothesis import given, settings, strategies

from kuperberg.exceptions import BadParamsError, DivisionByZeroError, FieldMismatchError
from kuperberg.scalars import (
    FieldDescriptor,
    FieldKind,
    Scalar,
    cyclotomic_field,
    cyclotomic_reduce,
    field_arith,
    parse_scalar,
    prime_field,
    rational_field
)
from kuperberg.tests.utils import SimpleTestCase

SWEEP_SAMPLES: int = 10 ** 4

small_fractions = strategies.fractions(min_value=-50, max_value=50, max_denominator=12)


def rational_scalars() -> strategies.SearchStrategy[Scalar]:
    return small_fractions.map(rational_field().from_fraction)


def prime_scalars(p: int) -> strategies.SearchStrategy[Scalar]:
    return strategies.integers(min_value=0, max_value=p - 1).map(prime_field(p).from_int)


def cyclotomic_scalars(n: int) -> strategies.SearchStrategy[Scalar]:
    return strategies.lists(small_fractions, min_size=1, max_size=2 * n).map(lambda poly: cyclotomic_reduce(poly, n))


def _random_scalar(field: FieldDescriptor, rng: random.Random) -> Scalar:
    if field.kind is FieldKind.CYCLOTOMIC:
        return cyclotomic_reduce([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(field.degree)], field.modulus)  # type: ignore[arg-type]
    return field.from_fraction(Fraction(rng.randint(-99, 99), rng.randint(1, 6) if field.kind is FieldKind.RATIONAL else 1))


class CyclotomicReductionTests(SimpleTestCase):
    def test_cube_of_zeta3_is_one(self) -> None:
        self.assertEqual(cyclotomic_reduce([0, 0, 0, 1], 3), cyclotomic_field(3).one())

    def test_square_of_zeta4_is_minus_one(self) -> None:
        self.assertEqual(cyclotomic_reduce([0, 0, 1], 4), -cyclotomic_field(4).one())

    def test_zeta3_plus_its_square_is_minus_one(self) -> None:
        self.assertEqual(cyclotomic_reduce([0, 0, 1, 0, 1], 3), -cyclotomic_field(3).one())

    def test_zeta_has_exact_order(self) -> None:
        n: int
        for n in (3, 4, 5, 8, 12):
            with self.subTest(n=n):
                zeta: Scalar = cyclotomic_field(n).zeta()
                self.assertEqual(zeta ** n, cyclotomic_field(n).one())
                self.assertTrue(all(zeta ** k != 1 for k in range(1, n)))

    def test_canonical_forms_compare_equal(self) -> None:
        # 1 + ζ₆² = ζ₆ in ℚ(ζ₆) since Φ₆ = x² − x + 1
        self.assertEqual(cyclotomic_reduce([1, 0, 1], 6), cyclotomic_field(6).zeta())


class FieldAxiomTests(SimpleTestCase):
    @given(rational_scalars(), rational_scalars(), rational_scalars())
    def test_rational_field_axioms(self, a: Scalar, b: Scalar, c: Scalar) -> None:
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a + b) - b, a)
        if not a.is_zero():
            self.assertEqual(a.inverse() * a, rational_field().one())

    @given(prime_scalars(7), prime_scalars(7), prime_scalars(7))
    def test_prime_field_axioms(self, a: Scalar, b: Scalar, c: Scalar) -> None:
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a * b) * c, a * (b * c))
        if not a.is_zero():
            self.assertEqual(a.inverse() * a, prime_field(7).one())

    @settings(max_examples=60, deadline=None)
    @given(cyclotomic_scalars(5), cyclotomic_scalars(5), cyclotomic_scalars(5))
    def test_cyclotomic_field_axioms(self, a: Scalar, b: Scalar, c: Scalar) -> None:
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a * b) * c, a * (b * c))
        if not a.is_zero():
            self.assertEqual(a.inverse() * a, cyclotomic_field(5).one())

    def test_seeded_sweep(self) -> None:
        field: FieldDescriptor
        for field in (rational_field(), prime_field(11), cyclotomic_field(3)):
            with self.subTest(field=str(field)):
                rng: random.Random = random.Random(0)
                _: int
                for _ in range(SWEEP_SAMPLES):
                    a: Scalar = _random_scalar(field, rng)
                    b: Scalar = _random_scalar(field, rng)
                    self.assertEqual((a + b) * b, a * b + b * b)
                    if not a.is_zero():
                        self.assertEqual(a.inverse() * a, field.one())


class FieldErrorTests(SimpleTestCase):
    def test_zero_has_no_inverse(self) -> None:
        field: FieldDescriptor
        for field in (rational_field(), prime_field(5), cyclotomic_field(4)):
            with self.subTest(field=str(field)), self.assertRaises(DivisionByZeroError):
                field.zero().inverse()

    def test_division_by_zero_is_also_a_zero_division_error(self) -> None:
        with self.assertRaises(ZeroDivisionError):
            rational_field().one() / 0

    def test_mixed_fields_are_rejected(self) -> None:
        with self.assertRaises(FieldMismatchError):
            rational_field().one() + prime_field(5).one()

        with self.assertRaises(FieldMismatchError):
            field_arith(prime_field(3).one(), prime_field(5).one(), "mul")

    def test_prime_field_needs_prime_modulus(self) -> None:
        with self.assertRaisesMessage(BadParamsError, "Prime fields need a prime modulus."):
            FieldDescriptor(FieldKind.PRIME, 8)

    def test_cyclotomic_order_is_bounded(self) -> None:
        with self.assertRaises(BadParamsError):
            FieldDescriptor(FieldKind.CYCLOTOMIC, 65)

    def test_unknown_operation(self) -> None:
        with self.assertRaisesMessage(BadParamsError, "Unknown field operation."):
            field_arith(rational_field().one(), rational_field().one(), "pow")

    def test_denominator_vanishing_mod_p(self) -> None:
        with self.assertRaises(DivisionByZeroError):
            prime_field(3).from_fraction(Fraction(1, 3))


class FieldArithTests(SimpleTestCase):
    def test_named_operations(self) -> None:
        field: FieldDescriptor = prime_field(7)
        three: Scalar = field.from_int(3)
        five: Scalar = field.from_int(5)

        self.assertEqual(field_arith(three, five, "add"), field.from_int(1))
        self.assertEqual(field_arith(three, five, "mul"), field.from_int(1))
        self.assertEqual(field_arith(three, None, "inv"), five)
        self.assertEqual(field_arith(three, None, "neg"), field.from_int(4))
        self.assertIs(field_arith(three, five, "eq"), False)

    def test_binary_operation_needs_two_operands(self) -> None:
        with self.assertRaises(BadParamsError):
            field_arith(rational_field().one(), None, "add")


class ScalarTextTests(SimpleTestCase):
    def test_parse_prime_residue(self) -> None:
        self.assertEqual(parse_scalar("-1 mod 7"), prime_field(7).from_int(6))

    def test_parse_embeds_rationals(self) -> None:
        self.assertEqual(parse_scalar("1/2", prime_field(5)), prime_field(5).from_int(3))

    def test_parse_cyclotomic(self) -> None:
        self.assertEqual(parse_scalar("[0,1] zeta 4"), cyclotomic_field(4).zeta())

    def test_text_form_is_parseable(self) -> None:
        value: Scalar = cyclotomic_reduce([Fraction(1, 2), -3], 5)
        self.assertEqual(parse_scalar(str(value)), value)

    def test_unreadable_text(self) -> None:
        with self.assertRaises(BadParamsError):
            parse_scalar("one half")

    def test_field_descriptor_text(self) -> None:
        self.assertEqual(FieldDescriptor.parse("F7"), prime_field(7))
        self.assertEqual(FieldDescriptor.parse("Q(zeta8)"), cyclotomic_field(8))
        self.assertEqual(FieldDescriptor.parse(str(cyclotomic_field(3))), cyclotomic_field(3))
        self.assertEqual(str(rational_field()), "rational")
