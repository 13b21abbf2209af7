"""
    Exact field arithmetic underlying every tensor in the kuperberg app:
    rationals, prime fields & cyclotomic extensions ℚ[x]/Φ_n(x).
"""

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Final, Iterable, Sequence, TypeAlias

from sympy import Poly, QQ, Symbol, cyclotomic_poly, isprime, totient

from kuperberg.conf import setting
from kuperberg.exceptions import BadParamsError, DivisionByZeroError, FieldMismatchError

RawValue: TypeAlias = Fraction | int | tuple[Fraction, ...]

_POLY_VARIABLE: Final[Symbol] = Symbol("x")


def _max_cyclotomic_order() -> int:
    return int(setting("KUPERBERG_MAX_CYCLOTOMIC_ORDER"))


@functools.cache
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """
        Returns the coefficients of the n-th cyclotomic polynomial Φ_n in
        ascending degree order (the leading coefficient is always 1).
    """

    return tuple(int(coefficient) for coefficient in reversed(cyclotomic_poly(n, _POLY_VARIABLE, polys=True).all_coeffs()))


class FieldKind(enum.Enum):
    RATIONAL = "rational"
    PRIME = "prime"
    CYCLOTOMIC = "cyclotomic"


@dataclass(frozen=True)
class FieldDescriptor:
    """
        Description of an exact field. `modulus` holds the prime p for prime
        fields & the order n of the adjoined root of unity for cyclotomic
        fields.
    """

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONAL:
            if self.modulus is not None:
                raise BadParamsError("The rational field takes no modulus.", modulus=self.modulus)

        elif self.kind is FieldKind.PRIME:
            if self.modulus is None or not isprime(self.modulus):
                raise BadParamsError("Prime fields need a prime modulus.", modulus=self.modulus)

        elif self.modulus is None or not 1 <= self.modulus <= _max_cyclotomic_order():
            raise BadParamsError(
                f"Cyclotomic order must be between 1 and {_max_cyclotomic_order()}.",
                modulus=self.modulus
            )

    @property
    def degree(self) -> int:
        """ Dimension of the field as a vector space over its prime field. """

        if self.kind is FieldKind.CYCLOTOMIC:
            return int(totient(self.modulus))
        return 1

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind is FieldKind.PRIME else 0  # type: ignore[return-value]

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, value: int) -> "Scalar":
        return self.from_fraction(Fraction(value))

    def from_fraction(self, value: Fraction | int) -> "Scalar":
        value = Fraction(value)

        if self.kind is FieldKind.RATIONAL:
            return Scalar(self, value)

        if self.kind is FieldKind.PRIME:
            p: int = self.characteristic
            if value.denominator % p == 0:
                raise DivisionByZeroError(f"Denominator vanishes in F_{p}.", value=str(value))
            return Scalar(self, value.numerator * pow(value.denominator, -1, p) % p)

        return Scalar(self, (value,) + (Fraction(0),) * (self.degree - 1))

    def zeta(self) -> "Scalar":
        """ Returns the primitive root of unity ζ_n adjoined by this field. """

        if self.kind is not FieldKind.CYCLOTOMIC:
            raise BadParamsError("Only cyclotomic fields have a distinguished root of unity.", field=str(self))
        return cyclotomic_reduce([0, 1], self.modulus)  # type: ignore[arg-type]

    def contains_root_of_unity(self, order: int) -> bool:
        """ Whether this field contains a primitive root of unity of the given order. """

        if order <= 2:
            return self.characteristic != 2 or order == 1
        if self.kind is FieldKind.CYCLOTOMIC:
            n: int = self.modulus  # type: ignore[assignment]
            return n % order == 0 or (n % 2 == 1 and (2 * n) % order == 0)
        if self.kind is FieldKind.PRIME:
            return (self.characteristic - 1) % order == 0
        return False

    def primitive_root_of_unity(self, order: int) -> "Scalar":
        """ Returns a primitive root of unity of the given order inside this field. """

        if not self.contains_root_of_unity(order):
            raise BadParamsError("Field has no primitive root of unity of this order.", field=str(self), order=order)

        if order == 1:
            return self.one()
        if order == 2:
            return -self.one()

        if self.kind is FieldKind.CYCLOTOMIC:
            n: int = self.modulus  # type: ignore[assignment]
            if n % order == 0:
                return self.zeta() ** (n // order)
            # -ζ_n is a primitive 2n-th root of unity when n is odd
            return (-self.zeta()) ** ((2 * n) // order)

        p: int = self.characteristic
        candidate: int
        for candidate in range(2, p):
            if pow(candidate, order, p) == 1 and all(pow(candidate, order // q, p) != 1 for q in _prime_divisors(order)):
                return Scalar(self, candidate)
        raise BadParamsError("Field has no primitive root of unity of this order.", field=str(self), order=order)

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "rational"
        return f"{self.kind.value} {self.modulus}"

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        """
            Parses the text forms "rational", "prime <p>" & "cyclotomic <n>"
            (the short forms "Q", "F<p>" & "Q(zeta<n>)" are accepted too).
        """

        stripped_text: str = text.strip()
        if stripped_text in ("rational", "Q"):
            return rational_field()

        match: re.Match[str] | None = re.fullmatch(r"(?:prime\s+|F_?)(\d+)", stripped_text)
        if match:
            return prime_field(int(match.group(1)))

        match = re.fullmatch(r"(?:cyclotomic\s+|Q\(zeta_?)(\d+)\)?", stripped_text)
        if match:
            return cyclotomic_field(int(match.group(1)))

        raise BadParamsError("Unrecognised field description.", text=text)


@functools.cache
def rational_field() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONAL)


@functools.cache
def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME, p)


@functools.cache
def cyclotomic_field(n: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.CYCLOTOMIC, n)


def _prime_divisors(n: int) -> set[int]:
    divisors: set[int] = set()
    candidate: int = 2
    while candidate * candidate <= n:
        while n % candidate == 0:
            divisors.add(candidate)
            n //= candidate
        candidate += 1
    if n > 1:
        divisors.add(n)
    return divisors


def _reduce_polynomial(coefficients: Sequence[Fraction | int], n: int) -> tuple[Fraction, ...]:
    modulus: tuple[int, ...] = cyclotomic_coefficients(n)
    degree: int = len(modulus) - 1
    remainder: list[Fraction] = [Fraction(coefficient) for coefficient in coefficients]

    index: int
    for index in range(len(remainder) - 1, degree - 1, -1):
        leading: Fraction = remainder[index]
        if not leading:
            continue

        offset: int = index - degree
        modulus_index: int
        modulus_coefficient: int
        for modulus_index, modulus_coefficient in enumerate(modulus):
            if modulus_coefficient:
                remainder[offset + modulus_index] -= leading * modulus_coefficient

    remainder = remainder[:degree]
    return tuple(remainder) + (Fraction(0),) * (degree - len(remainder))


class Scalar:
    """
        Immutable element of an exact field, always held in canonical form:
        a reduced Fraction, a residue in [0, p) or a tuple of deg Φ_n reduced
        Fraction coefficients.
    """

    __slots__ = ("field", "value")

    field: FieldDescriptor
    value: RawValue

    def __init__(self, field: FieldDescriptor, value: RawValue) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Scalar values are immutable.")

    def _coerce(self, other: "Scalar | int | Fraction") -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(left=str(self.field), right=str(other.field))
            return other

        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)

        return NotImplemented

    def is_zero(self) -> bool:
        if self.field.kind is FieldKind.CYCLOTOMIC:
            return not any(self.value)  # type: ignore[arg-type]
        return not self.value

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        if self.field.kind is FieldKind.RATIONAL:
            return Scalar(self.field, self.value + other.value)  # type: ignore[operator]
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, (self.value + other.value) % self.field.characteristic)  # type: ignore[operator]
        return Scalar(self.field, tuple(a + b for a, b in zip(self.value, other.value)))  # type: ignore[arg-type]

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        if self.field.kind is FieldKind.RATIONAL:
            return Scalar(self.field, -self.value)  # type: ignore[operator]
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, -self.value % self.field.characteristic)  # type: ignore[operator]
        return Scalar(self.field, tuple(-a for a in self.value))  # type: ignore[union-attr]

    def __sub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> "Scalar":
        return self._coerce(other) - self

    def __mul__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented

        if self.field.kind is FieldKind.RATIONAL:
            return Scalar(self.field, self.value * other.value)  # type: ignore[operator]
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, self.value * other.value % self.field.characteristic)  # type: ignore[operator]

        left: tuple[Fraction, ...] = self.value  # type: ignore[assignment]
        right: tuple[Fraction, ...] = other.value  # type: ignore[assignment]
        product: list[Fraction] = [Fraction(0)] * (len(left) + len(right) - 1)
        i: int
        a: Fraction
        for i, a in enumerate(left):
            if not a:
                continue
            j: int
            b: Fraction
            for j, b in enumerate(right):
                if b:
                    product[i + j] += a * b
        return Scalar(self.field, _reduce_polynomial(product, self.field.modulus))  # type: ignore[arg-type]

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZeroError(field=str(self.field))

        if self.field.kind is FieldKind.RATIONAL:
            return Scalar(self.field, 1 / self.value)  # type: ignore[operator]
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, pow(self.value, -1, self.field.characteristic))  # type: ignore[arg-type]

        numerator: Poly = Poly(list(reversed(self.value)), _POLY_VARIABLE, domain=QQ)  # type: ignore[arg-type]
        modulus: Poly = cyclotomic_poly(self.field.modulus, _POLY_VARIABLE, polys=True).set_domain(QQ)
        inverse_coefficients: list[Fraction] = [
            Fraction(int(coefficient.p), int(coefficient.q))
            for coefficient in reversed(numerator.invert(modulus).all_coeffs())
        ]
        return Scalar(self.field, _reduce_polynomial(inverse_coefficients, self.field.modulus))  # type: ignore[arg-type]

    def __truediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int | Fraction) -> "Scalar":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** -exponent

        result: Scalar = self.field.one()
        base: Scalar = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (other.field is self.field or other.field == self.field) and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        if self.field.kind is FieldKind.RATIONAL:
            return str(self.value)
        if self.field.kind is FieldKind.PRIME:
            return f"{self.value} mod {self.field.characteristic}"
        return f"[{','.join(str(coefficient) for coefficient in self.value)}] zeta {self.field.modulus}"  # type: ignore[union-attr]

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def cyclotomic_reduce(poly: Sequence[Fraction | int], n: int) -> Scalar:
    """
        Reduces a polynomial in ζ_n (coefficients in ascending degree order)
        modulo Φ_n to its canonical representative.
    """

    field: FieldDescriptor = cyclotomic_field(n)
    return Scalar(field, _reduce_polynomial(list(poly) or [0], n))


def canonicalize(value: Scalar) -> Scalar:
    if value.field.kind is FieldKind.RATIONAL:
        return value.field.from_fraction(value.value)  # type: ignore[arg-type]
    if value.field.kind is FieldKind.PRIME:
        return Scalar(value.field, value.value % value.field.characteristic)  # type: ignore[operator]
    return cyclotomic_reduce(value.value, value.field.modulus)  # type: ignore[arg-type]


FIELD_OPERATIONS: Final[dict[str, Callable[..., Scalar | bool]]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "neg": lambda a, b=None: -a,
    "inv": lambda a, b=None: a.inverse(),
    "eq": lambda a, b: a == b
}


def field_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar | bool:
    """ Applies one named field operation to a (& b for binary operations). """

    try:
        operation: Callable[..., Scalar | bool] = FIELD_OPERATIONS[op]
    except KeyError as unknown_operation:
        raise BadParamsError("Unknown field operation.", op=op) from unknown_operation

    if op in ("neg", "inv"):
        return operation(a)

    if b is None:
        raise BadParamsError("Binary field operation needs two operands.", op=op)
    if a.field != b.field:
        raise FieldMismatchError(left=str(a.field), right=str(b.field))
    return operation(a, b)


def parse_scalar(text: str, field: FieldDescriptor | None = None) -> Scalar:
    """
        Parses the text serialization of a scalar: "a/b" for rationals,
        "r mod p" for prime fields & "[c0,c1,...] zeta n" for cyclotomic
        fields. Plain rationals are embedded into `field` when one is given.
    """

    stripped_text: str = text.strip()

    match: re.Match[str] | None = re.fullmatch(r"(-?\d+)\s+mod\s+(\d+)", stripped_text)
    if match:
        parsed_prime: Scalar = prime_field(int(match.group(2))).from_int(int(match.group(1)))
        if field is not None and field != parsed_prime.field:
            raise FieldMismatchError(left=str(field), right=str(parsed_prime.field))
        return parsed_prime

    match = re.fullmatch(r"\[([^\]]*)\]\s*zeta\s*(\d+)", stripped_text)
    if match:
        coefficients: list[Fraction] = [Fraction(part.strip()) for part in match.group(1).split(",") if part.strip()]
        parsed_cyclotomic: Scalar = cyclotomic_reduce(coefficients, int(match.group(2)))
        if field is not None and field != parsed_cyclotomic.field:
            raise FieldMismatchError(left=str(field), right=str(parsed_cyclotomic.field))
        return parsed_cyclotomic

    try:
        rational_value: Fraction = Fraction(stripped_text)
    except (ValueError, ZeroDivisionError) as parse_error:
        raise BadParamsError("Unrecognised scalar text.", text=text) from parse_error

    return (field or rational_field()).from_fraction(rational_value)


def scalar_sum(values: Iterable[Scalar], field: FieldDescriptor) -> Scalar:
    total: Scalar = field.zero()
    value: Scalar
    for value in values:
        total = total + value
    return total
