"""
    Catalog of concrete Hopf algebras: group algebras, dual group algebras,
    Sweedler's H4 & Taft algebras, over ℚ, cyclotomic or prime fields.
"""

import dataclasses
import functools
import itertools
import logging
import re
from dataclasses import dataclass
from typing import Callable, Final, Hashable, Sequence

from kuperberg.exceptions import BadParamsError, UnknownAlgebraError
from kuperberg.hopf.algebra import HopfAlgebra
from kuperberg.scalars import FieldDescriptor, FieldKind, Scalar, cyclotomic_field, rational_field

GROUP_NAMES: Final[tuple[str, ...]] = (
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "S3", "D4", "Q8"
)


@dataclass(frozen=True)
class GroupTable:
    """
        Finite group given by its multiplication table over element indices.
        table[i][j] is the index of the product of elements i & j.
    """

    name: str
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        order: int = len(self.labels)
        if order < 1 or len(self.table) != order or any(len(row) != order for row in self.table):
            raise BadParamsError("Group table must be a square table over its elements.", group=self.name)
        if any(not 0 <= entry < order for row in self.table for entry in row):
            raise BadParamsError("Group table refers to a missing element.", group=self.name)

        identities: list[int] = [
            candidate for candidate in range(order)
            if all(self.table[candidate][i] == i == self.table[i][candidate] for i in range(order))
        ]
        if not identities:
            raise BadParamsError("Group table has no identity element.", group=self.name)

        identity: int = identities[0]
        i: int
        for i in range(order):
            if not any(self.table[i][j] == identity == self.table[j][i] for j in range(order)):
                raise BadParamsError("Element has no inverse.", group=self.name, element=self.labels[i])

        j: int
        k: int
        for i, j, k in itertools.product(range(order), repeat=3):
            if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                raise BadParamsError(
                    "Group table is not associative.",
                    group=self.name,
                    witness=(self.labels[i], self.labels[j], self.labels[k])
                )

    @property
    def order(self) -> int:
        return len(self.labels)

    @functools.cached_property
    def identity(self) -> int:
        return next(
            candidate for candidate in range(self.order)
            if all(self.table[candidate][i] == i for i in range(self.order))
        )

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == self.identity)

    def power(self, i: int, exponent: int) -> int:
        base: int = i if exponent >= 0 else self.inverse(i)
        result: int = self.identity
        _: int
        for _ in range(abs(exponent)):
            result = self.table[result][base]
        return result

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(self.order))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @classmethod
    def from_elements(
        cls,
        name: str,
        elements: Sequence[Hashable],
        compose: Callable[[Hashable, Hashable], Hashable],
        label: Callable[[Hashable], str] = str
    ) -> "GroupTable":
        position: dict[Hashable, int] = {element: index for index, element in enumerate(elements)}
        try:
            table: tuple[tuple[int, ...], ...] = tuple(
                tuple(position[compose(a, b)] for b in elements) for a in elements
            )
        except KeyError as not_closed:
            raise BadParamsError("Elements are not closed under composition.", group=name) from not_closed
        return cls(name, tuple(label(element) for element in elements), table)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise BadParamsError("Cyclic groups need a positive order.", order=n)

    def label(k: Hashable) -> str:
        return "1" if k == 0 else "g" if k == 1 else f"g^{k}"

    return GroupTable.from_elements(f"Z{n}", range(n), lambda a, b: (a + b) % n, label)  # type: ignore[operator]


def direct_product(*factors: GroupTable) -> GroupTable:
    """ Product group; `components` keeps the factor indices of every element. """

    elements: list[tuple[int, ...]] = list(itertools.product(*(range(factor.order) for factor in factors)))
    product_table: GroupTable = GroupTable.from_elements(
        "x".join(factor.name for factor in factors),
        elements,
        lambda a, b: tuple(factor.product(i, j) for factor, i, j in zip(factors, a, b)),  # type: ignore[arg-type]
        lambda a: f"({','.join(factor.labels[i] for factor, i in zip(factors, a))})"  # type: ignore[arg-type]
    )
    return dataclasses.replace(product_table, components=tuple(elements))


def _permutation_group(name: str, generators: Sequence[tuple[int, ...]]) -> GroupTable:
    """ Closes a set of permutations (in one-line notation) under composition. """

    identity: tuple[int, ...] = tuple(range(len(generators[0])))

    def compose(a: Hashable, b: Hashable) -> Hashable:
        return tuple(a[image] for image in b)  # type: ignore[index]

    elements: list[tuple[int, ...]] = [identity]
    frontier: list[tuple[int, ...]] = [identity]
    while frontier:
        discovered: list[tuple[int, ...]] = []
        element: tuple[int, ...]
        for element in frontier:
            generator: tuple[int, ...]
            for generator in generators:
                candidate: tuple[int, ...] = compose(element, generator)  # type: ignore[assignment]
                if candidate not in elements:
                    elements.append(candidate)
                    discovered.append(candidate)
        frontier = discovered

    def label(permutation: Hashable) -> str:
        return "e" if permutation == identity else "p" + "".join(str(image) for image in permutation)  # type: ignore[attr-defined]

    return GroupTable.from_elements(name, elements, compose, label)


def symmetric_group_3() -> GroupTable:
    return _permutation_group("S3", [(1, 0, 2), (1, 2, 0)])


def dihedral_group_4() -> GroupTable:
    return _permutation_group("D4", [(1, 2, 3, 0), (0, 3, 2, 1)])


_QUATERNION_UNITS: Final[dict[tuple[str, str], tuple[int, str]]] = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")
}


def quaternion_group() -> GroupTable:
    elements: list[tuple[int, str]] = [(sign, unit) for unit in "1ijk" for sign in (1, -1)]

    def compose(a: Hashable, b: Hashable) -> Hashable:
        sign: int
        unit: str
        sign, unit = _QUATERNION_UNITS[(a[1], b[1])]  # type: ignore[index]
        return a[0] * b[0] * sign, unit  # type: ignore[index]

    return GroupTable.from_elements(
        "Q8", elements, compose, lambda a: ("" if a[0] == 1 else "-") + a[1]  # type: ignore[index]
    )


@functools.cache
def named_group(name: str) -> GroupTable:
    """ Builds groups named like "Z4", "S3", "D4", "Q8" or products "Z2xZ4". """

    factors: list[GroupTable] = []
    part: str
    for part in name.split("x"):
        match: re.Match[str] | None = re.fullmatch(r"Z(\d+)", part)
        if match and int(match.group(1)) >= 1:
            factors.append(cyclic_group(int(match.group(1))))
        elif part == "S3":
            factors.append(symmetric_group_3())
        elif part == "D4":
            factors.append(dihedral_group_4())
        elif part == "Q8":
            factors.append(quaternion_group())
        else:
            raise UnknownAlgebraError("Unknown group name.", group=name)
    return factors[0] if len(factors) == 1 else direct_product(*factors)


def trivial_algebra(field: FieldDescriptor | None = None) -> HopfAlgebra:
    """ The one-dimensional Hopf algebra k. """

    field = field or rational_field()
    one: Scalar = field.one()
    return HopfAlgebra(
        name="k",
        field=field,
        basis_labels=("1",),
        mult={(0, 0): {0: one}},
        unit={0: one},
        comult={0: {(0, 0): one}},
        counit={0: one},
        antipode={0: {0: one}}
    )


def group_algebra(group: GroupTable, field: FieldDescriptor | None = None) -> HopfAlgebra:
    field = field or rational_field()
    one: Scalar = field.one()
    elements: range = range(group.order)
    return HopfAlgebra(
        name=f"group_algebra_{group.name}",
        field=field,
        basis_labels=group.labels,
        mult={(i, j): {group.product(i, j): one} for i in elements for j in elements},
        unit={group.identity: one},
        comult={i: {(i, i): one} for i in elements},
        counit={i: one for i in elements},
        antipode={i: {group.inverse(i): one} for i in elements}
    )


def dual_group_algebra(group: GroupTable, field: FieldDescriptor | None = None) -> HopfAlgebra:
    """ Functions on the group, with basis the idempotents e_a (e_a·e_b = [a = b]e_a). """

    field = field or rational_field()
    one: Scalar = field.one()
    elements: range = range(group.order)
    comult: dict[int, dict[tuple[int, int], Scalar]] = {a: {} for a in elements}
    b: int
    c: int
    for b, c in itertools.product(elements, repeat=2):
        comult[group.product(b, c)][(b, c)] = one

    return HopfAlgebra(
        name=f"dual_group_algebra_{group.name}",
        field=field,
        basis_labels=tuple(f"e_{label}" for label in group.labels),
        mult={(a, a): {a: one} for a in elements},
        unit={a: one for a in elements},
        comult=comult,
        counit={group.identity: one},
        antipode={a: {group.inverse(a): one} for a in elements}
    )


def _monomial_label(a: int, b: int) -> str:
    g_part: str = "" if a == 0 else "g" if a == 1 else f"g^{a}"
    x_part: str = "" if b == 0 else "x" if b == 1 else f"x^{b}"
    return g_part + x_part or "1"


def taft_algebra(n: int, field: FieldDescriptor | None = None, name: str | None = None) -> HopfAlgebra:
    """
        Taft algebra of dimension n²: generated by g & x with g^n = 1,
        x^n = 0, xg = q·gx for a primitive n-th root of unity q,
        Δ(g) = g⊗g & Δ(x) = x⊗1 + g⊗x. Basis element g^a x^b has index a + n·b.
    """

    if n < 2:
        raise BadParamsError("Taft algebras need n ≥ 2.", n=n)
    field = field or (rational_field() if n == 2 else cyclotomic_field(n))
    if not field.contains_root_of_unity(n):
        raise BadParamsError("Field has no primitive root of unity of this order.", field=str(field), n=n)

    q: Scalar = field.primitive_root_of_unity(n)
    one: Scalar = field.one()

    def index(a: int, b: int) -> int:
        return a % n + n * b

    monomials: list[tuple[int, int]] = [(a, b) for b in range(n) for a in range(n)]

    # x^b g^c = q^{bc} g^c x^b
    mult: dict[tuple[int, int], dict[int, Scalar]] = {}
    a: int
    b: int
    c: int
    d: int
    for (a, b), (c, d) in itertools.product(monomials, repeat=2):
        if b + d < n:
            mult[(index(a, b), index(c, d))] = {index(a + c, b + d): q ** (b * c)}

    # (x⊗1)(g⊗x) = q·(g⊗x)(x⊗1), so Δ(x^b) expands with q-binomial coefficients
    binomials: dict[tuple[int, int], Scalar] = {}
    for b in range(n):
        k: int
        for k in range(b + 1):
            if k == 0 or k == b:
                binomials[(b, k)] = one
            else:
                binomials[(b, k)] = binomials[(b - 1, k - 1)] + q ** k * binomials[(b - 1, k)]

    comult: dict[int, dict[tuple[int, int], Scalar]] = {}
    for a, b in monomials:
        comult[index(a, b)] = {
            (index(a + k, b - k), index(a, k)): binomials[(b, k)] for k in range(b + 1)
        }

    provisional: HopfAlgebra = HopfAlgebra(
        name=name or f"taft_{n}",
        field=field,
        basis_labels=tuple(_monomial_label(a, b) for a, b in monomials),
        mult=mult,
        unit={0: one},
        comult=comult,
        counit={index(a, 0): one for a in range(n)},
        antipode={}
    )

    # S(g^a x^b) = S(x)^b S(g)^a with S(g) = g^{n-1}, S(x) = -g^{n-1}x
    antipode_of_x: dict[int, Scalar] = {index(n - 1, 1): -one}
    antipode: dict[int, dict[int, Scalar]] = {}
    for a, b in monomials:
        image: dict[int, Scalar] = {0: one}
        _: int
        for _ in range(b):
            image = provisional.multiply_vectors(image, antipode_of_x)
        image = provisional.multiply_vectors(image, {index(-a, 0): one})
        antipode[index(a, b)] = image

    return HopfAlgebra(
        name=provisional.name,
        field=field,
        basis_labels=provisional.basis_labels,
        mult=mult,
        unit=provisional.unit,
        comult=comult,
        counit=provisional.counit,
        antipode=antipode
    )


def sweedler_h4(field: FieldDescriptor | None = None) -> HopfAlgebra:
    """ Sweedler's 4-dimensional Hopf algebra with basis 1, g, x, gx. """

    return taft_algebra(2, field, name="sweedler_h4")


def catalog_names() -> list[str]:
    names: list[str] = ["k"]
    names.extend(f"group_algebra_{group}" for group in GROUP_NAMES)
    names.extend(f"dual_group_algebra_{group}" for group in GROUP_NAMES)
    names.append("sweedler_h4")
    names.extend(f"taft_{n}" for n in range(2, 6))
    return names


def catalog(name: str, field: FieldDescriptor | None = None, allow_degenerate: bool = False) -> HopfAlgebra:
    """
        Builds a catalog algebra by name. A suffix "@F<p>", "@Q" or
        "@Q(zeta<n>)" selects the field. Prime fields whose characteristic
        divides the dimension are rejected unless allow_degenerate is set.
    """

    base_name: str
    field_suffix: str
    base_name, _, field_suffix = name.partition("@")
    if field_suffix:
        field = FieldDescriptor.parse(field_suffix)

    match: re.Match[str] | None
    algebra: HopfAlgebra
    if base_name == "k":
        algebra = trivial_algebra(field)
    elif base_name == "sweedler_h4":
        algebra = sweedler_h4(field)
    elif match := re.fullmatch(r"taft_(\d+)", base_name):
        algebra = taft_algebra(int(match.group(1)), field)
    elif match := re.fullmatch(r"dual_group_algebra_(\S+)", base_name):
        algebra = dual_group_algebra(named_group(match.group(1)), field)
    elif match := re.fullmatch(r"group_algebra_(\S+)", base_name):
        algebra = group_algebra(named_group(match.group(1)), field)
    else:
        logging.warning(f"Unknown catalog algebra requested: {name}")
        raise UnknownAlgebraError(name=name)

    if algebra.field.kind is FieldKind.PRIME and algebra.dim % algebra.field.characteristic == 0 and not allow_degenerate:
        raise BadParamsError(
            "Field characteristic divides the dimension; pass the override to build it anyway.",
            algebra=base_name,
            characteristic=algebra.field.characteristic
        )
    return algebra
