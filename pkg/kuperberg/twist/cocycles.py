"""
    Drinfeld 2-cocycles F ∈ H⊗H, the twisted Hopf algebra H_F, the elements
    u, u⁻¹ & Q and the iterated tensors F_n.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from kuperberg import linalg
from kuperberg.exceptions import (
    BadParamsError,
    CocycleConditionError,
    DimensionMismatchError,
    IdentityViolationError,
    NotInvertibleError,
    NotNormalizedError,
    ZeroEntryError
)
from kuperberg.hopf.algebra import (
    AlgebraElement,
    AxiomReport,
    HopfAlgebra,
    TensorElement,
    antipode_power,
    check_hopf_axioms
)
from kuperberg.hopf.catalog import GroupTable, dual_group_algebra
from kuperberg.hopf.integrals import IntegralPair, compute_integrals
from kuperberg.scalars import FieldDescriptor, Scalar, rational_field


@dataclass(frozen=True)
class Cocycle:
    """
        Normalized 2-cocycle F on H together with its inverse in H⊗H.
        Instances built by verify_cocycle satisfy F·Finv = 1⊗1 = Finv·F,
        (ε⊗id)(F) = (id⊗ε)(F) = 1 & the 2-cocycle condition.
    """

    algebra: HopfAlgebra
    F: TensorElement
    Finv: TensorElement
    _iterated: dict[int, tuple[TensorElement, TensorElement]] = field(default_factory=dict, compare=False, repr=False)

    def iterated(self, n: int) -> tuple[TensorElement, TensorElement]:
        return iterated_fn(self, n)


@dataclass(frozen=True)
class TwistArtifacts:
    """ u = Σf¹S(f²), u⁻¹ = ΣS(d¹)d², Q = uS(u⁻¹) & Q⁻¹ = S(u)u⁻¹. """

    cocycle: Cocycle
    u: AlgebraElement
    uinv: AlgebraElement
    Q: AlgebraElement
    Qinv: AlgebraElement

    def fn(self, n: int) -> tuple[TensorElement, TensorElement]:
        return self.cocycle.iterated(n)


def _basis_tensor(H: HopfAlgebra, key: tuple[int, ...]) -> TensorElement:
    return TensorElement(H, len(key), {key: H.field.one()})


def invert_tensor(H: HopfAlgebra, F: TensorElement) -> TensorElement:
    """
        Inverts F in the algebra H⊗H by solving F·G = 1⊗1 against the
        multiplication operator of H⊗H, then checks G·F = 1⊗1.
    """

    if F.arity != 2:
        raise DimensionMismatchError("Only arity-2 tensors are inverted here.", arity=F.arity)

    keys: list[tuple[int, int]] = [(i, j) for i in range(H.dim) for j in range(H.dim)]
    positions: dict[tuple[int, ...], int] = {key: position for position, key in enumerate(keys)}
    operator: linalg.Matrix = linalg.zero_matrix(len(keys), len(keys), H.field)

    column: int
    key: tuple[int, int]
    for column, key in enumerate(keys):
        product_key: tuple[int, ...]
        value: Scalar
        for product_key, value in (F * _basis_tensor(H, key)).items():
            operator[positions[product_key]][column] = value

    unit: TensorElement = TensorElement.one(H, 2)
    rhs: list[Scalar] = [unit.terms.get(key, H.field.zero()) for key in keys]
    solution: linalg.Vector | None = linalg.solve(operator, rhs, H.field)
    if solution is None:
        raise NotInvertibleError("The tensor has no inverse in H⊗H.", tensor=str(F))

    inverse: TensorElement = TensorElement(
        H, 2, {key: value for key, value in zip(keys, solution) if not value.is_zero()}
    )
    if inverse * F != unit:
        raise NotInvertibleError("The tensor has a right inverse only.", tensor=str(F))
    return inverse


def verify_cocycle(H: HopfAlgebra, F: TensorElement) -> Cocycle:
    """
        Computes F⁻¹ & exactly verifies invertibility, normalization & the
        2-cocycle condition (F⊗1)(Δ⊗id)(F) = (1⊗F)(id⊗Δ)(F).
    """

    Finv: TensorElement = invert_tensor(H, F)
    one: AlgebraElement = H.one()

    left_counit: AlgebraElement = F.counit_on_leg(0).as_element()
    if left_counit != one:
        logging.warning(f"Rejected cocycle on {H.name}: (ε⊗id)(F) = {left_counit}")
        raise NotNormalizedError(side="(ε⊗id)", witness=str(left_counit))
    right_counit: AlgebraElement = F.counit_on_leg(1).as_element()
    if right_counit != one:
        logging.warning(f"Rejected cocycle on {H.name}: (id⊗ε)(F) = {right_counit}")
        raise NotNormalizedError(side="(id⊗ε)", witness=str(right_counit))

    left: TensorElement = F.insert_unit(2) * F.coproduct_on_leg(0)
    right: TensorElement = F.insert_unit(0) * F.coproduct_on_leg(1)
    if left != right:
        difference: TensorElement = left - right
        witness_key: tuple[int, ...] = min(key for key, _ in difference.items())
        logging.warning(f"Rejected cocycle on {H.name}: 2-cocycle condition fails")
        raise CocycleConditionError(
            witness="⊗".join(H.basis_labels[index] for index in witness_key),
            difference=str(difference.terms[witness_key])
        )

    return Cocycle(H, F, Finv)


def twist_elements(C: Cocycle) -> TwistArtifacts:
    """ Computes u, u⁻¹, Q & Q⁻¹ from the cocycle without further checks. """

    H: HopfAlgebra = C.algebra
    u: AlgebraElement = H.zero()
    key: tuple[int, ...]
    value: Scalar
    for key, value in C.F.items():
        u = u + (H.basis_element(key[0]) * antipode_power(H, 1, H.basis_element(key[1]))).scale(value)

    uinv: AlgebraElement = H.zero()
    for key, value in C.Finv.items():
        uinv = uinv + (antipode_power(H, 1, H.basis_element(key[0])) * H.basis_element(key[1])).scale(value)

    return TwistArtifacts(
        cocycle=C,
        u=u,
        uinv=uinv,
        Q=u * antipode_power(H, 1, uinv),
        Qinv=antipode_power(H, 1, u) * uinv
    )


def twisted_structure(H: HopfAlgebra, C: Cocycle, artifacts: TwistArtifacts, name: str | None = None) -> HopfAlgebra:
    """ Builds H_F with Δ_F(x) = FΔ(x)F⁻¹ & S_F(x) = uS(x)u⁻¹, sharing the algebra tensors of H. """

    comult: dict[int, dict[tuple[int, int], Scalar]] = {}
    antipode: dict[int, dict[int, Scalar]] = {}
    index: int
    for index in range(H.dim):
        x: AlgebraElement = H.basis_element(index)
        twisted_coproduct: TensorElement = C.F * x.coproduct() * C.Finv
        if twisted_coproduct.terms:
            comult[index] = {(key[0], key[1]): value for key, value in twisted_coproduct.items()}
        twisted_antipode: AlgebraElement = artifacts.u * antipode_power(H, 1, x) * artifacts.uinv
        if twisted_antipode.coords:
            antipode[index] = dict(twisted_antipode.coords)

    return HopfAlgebra(
        name=name or f"{H.name}_F",
        field=H.field,
        basis_labels=H.basis_labels,
        mult=H.mult,
        unit=H.unit,
        comult=comult,
        counit=H.counit,
        antipode=antipode
    )


def twist_hopf(
    H: HopfAlgebra,
    P: IntegralPair | None,
    C: Cocycle,
    name: str | None = None
) -> tuple[HopfAlgebra, TwistArtifacts]:
    """
        Twists H by a verified cocycle. H_F must pass every Hopf axiom,
        u·u⁻¹ = 1 = u⁻¹·u & S_F² = QS²(·)Q⁻¹ on the basis. When the
        integrals of H are given, Λ is also checked to stay a left integral
        of H_F (the algebra structure is unchanged).
    """

    artifacts: TwistArtifacts = twist_elements(C)
    one: AlgebraElement = H.one()
    if not artifacts.u * artifacts.uinv == one == artifacts.uinv * artifacts.u:
        raise IdentityViolationError("u·u⁻¹ ≠ 1.", item="u inverse", witness=str(artifacts.u * artifacts.uinv))
    if not artifacts.Q * artifacts.Qinv == one:
        raise IdentityViolationError("Q·Q⁻¹ ≠ 1.", item="Q inverse", witness=str(artifacts.Q * artifacts.Qinv))

    H_F: HopfAlgebra = twisted_structure(H, C, artifacts, name)
    report: AxiomReport = check_hopf_axioms(H_F)
    report.raise_for_violations()

    index: int
    for index in range(H.dim):
        x: AlgebraElement = H.basis_element(index)
        if antipode_power(H_F, 2, x) != artifacts.Q * antipode_power(H, 2, x) * artifacts.Qinv:
            raise IdentityViolationError("S_F² ≠ QS²Q⁻¹.", item="S_F squared", witness=H.basis_labels[index])

    if P is not None:
        twisted_integrals: IntegralPair = compute_integrals(H_F)
        if twisted_integrals.Lambda != P.Lambda:
            raise IdentityViolationError(
                "The left integral changed under twisting.", item="left integral", witness=str(twisted_integrals.Lambda)
            )

    logging.debug(f"Twisted {H.name} into {H_F.name}: u = {artifacts.u}, Q = {artifacts.Q}")
    return H_F, artifacts


def iterated_fn(C: Cocycle, n: int) -> tuple[TensorElement, TensorElement]:
    """
        Returns (F_n, F_n⁻¹) with F_1 = 1, F_2 = F &
        F_{n+1} = (1⊗F_n)(id⊗Δ^n)(F). The inverse is taken in reverse order,
        F_{n+1}⁻¹ = (id⊗Δ^n)(F⁻¹)(1⊗F_n⁻¹), so F_n·F_n⁻¹ = 1 holds for
        noncommuting legs too.
    """

    if n < 1:
        raise BadParamsError("F_n needs n ≥ 1.", n=n)

    H: HopfAlgebra = C.algebra
    if n not in C._iterated:
        if n == 1:
            C._iterated[1] = (TensorElement.one(H, 1), TensorElement.one(H, 1))
        elif n == 2:
            C._iterated[2] = (C.F, C.Finv)
        else:
            previous: TensorElement
            previous_inverse: TensorElement
            previous, previous_inverse = iterated_fn(C, n - 1)
            C._iterated[n] = (
                previous.insert_unit(0) * C.F.coproduct_on_leg(1, n - 1),
                C.Finv.coproduct_on_leg(1, n - 1) * previous_inverse.insert_unit(0)
            )
    return C._iterated[n]


def inverse_twist(H_F: HopfAlgebra, C: Cocycle) -> Cocycle:
    """ Verifies F⁻¹ as a cocycle of H_F; twisting H_F by it recovers Δ. """

    return verify_cocycle(H_F, C.Finv.rebase(H_F))


def same_coalgebra(H: HopfAlgebra, K: HopfAlgebra) -> bool:
    """ Whether two structures on the same basis have equal Δ & S. """

    return all(
        H.basis_element(index).coproduct() == K.basis_element(index).coproduct().rebase(H)
        and antipode_power(H, 1, H.basis_element(index)) == antipode_power(K, 1, K.basis_element(index))
        for index in range(H.dim)
    )


def bicharacter_cocycle(
    A: GroupTable,
    beta: Callable[[int, int], Scalar | int] | Mapping[tuple[int, int], Scalar | int],
    field: FieldDescriptor | None = None,
    algebra: HopfAlgebra | None = None
) -> TensorElement:
    """
        Returns F = Σ β(a, b)·e_a⊗e_b on the dual group algebra of A. The
        result still has to pass verify_cocycle.
    """

    H: HopfAlgebra = algebra or dual_group_algebra(A, field or rational_field())
    terms: dict[tuple[int, ...], Scalar] = {}
    a: int
    b: int
    for a in range(A.order):
        for b in range(A.order):
            raw_value: Scalar | int = beta[(a, b)] if isinstance(beta, Mapping) else beta(a, b)
            value: Scalar = raw_value if isinstance(raw_value, Scalar) else H.field.from_int(raw_value)
            if value.is_zero():
                raise ZeroEntryError(a=A.labels[a], b=A.labels[b])
            terms[(a, b)] = value
    return TensorElement(H, 2, terms)


def component_bicharacter(A: GroupTable, field: FieldDescriptor | None = None) -> Callable[[int, int], Scalar]:
    """
        β(a, b) = q^{a₁·b₂} for a product group A, where a₁ is the first
        component of a, b₂ the second component of b & q a primitive root of
        unity whose order is the gcd of the two factor orders.
    """

    if not A.components or len(A.components[0]) < 2:
        raise BadParamsError("Component bicharacters need a product of at least two groups.", group=A.name)

    field = field or rational_field()
    first_order: int = max(component[0] for component in A.components) + 1
    second_order: int = max(component[1] for component in A.components) + 1
    order: int = math.gcd(first_order, second_order)
    q: Scalar = field.primitive_root_of_unity(order)

    def beta(a: int, b: int) -> Scalar:
        return q ** ((A.components[a][0] * A.components[b][1]) % order)

    return beta


def idempotent_cocycle(H: HopfAlgebra, c: Scalar | int, grouplike_label: str = "g") -> Cocycle:
    """
        Returns the verified cocycle 1⊗1 + c·e₁⊗e₁ with e₁ = (1 − g)/2 for an
        involutive grouplike g (Sweedler's H4 by default).
    """

    g: AlgebraElement = H.basis_element(H.basis_index(grouplike_label))
    if g * g != H.one() or g.coproduct() != TensorElement.pure(g, g):
        raise BadParamsError("Idempotent cocycles need an involutive grouplike.", algebra=H.name, grouplike=grouplike_label)
    if H.field.characteristic == 2:
        raise BadParamsError("Idempotent cocycles need a field of characteristic other than 2.", field=str(H.field))

    coefficient: Scalar = c if isinstance(c, Scalar) else H.field.from_int(c)
    e1: AlgebraElement = (H.one() - g).scale(H.field.from_int(2).inverse())
    F: TensorElement = TensorElement.one(H, 2) + TensorElement.pure(e1, e1).scale(coefficient)
    return verify_cocycle(H, F)
