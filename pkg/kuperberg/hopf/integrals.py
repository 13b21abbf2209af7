"""
    Normalized integrals & cointegrals, the distinguished grouplike g &
    character α, the map T(x) = g⁻¹S²(x)g & the half-integer twisted
    integrals used to label Heegaard diagrams.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, Mapping, Sequence, TypeAlias

from kuperberg import linalg
from kuperberg.conf import setting
from kuperberg.exceptions import (
    BadParamsError,
    IdentityViolationError,
    NormalizationFailureError,
    NotHalfIntegerError,
    NotOneDimensionalError
)
from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra, TensorElement, antipode_power
from kuperberg.scalars import Scalar

Covector: TypeAlias = tuple[Scalar, ...]

HALFINT_G_ACTION: Final[str] = "g-action"
HALFINT_ANTIPODE_INVERSE: Final[str] = "antipode-inverse"
HALFINT_CONVENTIONS: Final[tuple[str, ...]] = (HALFINT_G_ACTION, HALFINT_ANTIPODE_INVERSE)


def default_convention() -> str:
    return str(setting("KUPERBERG_HALFINT_COINTEGRAL"))


def pair(covector: Sequence[Scalar], element: AlgebraElement) -> Scalar:
    """ Evaluates a covector (given by its values on the basis) at an element. """

    total: Scalar = element.algebra.field.zero()
    index: int
    value: Scalar
    for index, value in element.coords.items():
        coefficient: Scalar = covector[index]
        if not coefficient.is_zero():
            total = total + coefficient * value
    return total


def convolve(H: HopfAlgebra, left: Sequence[Scalar], right: Sequence[Scalar]) -> Covector:
    """ Convolution product (φ*ψ)(x) = φ(x₍₁₎)ψ(x₍₂₎) of two covectors. """

    result: list[Scalar] = []
    index: int
    for index in range(H.dim):
        total: Scalar = H.field.zero()
        pair_indices: tuple[int, int]
        coefficient: Scalar
        for pair_indices, coefficient in H.comult.get(index, {}).items():
            total = total + coefficient * left[pair_indices[0]] * right[pair_indices[1]]
        result.append(total)
    return tuple(result)


def counit_covector(H: HopfAlgebra) -> Covector:
    return tuple(H.counit.get(index, H.field.zero()) for index in range(H.dim))


def convolution_power(H: HopfAlgebra, character: Sequence[Scalar], exponent: int) -> Covector:
    """
        Returns the convolution power character^{*exponent}; negative powers
        use the convolution inverse character∘S.
    """

    if exponent < 0:
        character = tuple(
            pair(character, antipode_power(H, 1, H.basis_element(index))) for index in range(H.dim)
        )
        exponent = -exponent

    result: Covector = counit_covector(H)
    _: int
    for _ in range(exponent):
        result = convolve(H, result, character)
    return result


def hit_left(H: HopfAlgebra, covector: Sequence[Scalar], x: AlgebraElement) -> AlgebraElement:
    """ Returns covector ⇀ x = x₍₁₎·covector(x₍₂₎). """

    coords: dict[int, Scalar] = {}
    key: tuple[int, ...]
    value: Scalar
    for key, value in x.coproduct().items():
        weight: Scalar = covector[key[1]]
        if weight.is_zero():
            continue
        total: Scalar = coords.get(key[0], H.field.zero()) + value * weight
        coords[key[0]] = total
    return H.element(coords)


@dataclass(frozen=True)
class IntegralPair:
    """
        Normalized integrals of a Hopf algebra with λ(Λ) = 1.

        Lambda is the left integral Λ, lambda_ the right cointegral λ,
        LambdaR = S(Λ) & lambdaL = g⇀λ = λ(·g). g is the distinguished
        grouplike of the left cointegral λ∘S⁻¹, i.e. λ∘S⁻¹(x₍₁₎)x₍₂₎ =
        λ∘S⁻¹(x)g, equivalently x₍₁₎λ(x₍₂₎) = λ(x)g⁻¹; alpha is the
        distinguished character with Λx = α(x)Λ.
    """

    Lambda: AlgebraElement
    lambda_: Covector
    LambdaR: AlgebraElement
    lambdaL: Covector
    g: AlgebraElement
    alpha: Covector

    @property
    def g_inverse(self) -> AlgebraElement:
        return antipode_power(self.g.algebra, 1, self.g)

    @property
    def alpha_of_g(self) -> Scalar:
        return pair(self.alpha, self.g)

    def g_power(self, exponent: int) -> AlgebraElement:
        H: HopfAlgebra = self.g.algebra
        base: AlgebraElement = self.g if exponent >= 0 else self.g_inverse
        result: AlgebraElement = H.one()
        _: int
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_unimodular(self) -> bool:
        H: HopfAlgebra = self.g.algebra
        return self.g == H.one() and self.alpha == counit_covector(H)


def _single_nullspace_vector(matrix: linalg.Matrix, H: HopfAlgebra, what: str) -> linalg.Vector:
    basis: list[linalg.Vector] = linalg.nullspace(matrix, H.dim, H.field)
    if len(basis) != 1:
        raise NotOneDimensionalError(algebra=H.name, space=what, dimension=len(basis))
    return basis[0]


def compute_integrals(H: HopfAlgebra) -> IntegralPair:
    """
        Solves for the left integral & right cointegral of H, normalizes them
        (Λ has first nonzero coordinate 1, λ is rescaled so λ(Λ) = 1), extracts
        g & α & verifies every IntegralPair invariant exactly.
    """

    field = H.field
    basis: list[AlgebraElement] = [H.basis_element(index) for index in range(H.dim)]

    left_integral_rows: linalg.Matrix = []
    a: AlgebraElement
    for a in basis:
        multiplication: linalg.Matrix = H.left_multiplication_matrix(a.coords)
        counit_value: Scalar = a.counit()
        row_index: int
        for row_index in range(H.dim):
            row: list[Scalar] = list(multiplication[row_index])
            row[row_index] = row[row_index] - counit_value
            left_integral_rows.append(row)
    integral_vector: linalg.Vector = _single_nullspace_vector(left_integral_rows, H, "left integrals")
    first_nonzero: Scalar = next(value for value in integral_vector if not value.is_zero())
    Lambda: AlgebraElement = H.element({index: value / first_nonzero for index, value in enumerate(integral_vector)})

    # λ(x₍₁₎)x₍₂₎ - λ(x)1 = 0, one equation per (basis x, output coordinate)
    cointegral_rows: linalg.Matrix = []
    i: int
    for i in range(H.dim):
        k: int
        for k in range(H.dim):
            row = [field.zero()] * H.dim
            pair_indices: tuple[int, int]
            coefficient: Scalar
            for pair_indices, coefficient in H.comult.get(i, {}).items():
                if pair_indices[1] == k:
                    row[pair_indices[0]] = row[pair_indices[0]] + coefficient
            row[i] = row[i] - H.unit.get(k, field.zero())
            cointegral_rows.append(row)
    cointegral_vector: linalg.Vector = _single_nullspace_vector(cointegral_rows, H, "right cointegrals")

    normalization: Scalar = pair(cointegral_vector, Lambda)
    if normalization.is_zero():
        raise NormalizationFailureError(algebra=H.name, field=str(field))
    lambda_: Covector = tuple(value / normalization for value in cointegral_vector)

    pivot: int = next(iter(Lambda.coords))
    alpha: Covector = tuple((Lambda * x).coordinate(pivot) / Lambda.coordinate(pivot) for x in basis)

    # x₍₁₎λ(x₍₂₎) = λ(x)g⁻¹
    witness_index: int = next(index for index, value in enumerate(lambda_) if not value.is_zero())
    g_inverse: AlgebraElement = hit_left(H, lambda_, basis[witness_index]).scale(lambda_[witness_index].inverse())
    g: AlgebraElement = antipode_power(H, 1, g_inverse)

    integrals: IntegralPair = IntegralPair(
        Lambda=Lambda,
        lambda_=lambda_,
        LambdaR=antipode_power(H, 1, Lambda),
        lambdaL=tuple(pair(lambda_, x * g) for x in basis),
        g=g,
        alpha=alpha
    )
    verify_integrals(H, integrals)

    logging.debug(f"Integrals of {H.name}: Λ = {Lambda}, g = {g}, α(g) = {integrals.alpha_of_g}")
    return integrals


def verify_integrals(H: HopfAlgebra, P: IntegralPair) -> None:
    """ Re-checks every IntegralPair invariant, raising IdentityViolationError on the first failure. """

    basis: list[AlgebraElement] = [H.basis_element(index) for index in range(H.dim)]
    one: AlgebraElement = H.one()

    def require(holds: bool, item: str, witness: str = "") -> None:
        if not holds:
            raise IdentityViolationError(f"Integral invariant fails: {item}.", item=item, witness=witness)

    x: AlgebraElement
    for x in basis:
        label: str = str(x)
        require(x * P.Lambda == P.Lambda.scale(x.counit()), "left integral", label)
        left_leg_contraction: AlgebraElement = H.zero()
        key: tuple[int, ...]
        value: Scalar
        for key, value in x.coproduct().items():
            left_leg_contraction = left_leg_contraction + H.basis_element(key[1]).scale(value * P.lambda_[key[0]])
        require(left_leg_contraction == one.scale(pair(P.lambda_, x)), "right cointegral", label)
        require(P.Lambda * x == P.Lambda.scale(pair(P.alpha, x)), "distinguished character", label)
        require(hit_left(H, P.lambda_, x) == P.g_inverse.scale(pair(P.lambda_, x)), "distinguished grouplike", label)
        require(pair(P.lambdaL, x) == pair(P.lambda_, x * P.g), "λ^L = g⇀λ", label)

        y: AlgebraElement
        for y in basis:
            require(pair(P.alpha, x * y) == pair(P.alpha, x) * pair(P.alpha, y), "character is multiplicative", f"{label}, {y}")

    require(pair(P.alpha, one) == 1, "character is unital")
    require(pair(P.lambda_, P.Lambda) == 1, "λ(Λ) = 1")
    require(pair(P.lambda_, P.LambdaR) == 1, "λ(Λ^R) = 1")
    require(pair(P.lambdaL, P.LambdaR) == 1, "λ^L(Λ^R) = 1")
    require(pair(P.lambdaL, P.Lambda) == P.alpha_of_g, "λ^L(Λ^L) = α(g)")
    require(P.g.coproduct() == TensorElement.pure(P.g, P.g), "Δ(g) = g⊗g")
    require(P.g * P.g_inverse == one == P.g_inverse * P.g, "g is invertible")


def tmap(H: HopfAlgebra, P: IntegralPair, x: AlgebraElement) -> AlgebraElement:
    """ Returns T(x) = g⁻¹S²(x)g. """

    return P.g_inverse * antipode_power(H, 2, x) * P.g


def tmap_matrix(H: HopfAlgebra, P: IntegralPair, exponent: int = 1) -> linalg.Matrix:
    """ Matrix of T^exponent (column j is the image of e_j). """

    matrix: linalg.Matrix = linalg.zero_matrix(H.dim, H.dim, H.field)
    j: int
    for j in range(H.dim):
        image: AlgebraElement = tmap(H, P, H.basis_element(j))
        i: int
        value: Scalar
        for i, value in image.coords.items():
            matrix[i][j] = value
    return linalg.matrix_power(matrix, exponent, H.field)


def half_integer_index(theta: Fraction | int) -> int:
    """ Returns the integer m with theta = m − 1/2. """

    shifted: Fraction = Fraction(theta) + Fraction(1, 2)
    if shifted.denominator != 1:
        raise NotHalfIntegerError(theta=str(theta))
    return int(shifted)


def twisted_integral(H: HopfAlgebra, P: IntegralPair, theta: Fraction | int) -> AlgebraElement:
    """ Returns Λ_{m−1/2} = α^{−m} ⇀ S(Λ). """

    m: int = half_integer_index(theta)
    return hit_left(H, convolution_power(H, P.alpha, -m), P.LambdaR)


def twisted_cointegral(H: HopfAlgebra, P: IntegralPair, theta: Fraction | int, convention: str | None = None) -> Covector:
    """
        Returns λ_{m−1/2} as a covector. The g-action convention gives
        x ↦ λ(x g^m); the antipode-inverse convention (the default) gives
        x ↦ λ(S⁻¹(x g^{1−m})), so λ_{1/2} = λ∘S⁻¹ = λ^L. The two agree when
        g² = 1.
    """

    m: int = half_integer_index(theta)
    convention = convention or default_convention()
    basis: list[AlgebraElement] = [H.basis_element(index) for index in range(H.dim)]

    if convention == HALFINT_G_ACTION:
        shift: AlgebraElement = P.g_power(m)
        return tuple(pair(P.lambda_, x * shift) for x in basis)

    if convention == HALFINT_ANTIPODE_INVERSE:
        shift = P.g_power(1 - m)
        return tuple(pair(P.lambda_, antipode_power(H, -1, x * shift)) for x in basis)

    raise BadParamsError("Unknown half-integer cointegral convention.", convention=convention)


def covector_from_mapping(H: HopfAlgebra, values: Mapping[int, Scalar]) -> Covector:
    return tuple(values.get(index, H.field.zero()) for index in range(H.dim))
