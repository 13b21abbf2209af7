"""
    Exact randomized checks of the integral identities used to prove gauge
    invariance of the Weeks invariant. Both sides of every identity are
    compiled to scalar expressions over two (or one) copies of Λ and the
    iterated coproduct of a random element x.

    Multilinear maps Y(a_1, …, a_k) are tested on decomposable maps
    y_0 M_1(a_1) y_1 ⋯ M_k(a_k) y_k with random matrices M_i and random
    elements y_i; these span every multilinear map H^{⊗k} → H.
"""

import random
from dataclasses import dataclass
from typing import Final, Sequence

from kuperberg import linalg
from kuperberg.exceptions import BadParamsError
from kuperberg.evaluator.expressions import (
    Constant,
    Factor,
    Leg,
    Mapped,
    Pairing,
    ScalarExpression,
    Source,
    antipode_factor,
    expression_value,
    lambda_antipode
)
from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra, antipode_power
from kuperberg.hopf.integrals import Covector, IntegralPair
from kuperberg.hopf.suites import IdentityReport, default_trials, make_rng, random_element, random_matrix
from kuperberg.scalars import Scalar

LEMMA_ITEMS: Final[tuple[str, ...]] = ("4.2(1)", "4.2(2)", "4.3", "4.4")

# (integral copy, leg, x leg) for each argument of Y & Z; the x leg is where
# the moved element lands on the right hand side.
MOVE_RIGHT_Y: Final[tuple[tuple[int, int, int], ...]] = (
    (2, 7, 2), (1, 5, 11), (1, 2, 14), (2, 8, 1), (2, 5, 4), (1, 7, 9), (2, 3, 6)
)
MOVE_RIGHT_Z: Final[tuple[tuple[int, int, int], ...]] = (
    (1, 3, 13), (1, 6, 10), (2, 4, 5), (1, 8, 8), (2, 2, 7), (1, 1, 15), (1, 4, 12), (2, 6, 3)
)
MOVE_LEFT_Y: Final[tuple[tuple[int, int, int], ...]] = (
    (2, 1, 1), (2, 7, 14), (1, 5, 7), (1, 2, 4), (2, 8, 15), (2, 5, 12), (1, 7, 9)
)
MOVE_LEFT_Z: Final[tuple[tuple[int, int, int], ...]] = (
    (1, 3, 5), (1, 6, 8), (2, 4, 11), (1, 8, 10), (2, 2, 2), (1, 1, 3), (1, 4, 6), (2, 6, 13)
)


@dataclass(frozen=True, eq=False)
class DecomposableMap:
    """ Y(a_1, …, a_k) = y_0 M_1(a_1) y_1 ⋯ M_k(a_k) y_k. """

    matrices: tuple[linalg.Matrix, ...]
    constants: tuple[AlgebraElement, ...]
    label: str = "Y"

    @property
    def arity(self) -> int:
        return len(self.matrices)

    def __call__(self, *arguments: Sequence[Factor]) -> tuple[Factor, ...]:
        if len(arguments) != self.arity:
            raise BadParamsError(f"{self.label} takes {self.arity} arguments.", given=len(arguments))

        word: list[Factor] = [Constant(self.constants[0])]
        index: int
        matrix: linalg.Matrix
        argument: Sequence[Factor]
        for index, (matrix, argument) in enumerate(zip(self.matrices, arguments), start=1):
            word.append(Mapped(matrix, tuple(argument), f"{self.label}{index}"))
            word.append(Constant(self.constants[index]))
        return tuple(word)


def random_decomposable(H: HopfAlgebra, rng: random.Random, arity: int, label: str = "Y") -> DecomposableMap:
    return DecomposableMap(
        tuple(random_matrix(H, rng) for _ in range(arity)),
        tuple(random_element(H, rng) for _ in range(arity + 1)),
        label
    )


def _integral_leg(copy: int, index: int) -> Leg:
    return Leg(f"Λ{copy}", index)


def _x(index: int) -> Leg:
    return Leg("x", index)


def _both_sides(
    H: HopfAlgebra,
    name: str,
    left: tuple[tuple[Source, ...], tuple[Pairing, ...]],
    right: tuple[tuple[Source, ...], tuple[Pairing, ...]]
) -> tuple[Scalar, Scalar]:
    return (
        expression_value(ScalarExpression(H, left[0], left[1], None, f"{name} left")),
        expression_value(ScalarExpression(H, right[0], right[1], None, f"{name} right"))
    )


def move_right_sides(
    H: HopfAlgebra,
    P: IntegralPair,
    x: AlgebraElement,
    Y: DecomposableMap,
    Z: DecomposableMap
) -> tuple[Scalar, Scalar]:
    """
        λS(S⁻¹(Λ²₁)Y(…)Λ¹₉)·λS(xZ(…)Λ²₉) against the same product with x
        moved onto the arguments as S(x₍ₖ₎) on the right.
    """

    lambda_s: Covector = lambda_antipode(H, P)
    integrals: tuple[Source, ...] = (Source("Λ1", P.Lambda, 9), Source("Λ2", P.Lambda, 9))
    head: Factor = antipode_factor(H, -1, _integral_leg(2, 1))

    def arguments(table: tuple[tuple[int, int, int], ...], moved: bool) -> list[tuple[Factor, ...]]:
        return [
            (_integral_leg(copy, leg), antipode_factor(H, 1, _x(x_leg))) if moved else (_integral_leg(copy, leg),)
            for copy, leg, x_leg in table
        ]

    left: tuple[Pairing, ...] = (
        Pairing(lambda_s, (head,) + Y(*arguments(MOVE_RIGHT_Y, False)) + (_integral_leg(1, 9),), "λS1"),
        Pairing(lambda_s, (Constant(x),) + Z(*arguments(MOVE_RIGHT_Z, False)) + (_integral_leg(2, 9),), "λS2")
    )
    right: tuple[Pairing, ...] = (
        Pairing(lambda_s, (head,) + Y(*arguments(MOVE_RIGHT_Y, True)) + (_integral_leg(1, 9),), "λS1"),
        Pairing(lambda_s, Z(*arguments(MOVE_RIGHT_Z, True)) + (_integral_leg(2, 9),), "λS2")
    )
    return _both_sides(H, "4.2(1)", (integrals, left), (integrals + (Source("x", x, 15),), right))


def move_left_sides(
    H: HopfAlgebra,
    P: IntegralPair,
    x: AlgebraElement,
    Y: DecomposableMap,
    Z: DecomposableMap
) -> tuple[Scalar, Scalar]:
    """
        λS(Y(…)S⁻¹(Λ²₃)Λ¹₉)·λS(Z(…)S⁻¹(x)Λ²₉) against the same product with x
        moved onto the arguments as x₍ₖ₎ on the left.
    """

    lambda_s: Covector = lambda_antipode(H, P)
    integrals: tuple[Source, ...] = (Source("Λ1", P.Lambda, 9), Source("Λ2", P.Lambda, 9))
    middle: Factor = antipode_factor(H, -1, _integral_leg(2, 3))

    def arguments(table: tuple[tuple[int, int, int], ...], moved: bool) -> list[tuple[Factor, ...]]:
        return [
            (_x(x_leg), _integral_leg(copy, leg)) if moved else (_integral_leg(copy, leg),)
            for copy, leg, x_leg in table
        ]

    left: tuple[Pairing, ...] = (
        Pairing(lambda_s, Y(*arguments(MOVE_LEFT_Y, False)) + (middle, _integral_leg(1, 9)), "λS1"),
        Pairing(
            lambda_s,
            Z(*arguments(MOVE_LEFT_Z, False)) + (Constant(antipode_power(H, -1, x)), _integral_leg(2, 9)),
            "λS2"
        )
    )
    right: tuple[Pairing, ...] = (
        Pairing(lambda_s, Y(*arguments(MOVE_LEFT_Y, True)) + (middle, _integral_leg(1, 9)), "λS1"),
        Pairing(lambda_s, Z(*arguments(MOVE_LEFT_Z, True)) + (_integral_leg(2, 9),), "λS2")
    )
    return _both_sides(H, "4.2(2)", (integrals, left), (integrals + (Source("x", x, 15),), right))


def three_leg_sides(
    H: HopfAlgebra,
    P: IntegralPair,
    x: AlgebraElement,
    X: linalg.Matrix,
    Y: linalg.Matrix
) -> tuple[Scalar, Scalar]:
    """ λS(X(Λ₍₁₎x)Y(Λ₍₂₎)Λ₍₃₎) against λS(S⁻¹(x₍₁₎)X(Λ₍₁₎)Y(Λ₍₂₎S(x₍₂₎))Λ₍₃₎). """

    lambda_s: Covector = lambda_antipode(H, P)
    integral: Source = Source("Λ", P.Lambda, 3)

    def leg(index: int) -> Leg:
        return Leg("Λ", index)

    left: Pairing = Pairing(
        lambda_s,
        (Mapped(X, (leg(1), Constant(x)), "X"), Mapped(Y, (leg(2),), "Y"), leg(3)),
        "λS"
    )
    right: Pairing = Pairing(
        lambda_s,
        (
            antipode_factor(H, -1, _x(1)),
            Mapped(X, (leg(1),), "X"),
            Mapped(Y, (leg(2), antipode_factor(H, 1, _x(2))), "Y"),
            leg(3)
        ),
        "λS"
    )
    return _both_sides(H, "4.3", ((integral,), (left,)), ((integral, Source("x", x, 2)), (right,)))


def weeks_move_sides(
    H: HopfAlgebra,
    P: IntegralPair,
    x: AlgebraElement,
    w1: AlgebraElement,
    w2: AlgebraElement,
    w3: AlgebraElement
) -> tuple[Scalar, Scalar]:
    """
        The Weeks-shaped identity moving x₍₁₎, x₍₂₎, x₍₃₎ from the right of
        Λ¹₍₁₎, Λ¹₍₂₎, Λ¹₍₃₎ to the left of Λ¹₍₄₎, Λ¹₍₅₎, Λ¹₍₆₎.
    """

    lambda_s: Covector = lambda_antipode(H, P)
    sources: tuple[Source, ...] = (Source("Λ1", P.Lambda, 9), Source("Λ2", P.Lambda, 9), Source("x", x, 3))

    def s(exponent: int, *factors: Factor) -> Factor:
        return antipode_factor(H, exponent, *factors)

    def lam(copy: int, index: int) -> Leg:
        return _integral_leg(copy, index)

    def first(moved: bool) -> tuple[Factor, ...]:
        return (
            s(-1, lam(2, 1)),
            s(-1, lam(2, 7)),
            s(-3, _x(2), lam(1, 5)) if moved else s(-3, lam(1, 5)),
            Constant(w2),
            s(-1, lam(1, 2)) if moved else s(-1, lam(1, 2), _x(2)),
            s(-1, lam(2, 8)),
            s(-3, lam(2, 5)),
            s(-2, lam(1, 7)),
            s(-1, lam(2, 3)),
            lam(1, 9)
        )

    def second(moved: bool) -> tuple[Factor, ...]:
        return (
            s(-2, lam(1, 3)) if moved else s(-2, lam(1, 3), _x(3)),
            Constant(w3),
            s(-4, _x(3), lam(1, 6)) if moved else s(-4, lam(1, 6)),
            s(-3, lam(2, 4)),
            s(-2, lam(1, 8)),
            s(-1, lam(2, 2)),
            s(-2, lam(1, 1)) if moved else s(-2, lam(1, 1), _x(1)),
            Constant(w1),
            s(-4, _x(1), lam(1, 4)) if moved else s(-4, lam(1, 4)),
            s(-2, lam(2, 6)),
            lam(2, 9)
        )

    def side(moved: bool) -> tuple[Pairing, ...]:
        return (Pairing(lambda_s, first(moved), "λS1"), Pairing(lambda_s, second(moved), "λS2"))

    return _both_sides(H, "4.4", (sources, side(False)), (sources, side(True)))


def lemma_suite(
    H: HopfAlgebra,
    P: IntegralPair,
    trials: int | None = None,
    seed: int | None = None,
    strict: bool = False,
    items: Sequence[str] = LEMMA_ITEMS,
    elements: Sequence[AlgebraElement] = ()
) -> IdentityReport:
    """
        Evaluates both sides of each selected identity for `trials` random
        choices (plus one case per extra element x, with the other data
        random) & records every inequality with its witness.
    """

    unknown: list[str] = [item for item in items if item not in LEMMA_ITEMS]
    if unknown:
        raise BadParamsError("Unknown lemma items.", items=unknown, known=LEMMA_ITEMS)

    trials = default_trials() if trials is None else trials
    rng: random.Random = make_rng(seed)
    report: IdentityReport = IdentityReport(f"integral lemmas of {H.name}", trials)

    cases: list[AlgebraElement] = list(elements) + [random_element(H, rng) for _ in range(trials)]
    x: AlgebraElement
    for x in cases:
        witness: str = f"x = {x}"
        left: Scalar
        right: Scalar

        if "4.2(1)" in items:
            left, right = move_right_sides(H, P, x, random_decomposable(H, rng, 7, "Y"), random_decomposable(H, rng, 8, "Z"))
            report.record("4.2(1)", left == right, f"{witness}: {left} != {right}", strict)

        if "4.2(2)" in items:
            left, right = move_left_sides(H, P, x, random_decomposable(H, rng, 7, "Y"), random_decomposable(H, rng, 8, "Z"))
            report.record("4.2(2)", left == right, f"{witness}: {left} != {right}", strict)

        if "4.3" in items:
            left, right = three_leg_sides(H, P, x, random_matrix(H, rng), random_matrix(H, rng))
            report.record("4.3", left == right, f"{witness}: {left} != {right}", strict)

        if "4.4" in items:
            w1: AlgebraElement = random_element(H, rng)
            w2: AlgebraElement = random_element(H, rng)
            w3: AlgebraElement = random_element(H, rng)
            left, right = weeks_move_sides(H, P, x, w1, w2, w3)
            report.record("4.4", left == right, f"{witness}, w = ({w1}, {w2}, {w3}): {left} != {right}", strict)

    report.log()
    return report
