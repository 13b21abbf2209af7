"""
    Randomized exact checks of the integral/trace identities, plus the
    IdentityReport shared by every identity suite.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from django.core.exceptions import ValidationError

from kuperberg import linalg
from kuperberg.conf import setting
from kuperberg.exceptions import IdentityViolationError
from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra, TensorElement, antipode_power
from kuperberg.hopf.integrals import IntegralPair, pair
from kuperberg.scalars import Scalar

RANDOM_COORDINATES: tuple[int, ...] = (-2, -1, 0, 1, 2)


def default_trials() -> int:
    return int(setting("KUPERBERG_DEFAULT_TRIALS"))


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(setting("KUPERBERG_RANDOM_SEED") if seed is None else seed)


def random_element(H: HopfAlgebra, rng: random.Random) -> AlgebraElement:
    return H.element({index: rng.choice(RANDOM_COORDINATES) for index in range(H.dim)})


def random_matrix(H: HopfAlgebra, rng: random.Random) -> linalg.Matrix:
    return [[H.field.from_int(rng.choice(RANDOM_COORDINATES)) for _ in range(H.dim)] for _ in range(H.dim)]


@dataclass(frozen=True)
class IdentityCheck:
    item: str
    passed: bool
    witness: str = ""

    def __str__(self) -> str:
        if self.passed:
            return f"{self.item}: pass"
        return f"{self.item}: FAIL ({self.witness})"


@dataclass
class IdentityReport:
    """ Outcome of an identity suite: one entry per checked item & trial. """

    name: str
    trials: int
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def record(self, item: str, holds: bool, witness: str = "", strict: bool = False) -> None:
        if not holds and strict:
            raise IdentityViolationError(item=item, witness=witness)
        self.checks.append(IdentityCheck(item, holds, "" if holds else witness))

    def items(self) -> list[str]:
        return list(dict.fromkeys(check.item for check in self.checks))

    def summary(self) -> str:
        failed_items: set[str] = {check.item for check in self.failures}
        return "\n".join(
            f"{item}: {'FAIL' if item in failed_items else 'pass'}" for item in self.items()
        )

    def raise_for_violations(self) -> None:
        if not self.passed:
            raise ValidationError(
                [ValidationError(str(check), code="identity") for check in self.failures]
            )

    def log(self) -> None:
        if self.passed:
            logging.info(f"{self.name}: {len(self.checks)} checks over {self.trials} trials pass")
        else:
            logging.warning(f"{self.name}: {len(self.failures)} of {len(self.checks)} checks fail")


def _apply(H: HopfAlgebra, X: linalg.Matrix, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(H, H.apply_matrix(X, x.coords))


def trace_formulas(H: HopfAlgebra, P: IntegralPair, X: linalg.Matrix) -> tuple[Scalar, Scalar, Scalar]:
    """
        Returns (Tr X, λ(S(X(Λ₍₂₎))Λ₍₁₎), λ(S(Λ₍₂₎)X(Λ₍₁₎))).
    """

    first: Scalar = H.field.zero()
    second: Scalar = H.field.zero()
    key: tuple[int, ...]
    value: Scalar
    for key, value in P.Lambda.coproduct().items():
        left: AlgebraElement = H.basis_element(key[0])
        right: AlgebraElement = H.basis_element(key[1])
        first = first + value * pair(P.lambda_, antipode_power(H, 1, _apply(H, X, right)) * left)
        second = second + value * pair(P.lambda_, antipode_power(H, 1, right) * _apply(H, X, left))
    return linalg.trace(X, H.field), first, second


def _integral_moves(H: HopfAlgebra, P: IntegralPair, a: AlgebraElement) -> tuple[TensorElement, TensorElement]:
    """ Returns S(a)Λ₍₁₎⊗Λ₍₂₎ & Λ₍₁₎⊗aΛ₍₂₎. """

    coproduct: TensorElement = P.Lambda.coproduct()
    one: AlgebraElement = H.one()
    return (
        TensorElement.pure(antipode_power(H, 1, a), one) * coproduct,
        TensorElement.pure(one, a) * coproduct
    )


def _cointegral_moves(H: HopfAlgebra, P: IntegralPair, a: AlgebraElement, X: linalg.Matrix) -> tuple[Scalar, Scalar]:
    """ Returns λS(aX(Λ₍₁₎)Λ₍₂₎) & λS(X(Λ₍₁₎S(a))Λ₍₂₎). """

    antipode_of_a: AlgebraElement = antipode_power(H, 1, a)
    left: AlgebraElement = H.zero()
    right: AlgebraElement = H.zero()
    key: tuple[int, ...]
    value: Scalar
    for key, value in P.Lambda.coproduct().items():
        first_leg: AlgebraElement = H.basis_element(key[0])
        second_leg: AlgebraElement = H.basis_element(key[1])
        left = left + (a * _apply(H, X, first_leg) * second_leg).scale(value)
        right = right + (_apply(H, X, first_leg * antipode_of_a) * second_leg).scale(value)
    return pair(P.lambda_, antipode_power(H, 1, left)), pair(P.lambda_, antipode_power(H, 1, right))


def trace_identity_suite(
    H: HopfAlgebra,
    P: IntegralPair,
    trials: int | None = None,
    seed: int | None = None,
    strict: bool = False,
    matrices: Sequence[linalg.Matrix] = ()
) -> IdentityReport:
    """
        Checks the integral identities exactly on random elements & random
        matrices (& on any extra matrices given). Item 1 moves a across
        ΔΛ, item 2 compares both trace formulas with the matrix trace and
        item 3 moves a across the cointegral.
    """

    trials = default_trials() if trials is None else trials
    rng: random.Random = make_rng(seed)
    report: IdentityReport = IdentityReport(f"trace identities of {H.name}", trials)

    cases: list[tuple[AlgebraElement, linalg.Matrix]] = [
        (random_element(H, rng), X) for X in matrices
    ]
    _: int
    for _ in range(trials):
        cases.append((random_element(H, rng), random_matrix(H, rng)))

    a: AlgebraElement
    X: linalg.Matrix
    for a, X in cases:
        witness: str = f"a = {a}"

        moved_left: TensorElement
        moved_right: TensorElement
        moved_left, moved_right = _integral_moves(H, P, a)
        report.record("1", moved_left == moved_right, witness, strict)

        trace: Scalar
        first: Scalar
        second: Scalar
        trace, first, second = trace_formulas(H, P, X)
        report.record("2", trace == first == second, f"Tr = {trace}, formulas give {first} & {second}", strict)

        left: Scalar
        right: Scalar
        left, right = _cointegral_moves(H, P, a, X)
        report.record("3", left == right, f"{witness}: {left} != {right}", strict)

    report.log()
    return report
