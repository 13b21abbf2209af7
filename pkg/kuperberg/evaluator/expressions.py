"""
    Scalar expressions c·∏_j φ_j(word_j) over a Hopf algebra, where the words
    multiply legs of iterated coproducts of named source elements, constants &
    linear maps applied to sub-words. Expressions compile to an exact sparse
    tensor network: one Δ-chain per source, one product chain per word & one
    pairing tensor per covector.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence, TypeAlias

from kuperberg import linalg
from kuperberg.exceptions import BadParamsError
from kuperberg.evaluator.network import (
    ContractionPlan,
    ContractionStats,
    SparseTensor,
    execute_plan,
    plan_network,
    scalar_tensor
)
from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra
from kuperberg.hopf.integrals import Covector, IntegralPair, pair, tmap_matrix
from kuperberg.scalars import Scalar


@dataclass(frozen=True)
class Source:
    """ An element x whose iterated coproduct Δ^legs(x) feeds the words. """

    name: str
    element: AlgebraElement
    legs: int


@dataclass(frozen=True)
class Leg:
    """ The leg x₍index₎ (1-based) of a source. """

    source: str
    index: int


@dataclass(frozen=True)
class Constant:
    element: AlgebraElement


@dataclass(frozen=True, eq=False)
class Mapped:
    """ A linear map (column j = image of e_j) applied to the product of a word. """

    matrix: linalg.Matrix
    word: tuple["Factor", ...]
    label: str = "X"


Factor: TypeAlias = Leg | Constant | Mapped


@dataclass(frozen=True, eq=False)
class Pairing:
    covector: Covector
    word: tuple[Factor, ...]
    label: str = "φ"


@dataclass(frozen=True, eq=False)
class ScalarExpression:
    algebra: HopfAlgebra
    sources: tuple[Source, ...]
    pairings: tuple[Pairing, ...]
    coefficient: Scalar | None = None
    name: str = field(default="expression")


def antipode_factor(H: HopfAlgebra, exponent: int, *factors: Factor) -> Factor:
    """ S^exponent applied to a product; S^0 of a single factor is the factor itself. """

    if exponent == 0 and len(factors) == 1:
        return factors[0]
    return Mapped(H.antipode_power_matrix(exponent), tuple(factors), f"S^{exponent}")


def tmap_factor(H: HopfAlgebra, P: IntegralPair, exponent: int, *factors: Factor) -> Factor:
    if exponent == 0 and len(factors) == 1:
        return factors[0]
    return Mapped(tmap_matrix(H, P, exponent), tuple(factors), f"T^{exponent}")


def lambda_antipode(H: HopfAlgebra, P: IntegralPair) -> Covector:
    """ The covector λ∘S. """

    return tuple(pair(P.lambda_, AlgebraElement(H, H.antipode_vector({index: H.field.one()}))) for index in range(H.dim))


def _legs_in(factors: Sequence[Factor]) -> Iterator[Leg]:
    factor: Factor
    for factor in factors:
        if isinstance(factor, Leg):
            yield factor
        elif isinstance(factor, Mapped):
            yield from _legs_in(factor.word)


def check_legs(expression: ScalarExpression) -> None:
    """ Every leg of every source must appear exactly once in the words. """

    used: Counter[Leg] = Counter(leg for pairing in expression.pairings for leg in _legs_in(pairing.word))
    expected: set[Leg] = {
        Leg(source.name, index) for source in expression.sources for index in range(1, source.legs + 1)
    }
    names: list[str] = [source.name for source in expression.sources]
    if len(set(names)) != len(names):
        raise BadParamsError("Expression sources need distinct names.", expression=expression.name, sources=names)

    repeated: list[str] = sorted(f"{leg.source}{leg.index}" for leg, count in used.items() if count > 1)
    unknown: list[str] = sorted(f"{leg.source}{leg.index}" for leg in used if leg not in expected)
    missing: list[str] = sorted(f"{leg.source}{leg.index}" for leg in expected if leg not in used)
    if repeated or unknown or missing:
        raise BadParamsError(
            "Each coproduct leg must be used exactly once.",
            expression=expression.name,
            repeated=repeated,
            unknown=unknown,
            missing=missing
        )


class _NetworkBuilder:
    def __init__(self, H: HopfAlgebra) -> None:
        self.H: HopfAlgebra = H
        self.nodes: list[SparseTensor] = []
        self.counter: Iterator[int] = itertools.count()
        self.mult_entries: dict[tuple[int, ...], Scalar] = {
            (i, j, k): coefficient
            for (i, j), images in H.mult.items()
            for k, coefficient in images.items()
            if not coefficient.is_zero()
        }
        self.comult_entries: dict[tuple[int, ...], Scalar] = {
            (i, j, k): coefficient
            for i, images in H.comult.items()
            for (j, k), coefficient in images.items()
            if not coefficient.is_zero()
        }

    def fresh(self, prefix: str) -> str:
        return f"{prefix}~{next(self.counter)}"

    def vector_node(self, variable: str, element: AlgebraElement, label: str) -> None:
        self.nodes.append(SparseTensor((variable,), {(index,): value for index, value in element.coords.items()}, label))

    def source(self, source: Source) -> None:
        if source.legs == 0:
            self.nodes.append(scalar_tensor(source.element.counit(), f"ε({source.name})"))
            return

        leg_variables: list[str] = [f"{source.name}.{index}" for index in range(1, source.legs + 1)]
        carry: str = leg_variables[0] if source.legs == 1 else self.fresh(source.name)
        self.vector_node(carry, source.element, source.name)

        position: int
        for position in range(source.legs - 1):
            remainder: str = leg_variables[-1] if position == source.legs - 2 else self.fresh(source.name)
            self.nodes.append(SparseTensor((carry, leg_variables[position], remainder), self.comult_entries, f"Δ({source.name})"))
            carry = remainder

    def word(self, factors: Sequence[Factor], label: str) -> str:
        """ Adds the product chain of a word & returns the variable carrying its value. """

        if not factors:
            variable: str = self.fresh("unit")
            self.vector_node(variable, self.H.one(), "1")
            return variable

        current: str = self.factor(factors[0], label)
        factor: Factor
        for factor in factors[1:]:
            following: str = self.factor(factor, label)
            product: str = self.fresh(label)
            self.nodes.append(SparseTensor((current, following, product), self.mult_entries, f"m({label})"))
            current = product
        return current

    def factor(self, factor: Factor, label: str) -> str:
        if isinstance(factor, Leg):
            return f"{factor.source}.{factor.index}"

        if isinstance(factor, Constant):
            variable: str = self.fresh("const")
            self.vector_node(variable, factor.element, "const")
            return variable

        inner: str = self.word(factor.word, label)
        image: str = self.fresh(factor.label)
        entries: dict[tuple[int, ...], Scalar] = {
            (j, i): factor.matrix[i][j]
            for i in range(self.H.dim)
            for j in range(self.H.dim)
            if not factor.matrix[i][j].is_zero()
        }
        self.nodes.append(SparseTensor((inner, image), entries, factor.label))
        return image

    def pairing(self, pairing: Pairing) -> None:
        output: str = self.word(pairing.word, pairing.label)
        entries: dict[tuple[int, ...], Scalar] = {
            (index,): value for index, value in enumerate(pairing.covector) if not value.is_zero()
        }
        self.nodes.append(SparseTensor((output,), entries, pairing.label))


def compile_expression(expression: ScalarExpression) -> list[SparseTensor]:
    check_legs(expression)
    builder: _NetworkBuilder = _NetworkBuilder(expression.algebra)
    source: Source
    for source in expression.sources:
        builder.source(source)
    pairing: Pairing
    for pairing in expression.pairings:
        builder.pairing(pairing)
    if expression.coefficient is not None:
        builder.nodes.append(scalar_tensor(expression.coefficient, "coefficient"))
    return builder.nodes


def plan_expression(expression: ScalarExpression, budget: int | None = None, order: Sequence[tuple[int, int]] | None = None) -> ContractionPlan:
    return plan_network(compile_expression(expression), expression.algebra.field, budget, order)


def evaluate_expression(
    expression: ScalarExpression,
    budget: int | None = None,
    order: Sequence[tuple[int, int]] | None = None
) -> tuple[Scalar, ContractionStats]:
    plan: ContractionPlan = plan_expression(expression, budget, order)
    value: Scalar
    stats: ContractionStats
    value, stats = execute_plan(plan, budget)
    logging.debug(f"{expression.name} = {value} ({stats.max_intermediate} max terms, {stats.term_count} products)")
    return value, stats


def expression_value(expression: ScalarExpression, budget: int | None = None) -> Scalar:
    return evaluate_expression(expression, budget)[0]
