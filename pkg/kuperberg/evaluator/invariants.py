"""
    The Kuperberg invariant of a framed Heegaard diagram: planned & naive
    evaluation, the closed forms for the Weeks manifold & the 3-torus, and
    the gauge-invariance check.
"""

import itertools
import logging
import shlex
from dataclasses import dataclass
from typing import Any, Final, Mapping, Sequence

from kuperberg import linalg
from kuperberg.conf import setting
from kuperberg.exceptions import BudgetExceededError
from kuperberg.evaluator.expressions import (
    Constant,
    Factor,
    Leg,
    Pairing,
    ScalarExpression,
    Source,
    antipode_factor,
    evaluate_expression,
    expression_value,
    plan_expression,
    tmap_factor
)
from kuperberg.evaluator.network import ContractionPlan, ContractionStats
from kuperberg.heegaard.diagrams import CurveRecord, FramedHeegaardDiagram, rotation_exponents, validate
from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra, iterated_coproduct
from kuperberg.hopf.integrals import (
    Covector,
    IntegralPair,
    compute_integrals,
    default_convention,
    pair,
    tmap_matrix,
    twisted_cointegral,
    twisted_integral
)
from kuperberg.scalars import Scalar
from kuperberg.twist.cocycles import Cocycle, twist_hopf

# (integral copy, leg, power of S) for each factor of each λ-pairing.
ClosedWord = tuple[tuple[int, int, int], ...]

WEEKS_CLOSED_WORDS: Final[tuple[ClosedWord, ...]] = (
    ((1, 3, 0), (1, 6, -2), (2, 5, -1), (1, 8, 0), (2, 3, 1), (1, 1, 0), (1, 4, -2), (2, 7, 0), (2, 1, 0)),
    ((1, 9, 1), (2, 4, 0), (1, 7, -1), (2, 6, -2), (2, 9, 0), (1, 2, 0), (1, 5, -2), (2, 8, 0), (2, 2, 0))
)
TORUS_CLOSED_WORDS: Final[tuple[ClosedWord, ...]] = (
    ((3, 2, 2), (1, 3, 1), (3, 4, 1), (1, 1, 0)),
    ((1, 4, 0), (2, 3, 1), (1, 2, 1), (2, 1, 0)),
    ((2, 4, 1), (3, 3, 1), (2, 2, 0), (3, 1, 0))
)


def format_record(fields: Mapping[str, Any]) -> str:
    """ One line of key=value pairs in the given order; values with spaces are shell-quoted. """

    return " ".join(f"{key}={shlex.quote(str(value))}" for key, value in fields.items())


@dataclass(frozen=True)
class InvariantResult:
    value: Scalar
    diagram: str
    algebra: str
    degree_offset: int
    convention: str
    max_intermediate: int
    term_count: int
    method: str = "planned"

    def as_record_fields(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra,
            "diagram": self.diagram,
            "degree_offset": self.degree_offset,
            "convention": self.convention,
            "value": str(self.value),
            "field": str(self.value.field),
            "max_intermediate": self.max_intermediate,
            "term_count": self.term_count
        }

    def as_machine_record(self) -> str:
        """ One line of key=value pairs, in a fixed key order. """

        return format_record(self.as_record_fields() | {"method": self.method})

    def __str__(self) -> str:
        return f"Z({self.diagram}, {self.algebra}; degree {self.degree_offset}) = {self.value}"


def _point_factor(H: HopfAlgebra, P: IntegralPair, leg: Leg, s: int, t: int) -> Factor:
    """ Label S^s T^t applied to a coproduct leg. """

    return antipode_factor(H, s, tmap_factor(H, P, t, leg))


def _leg_positions(d: FramedHeegaardDiagram) -> dict[str, Leg]:
    positions: dict[str, Leg] = {}
    curve: CurveRecord
    for curve in d.lower_curves:
        index: int
        point_id: str
        for index, point_id in enumerate(curve.ordered_points, start=1):
            positions[point_id] = Leg(curve.id, index)
    return positions


def diagram_expression(
    H: HopfAlgebra,
    P: IntegralPair,
    d: FramedHeegaardDiagram,
    degree_offset: int = 0,
    convention: str | None = None
) -> ScalarExpression:
    """
        Builds ∏_j λ_{−θ(μ_j)}(w_j): each lower curve η_i feeds the legs of
        Δ^{n_i}(Λ_{θ(η_i)}) to its points in order, each point applies
        S^{s(p)}T^{t(p)} to its leg & each upper curve multiplies the labels
        it meets into w_j. A nonzero degree offset n scales by α(g)^n.
    """

    validate(d).raise_for_violations()
    exponents: dict[str, tuple[int, int]] = rotation_exponents(d)
    legs: dict[str, Leg] = _leg_positions(d)

    sources: tuple[Source, ...] = tuple(
        Source(curve.id, twisted_integral(H, P, curve.theta_total), len(curve.ordered_points))
        for curve in d.lower_curves
    )
    pairings: tuple[Pairing, ...] = tuple(
        Pairing(
            twisted_cointegral(H, P, -curve.theta_total, convention),
            tuple(_point_factor(H, P, legs[point_id], *exponents[point_id]) for point_id in curve.ordered_points),
            curve.id
        )
        for curve in d.upper_curves
    )
    coefficient: Scalar | None = P.alpha_of_g ** degree_offset if degree_offset else None
    return ScalarExpression(H, sources, pairings, coefficient, f"Z({d.name}, {H.name})")


def plan_contraction(
    d: FramedHeegaardDiagram,
    H: HopfAlgebra,
    P: IntegralPair | None = None,
    convention: str | None = None,
    budget: int | None = None,
    order: Sequence[tuple[int, int]] | None = None
) -> ContractionPlan:
    P = P or compute_integrals(H)
    return plan_expression(diagram_expression(H, P, d, 0, convention), budget, order)


def evaluate(
    H: HopfAlgebra,
    P: IntegralPair,
    d: FramedHeegaardDiagram,
    degree_offset: int = 0,
    convention: str | None = None,
    budget: int | None = None,
    order: Sequence[tuple[int, int]] | None = None
) -> InvariantResult:
    convention = convention or default_convention()
    value: Scalar
    stats: ContractionStats
    value, stats = evaluate_expression(diagram_expression(H, P, d, degree_offset, convention), budget, order)
    logging.info(f"Z({d.name}, {H.name}) = {value} (max intermediate {stats.max_intermediate} terms)")
    return InvariantResult(value, d.name, H.name, degree_offset, convention, stats.max_intermediate, stats.term_count)


def default_naive_budget() -> int:
    return int(setting("KUPERBERG_NAIVE_BUDGET"))


def evaluate_naive(
    H: HopfAlgebra,
    P: IntegralPair,
    d: FramedHeegaardDiagram,
    degree_offset: int = 0,
    convention: str | None = None,
    budget: int | None = None
) -> InvariantResult:
    """
        Brute-force expansion: iterates over every combination of coproduct
        summands of the lower-curve integrals & multiplies the labels along
        each upper curve directly.
    """

    convention = convention or default_convention()
    budget = default_naive_budget() if budget is None else budget
    validate(d).raise_for_violations()
    exponents: dict[str, tuple[int, int]] = rotation_exponents(d)

    value: Scalar = H.field.one()
    expansions: list[list[tuple[tuple[int, ...], Scalar]]] = []
    curve: CurveRecord
    for curve in d.lower_curves:
        integral: AlgebraElement = twisted_integral(H, P, curve.theta_total)
        if curve.ordered_points:
            expansions.append(list(iterated_coproduct(H, len(curve.ordered_points), integral).items()))
        else:
            value = value * integral.counit()

    combinations: int = 1
    terms: list[tuple[tuple[int, ...], Scalar]]
    for terms in expansions:
        combinations *= len(terms)
    if combinations > budget:
        logging.warning(f"Naive evaluation of {d.name} over {H.name} needs {combinations} combinations, budget is {budget}")
        raise BudgetExceededError(combinations=combinations, budget=budget)

    labels: dict[str, linalg.Matrix] = {
        point_id: linalg.matmul(H.antipode_power_matrix(s), tmap_matrix(H, P, t), H.field)
        for point_id, (s, t) in exponents.items()
    }
    images: dict[tuple[str, int], AlgebraElement] = {}

    def label(point_id: str, index: int) -> AlgebraElement:
        if (point_id, index) not in images:
            images[(point_id, index)] = AlgebraElement(H, H.apply_matrix(labels[point_id], {index: H.field.one()}))
        return images[(point_id, index)]

    cointegrals: list[Covector] = [twisted_cointegral(H, P, -curve.theta_total, convention) for curve in d.upper_curves]
    lower_points: list[tuple[str, ...]] = [curve.ordered_points for curve in d.lower_curves if curve.ordered_points]

    total: Scalar = H.field.zero()
    combination: tuple[tuple[tuple[int, ...], Scalar], ...]
    for combination in itertools.product(*expansions):
        weight: Scalar = H.field.one()
        assignment: dict[str, int] = {}
        key: tuple[int, ...]
        coefficient: Scalar
        points: tuple[str, ...]
        for (key, coefficient), points in zip(combination, lower_points):
            weight = weight * coefficient
            assignment.update(zip(points, key))

        cointegral: Covector
        for curve, cointegral in zip(d.upper_curves, cointegrals):
            word: AlgebraElement = H.one()
            point_id: str
            for point_id in curve.ordered_points:
                word = word * label(point_id, assignment[point_id])
            weight = weight * pair(cointegral, word)
            if weight.is_zero():
                break
        total = total + weight

    value = value * total
    if degree_offset:
        value = value * P.alpha_of_g ** degree_offset
    logging.info(f"Naive Z({d.name}, {H.name}) = {value} over {combinations} combinations")
    return InvariantResult(value, d.name, H.name, degree_offset, convention, combinations, combinations, "naive")


def closed_form_expression(H: HopfAlgebra, P: IntegralPair, words: Sequence[ClosedWord], name: str) -> ScalarExpression:
    """ ∏ λ(word) where each word multiplies S-powers of legs of copies of Λ. """

    copies: list[int] = sorted({copy for word in words for copy, _, _ in word})
    legs: dict[int, int] = {copy: max(leg for word in words for c, leg, _ in word if c == copy) for copy in copies}
    sources: tuple[Source, ...] = tuple(Source(f"Λ{copy}", P.Lambda, legs[copy]) for copy in copies)
    pairings: tuple[Pairing, ...] = tuple(
        Pairing(
            P.lambda_,
            tuple(antipode_factor(H, power, Leg(f"Λ{copy}", leg)) for copy, leg, power in word),
            f"λ{number}"
        )
        for number, word in enumerate(words, start=1)
    )
    return ScalarExpression(H, sources, pairings, None, name)


def weeks_closed_form(H: HopfAlgebra, P: IntegralPair, budget: int | None = None) -> Scalar:
    return expression_value(closed_form_expression(H, P, WEEKS_CLOSED_WORDS, f"Z_W({H.name})"), budget)


def torus_closed_form(H: HopfAlgebra, P: IntegralPair, budget: int | None = None) -> Scalar:
    return expression_value(closed_form_expression(H, P, TORUS_CLOSED_WORDS, f"Z_T3({H.name})"), budget)


@dataclass(frozen=True)
class GaugeVerdict:
    equal: bool
    z: Scalar
    z_twisted: Scalar

    def __str__(self) -> str:
        return f"{'EQUAL' if self.equal else 'DIFFERENT'}: {self.z} vs {self.z_twisted}"


def gauge_check(
    H: HopfAlgebra,
    P: IntegralPair,
    C: Cocycle,
    d: FramedHeegaardDiagram,
    convention: str | None = None,
    budget: int | None = None
) -> GaugeVerdict:
    """
        Evaluates the diagram over H & over H_F, with the integrals of H_F
        recomputed from its own structure tensors.
    """

    z: Scalar = evaluate(H, P, d, 0, convention, budget).value
    H_F: HopfAlgebra
    H_F, _ = twist_hopf(H, P, C)
    P_F: IntegralPair = compute_integrals(H_F)
    logging.info(f"Recomputed integrals of {H_F.name}: Λ = {P_F.Lambda}, g = {P_F.g}")
    z_twisted: Scalar = evaluate(H_F, P_F, d, 0, convention, budget).value

    verdict: GaugeVerdict = GaugeVerdict(z == z_twisted, z, z_twisted)
    if not verdict.equal:
        logging.warning(f"Gauge check failed for {H.name} on {d.name}: {verdict}")
    return verdict


def framing_ratio(H: HopfAlgebra, P: IntegralPair, d: FramedHeegaardDiagram, degree_offset: int) -> Scalar:
    """ Z(d, degree_offset) / Z(d, 0) when the latter is nonzero, else α(g)^degree_offset. """

    base: Scalar = evaluate(H, P, d).value
    if base.is_zero():
        return P.alpha_of_g ** degree_offset
    return evaluate(H, P, d, degree_offset).value / base
