"""
    Combinatorial framed Heegaard diagrams: lower curves η_i, upper curves μ_j
    & their intersection points, each carrying the rotation numbers θ, φ
    measured from the curve's base point (in units of a full turn).
"""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from django.core.exceptions import ValidationError

from kuperberg.exceptions import NonIntegralExponentError, UnknownCurveRefError

HALF: Fraction = Fraction(1, 2)


class CurveKind(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class CurveRecord:
    id: str
    kind: CurveKind
    ordered_points: tuple[str, ...]
    theta_total: Fraction
    phi_total: Fraction


@dataclass(frozen=True)
class IntersectionPoint:
    id: str
    lower_curve: str
    upper_curve: str
    theta_eta: Fraction
    theta_mu: Fraction
    phi_eta: Fraction
    phi_mu: Fraction

    @property
    def s_value(self) -> Fraction:
        """ s(p) = 2(θ_η(p) − θ_μ(p)) + 1/2, before the integrality check. """

        return 2 * (self.theta_eta - self.theta_mu) + HALF

    @property
    def t_value(self) -> Fraction:
        return self.phi_eta - self.phi_mu


@dataclass(frozen=True)
class FramedHeegaardDiagram:
    genus: int
    lower_curves: tuple[CurveRecord, ...]
    upper_curves: tuple[CurveRecord, ...]
    points: tuple[IntersectionPoint, ...]
    name: str = field(default="diagram", compare=False)

    @cached_property
    def points_by_id(self) -> dict[str, IntersectionPoint]:
        return {point.id: point for point in self.points}

    @cached_property
    def curves_by_id(self) -> dict[str, CurveRecord]:
        return {curve.id: curve for curve in self.lower_curves + self.upper_curves}

    def point(self, point_id: str) -> IntersectionPoint:
        try:
            return self.points_by_id[point_id]
        except KeyError:
            raise UnknownCurveRefError(point=point_id) from None

    def curve(self, curve_id: str) -> CurveRecord:
        try:
            return self.curves_by_id[curve_id]
        except KeyError:
            raise UnknownCurveRefError(curve=curve_id) from None

    def with_curve(self, curve: CurveRecord) -> "FramedHeegaardDiagram":
        """ Returns a copy of this diagram with one curve record replaced. """

        def replace(curves: tuple[CurveRecord, ...]) -> tuple[CurveRecord, ...]:
            return tuple(curve if existing.id == curve.id else existing for existing in curves)

        return FramedHeegaardDiagram(
            self.genus,
            replace(self.lower_curves),
            replace(self.upper_curves),
            self.points,
            self.name
        )

    def __str__(self) -> str:
        return f"{self.name} (genus {self.genus}, {len(self.points)} points)"


@dataclass(frozen=True)
class DiagramViolation:
    rule: str
    subject: str
    detail: str

    def __str__(self) -> str:
        return f"{self.rule} [{self.subject}]: {self.detail}"


@dataclass
class DiagramReport:
    """ Every admissibility & consistency violation found in one diagram. """

    diagram: str
    violations: list[DiagramViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, rule: str, subject: str, detail: str) -> None:
        self.violations.append(DiagramViolation(rule, subject, detail))

    def rules(self) -> set[str]:
        return {violation.rule for violation in self.violations}

    def summary(self) -> str:
        if self.passed:
            return f"{self.diagram}: valid"
        return "\n".join([f"{self.diagram}: {len(self.violations)} violation(s)"] + [str(violation) for violation in self.violations])

    def raise_for_violations(self) -> None:
        if not self.passed:
            raise ValidationError(
                [ValidationError(str(violation), code=violation.rule) for violation in self.violations]
            )


def _is_half_odd(value: Fraction) -> bool:
    return (value - HALF).denominator == 1


def _divides_denominator(value: Fraction, denominator: int) -> bool:
    return denominator % value.denominator == 0


def validate(d: FramedHeegaardDiagram) -> DiagramReport:
    report: DiagramReport = DiagramReport(d.name)

    if d.genus < 1:
        report.add("genus", d.name, f"genus must be at least 1, got {d.genus}")
    if not len(d.lower_curves) == len(d.upper_curves) == d.genus:
        report.add(
            "curve-count",
            d.name,
            f"expected {d.genus} lower & {d.genus} upper curves, got {len(d.lower_curves)} & {len(d.upper_curves)}"
        )

    seen_curve_ids: set[str] = set()
    expected_kind: CurveKind
    curves: tuple[CurveRecord, ...]
    for expected_kind, curves in ((CurveKind.LOWER, d.lower_curves), (CurveKind.UPPER, d.upper_curves)):
        curve: CurveRecord
        for curve in curves:
            if curve.id in seen_curve_ids:
                report.add("unique-id", curve.id, "curve id is used more than once")
            seen_curve_ids.add(curve.id)
            if curve.kind is not expected_kind:
                report.add("curve-kind", curve.id, f"listed as {expected_kind.value} but recorded as {curve.kind.value}")

    lower_ids: set[str] = {curve.id for curve in d.lower_curves}
    upper_ids: set[str] = {curve.id for curve in d.upper_curves}
    incident: dict[str, list[str]] = {curve_id: [] for curve_id in lower_ids | upper_ids}

    point: IntersectionPoint
    for point in d.points:
        if point.lower_curve not in lower_ids:
            report.add("point-curves", point.id, f"{point.lower_curve!r} is not a lower curve")
        else:
            incident[point.lower_curve].append(point.id)
        if point.upper_curve not in upper_ids:
            report.add("point-curves", point.id, f"{point.upper_curve!r} is not an upper curve")
        else:
            incident[point.upper_curve].append(point.id)

        if not (_divides_denominator(point.theta_eta, 4) and _divides_denominator(point.theta_mu, 4)):
            report.add("quarter-integer", point.id, f"θ values {point.theta_eta}, {point.theta_mu} are not quarter-integers")
        if not (_divides_denominator(point.phi_eta, 2) and _divides_denominator(point.phi_mu, 2)):
            report.add("half-integer", point.id, f"φ values {point.phi_eta}, {point.phi_mu} are not half-integers")
        if point.s_value.denominator != 1 or point.t_value.denominator != 1:
            report.add("exponent", point.id, f"s = {point.s_value}, t = {point.t_value} must both be integers")

    for curve in d.lower_curves + d.upper_curves:
        if sorted(curve.ordered_points) != sorted(incident.get(curve.id, [])):
            report.add(
                "curve-order",
                curve.id,
                f"order {list(curve.ordered_points)} is not a permutation of the incident points {sorted(incident.get(curve.id, []))}"
            )
        if not (_is_half_odd(curve.theta_total) and _is_half_odd(curve.phi_total)):
            report.add("half-integer", curve.id, f"totals θ = {curve.theta_total}, φ = {curve.phi_total} must be odd multiples of 1/2")

    for curve in d.lower_curves:
        if curve.theta_total != curve.phi_total:
            report.add("admissible", curve.id, f"lower curve needs θ = φ, got θ = {curve.theta_total}, φ = {curve.phi_total}")
    for curve in d.upper_curves:
        if curve.theta_total != -curve.phi_total:
            report.add("admissible", curve.id, f"upper curve needs θ = −φ, got θ = {curve.theta_total}, φ = {curve.phi_total}")

    if not report.passed:
        logging.warning(f"Diagram {d.name} has {len(report.violations)} violation(s)")
    return report


def rotation_exponents(d: FramedHeegaardDiagram) -> dict[str, tuple[int, int]]:
    """ Returns {point id: (s(p), t(p))} in the diagram's point order. """

    exponents: dict[str, tuple[int, int]] = {}
    point: IntersectionPoint
    for point in d.points:
        s: Fraction = point.s_value
        t: Fraction = point.t_value
        if s.denominator != 1 or t.denominator != 1:
            raise NonIntegralExponentError(point=point.id, s=str(s), t=str(t))
        exponents[point.id] = (int(s), int(t))
    return exponents


@dataclass(frozen=True)
class GroupPresentation:
    """
        Generators & relator words; each letter is (generator, ±1).
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...]

    def __str__(self) -> str:
        def render(word: tuple[tuple[str, int], ...]) -> str:
            return "".join(generator if exponent == 1 else f"{generator}⁻¹" for generator, exponent in word) or "1"

        return f"⟨{', '.join(self.generators)} | {', '.join(render(word) for word in self.relators)}⟩"


def fundamental_group_presentation(d: FramedHeegaardDiagram) -> GroupPresentation:
    """
        Reads π₁ off the diagram: one generator per lower curve & one relator
        per upper curve, whose letters are the generators of the lower curves
        met along it, inverted where s(p) is odd.
    """

    exponents: dict[str, tuple[int, int]] = rotation_exponents(d)
    relators: list[tuple[tuple[str, int], ...]] = []
    curve: CurveRecord
    for curve in d.upper_curves:
        relators.append(tuple(
            (d.point(point_id).lower_curve, -1 if exponents[point_id][0] % 2 else 1)
            for point_id in curve.ordered_points
        ))
    return GroupPresentation(tuple(curve.id for curve in d.lower_curves), tuple(relators))
