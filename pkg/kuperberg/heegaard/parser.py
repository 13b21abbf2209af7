"""
    Reader & writer for `.khd` documents:

        genus 1
        lower eta1 theta 1/2 phi 1/2 order a
        upper mu1 theta -1/2 phi 1/2 order a
        point a on eta1 mu1 theta_eta 1/4 theta_mu 0 phi_eta 0 phi_mu 0

    Blank lines & lines starting with "#" are ignored. The parser only checks
    syntax & references; admissibility is left to `validate`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Final, Iterator

from kuperberg.exceptions import DuplicatePointIdError, KhdSyntaxError, UnknownCurveRefError
from kuperberg.heegaard.diagrams import CurveKind, CurveRecord, FramedHeegaardDiagram, IntersectionPoint

RATIONAL_PATTERN: Final[re.Pattern[str]] = re.compile(r"[+-]?\d+(/\d+)?")
IDENTIFIER_PATTERN: Final[re.Pattern[str]] = re.compile(r"[A-Za-z_][A-Za-z0-9_.'-]*")
POINT_KEYWORDS: Final[tuple[str, ...]] = ("theta_eta", "theta_mu", "phi_eta", "phi_mu")


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


class _Line:
    """ Cursor over the whitespace separated tokens of one line. """

    def __init__(self, text: str, line_number: int) -> None:
        self.line_number: int = line_number
        self.tokens: list[_Token] = [
            _Token(match.group(), line_number, match.start() + 1) for match in re.finditer(r"\S+", text)
        ]
        self.position: int = 0
        self.end_column: int = len(text) + 1

    def _error(self, expected: str, token: _Token | None = None) -> KhdSyntaxError:
        column: int = token.column if token else self.end_column
        found: str = repr(token.text) if token else "end of line"
        return KhdSyntaxError(f"Expected {expected}, found {found}.", line=self.line_number, column=column, expected=expected)

    def next(self, expected: str) -> _Token:
        if self.position >= len(self.tokens):
            raise self._error(expected)
        token: _Token = self.tokens[self.position]
        self.position += 1
        return token

    def keyword(self, word: str) -> None:
        token: _Token = self.next(f"keyword {word!r}")
        if token.text != word:
            raise self._error(f"keyword {word!r}", token)

    def identifier(self, what: str) -> _Token:
        token: _Token = self.next(what)
        if not IDENTIFIER_PATTERN.fullmatch(token.text):
            raise self._error(what, token)
        return token

    def rational(self, what: str) -> Fraction:
        token: _Token = self.next(what)
        if not RATIONAL_PATTERN.fullmatch(token.text):
            raise self._error(f"{what} (a rational a/b)", token)
        numerator: str
        _: str
        denominator: str
        numerator, _, denominator = token.text.partition("/")
        if denominator and int(denominator) == 0:
            raise self._error(f"{what} with a nonzero denominator", token)
        return Fraction(int(numerator), int(denominator or 1))

    def remaining(self) -> Iterator[_Token]:
        while self.position < len(self.tokens):
            yield self.next("identifier")

    def finish(self) -> None:
        if self.position < len(self.tokens):
            raise self._error("end of line", self.tokens[self.position])


def natural_key(identifier: str) -> tuple[tuple[int, int | str], ...]:
    """ Sort key ordering "p2" before "p10". """

    return tuple(
        (0, int(part)) if part.isdigit() else (1, part)
        for part in re.findall(r"\d+|\D+", identifier)
    )


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    line_number: int
    raw_line: str
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        stripped: str = raw_line.strip()
        if stripped and not stripped.startswith("#"):
            yield line_number, raw_line.rstrip()


def parse_khd(text: str, name: str = "diagram") -> FramedHeegaardDiagram:
    genus: int | None = None
    curves: dict[str, tuple[CurveRecord, int]] = {}
    points: dict[str, tuple[IntersectionPoint, int]] = {}
    last_line: int = 0

    line_number: int
    raw_line: str
    for line_number, raw_line in _content_lines(text):
        last_line = line_number
        line: _Line = _Line(raw_line, line_number)
        head: _Token = line.next("a declaration")

        if genus is None:
            if head.text != "genus":
                raise KhdSyntaxError(
                    "Diagram text must start with a genus header.", line=line_number, column=head.column, expected="genus"
                )
            genus_token: _Token = line.next("genus value")
            if not genus_token.text.isdigit():
                raise KhdSyntaxError(
                    "Genus must be a non-negative integer.", line=line_number, column=genus_token.column, expected="integer"
                )
            genus = int(genus_token.text)
            line.finish()
            continue

        if head.text in (CurveKind.LOWER.value, CurveKind.UPPER.value):
            curve_id: _Token = line.identifier("curve id")
            line.keyword("theta")
            theta: Fraction = line.rational("theta total")
            line.keyword("phi")
            phi: Fraction = line.rational("phi total")
            line.keyword("order")
            order: tuple[str, ...] = tuple(token.text for token in line.remaining())
            if curve_id.text in curves:
                raise KhdSyntaxError(
                    "Curve id declared more than once.", line=line_number, column=curve_id.column, expected="unused curve id"
                )
            curves[curve_id.text] = (CurveRecord(curve_id.text, CurveKind(head.text), order, theta, phi), line_number)

        elif head.text == "point":
            point_id: _Token = line.identifier("point id")
            line.keyword("on")
            lower: _Token = line.identifier("lower curve id")
            upper: _Token = line.identifier("upper curve id")
            values: list[Fraction] = []
            keyword: str
            for keyword in POINT_KEYWORDS:
                line.keyword(keyword)
                values.append(line.rational(keyword))
            line.finish()
            if point_id.text in points:
                raise DuplicatePointIdError(point=point_id.text, line=line_number)
            points[point_id.text] = (IntersectionPoint(point_id.text, lower.text, upper.text, *values), line_number)

        else:
            raise KhdSyntaxError(
                f"Unknown declaration {head.text!r}.", line=line_number, column=head.column, expected="lower, upper or point"
            )

    if genus is None:
        raise KhdSyntaxError("Diagram text is empty.", line=last_line + 1, column=1, expected="genus")

    point: IntersectionPoint
    for point, line_number in points.values():
        curve_ref: str
        for curve_ref in (point.lower_curve, point.upper_curve):
            if curve_ref not in curves:
                raise UnknownCurveRefError(point=point.id, curve=curve_ref, line=line_number)

    curve: CurveRecord
    for curve, line_number in curves.values():
        point_ref: str
        for point_ref in curve.ordered_points:
            if point_ref not in points:
                raise UnknownCurveRefError(curve=curve.id, point=point_ref, line=line_number)

    def sorted_curves(kind: CurveKind) -> tuple[CurveRecord, ...]:
        return tuple(sorted(
            (record for record, _ in curves.values() if record.kind is kind),
            key=lambda record: natural_key(record.id)
        ))

    return FramedHeegaardDiagram(
        genus,
        sorted_curves(CurveKind.LOWER),
        sorted_curves(CurveKind.UPPER),
        tuple(sorted((record for record, _ in points.values()), key=lambda record: natural_key(record.id))),
        name
    )


def serialize_khd(d: FramedHeegaardDiagram) -> str:
    """ Writes the canonical text: curves then points, each sorted by id. """

    lines: list[str] = [f"genus {d.genus}"]
    curve: CurveRecord
    for curve in sorted(d.lower_curves, key=lambda record: natural_key(record.id)) + sorted(d.upper_curves, key=lambda record: natural_key(record.id)):
        order: str = " ".join(curve.ordered_points)
        lines.append(
            f"{curve.kind.value} {curve.id} theta {curve.theta_total} "
            f"phi {curve.phi_total} order {order}".rstrip()
        )
    point: IntersectionPoint
    for point in sorted(d.points, key=lambda record: natural_key(record.id)):
        lines.append(
            f"point {point.id} on {point.lower_curve} {point.upper_curve} "
            f"theta_eta {point.theta_eta} theta_mu {point.theta_mu} "
            f"phi_eta {point.phi_eta} phi_mu {point.phi_mu}"
        )
    return "\n".join(lines) + "\n"
