"""
    `.cocycle` documents: a `twists: <target>` header naming the `.hopf`
    file (or catalog algebra) being twisted, then one "i j coeff" line per
    nonzero entry of F. Lines starting with "#" are comments.
"""

from dataclasses import dataclass

from kuperberg.exceptions import HopfFormatError, KuperbergError
from kuperberg.hopf.algebra import HopfAlgebra, TensorElement
from kuperberg.scalars import Scalar, parse_scalar

HEADER_KEY: str = "twists"


@dataclass(frozen=True)
class CocycleDocument:
    target: str
    entries: tuple[tuple[int, int, str, int], ...]

    def tensor(self, H: HopfAlgebra) -> TensorElement:
        """ Builds F on H, with scalars read in H's field. """

        terms: dict[tuple[int, ...], Scalar] = {}
        i: int
        j: int
        coefficient_text: str
        line_number: int
        for i, j, coefficient_text, line_number in self.entries:
            if not (0 <= i < H.dim and 0 <= j < H.dim):
                raise HopfFormatError("Cocycle entry refers to a missing basis element.", line=line_number, dim=H.dim)
            try:
                value: Scalar = parse_scalar(coefficient_text, H.field)
            except KuperbergError as scalar_error:
                raise HopfFormatError("Unreadable cocycle coefficient.", line=line_number) from scalar_error
            if (i, j) in terms:
                raise HopfFormatError("Cocycle entry is repeated.", line=line_number)
            if not value.is_zero():
                terms[(i, j)] = value
        return TensorElement(H, 2, terms)


def parse_cocycle(text: str) -> CocycleDocument:
    target: str | None = None
    entries: list[tuple[int, int, str, int]] = []

    line_number: int
    raw_line: str
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line: str = raw_line.strip()
        if not line or line.startswith("#"):
            continue

        if target is None:
            key: str
            separator: str
            value: str
            key, separator, value = line.partition(":")
            if key.strip() != HEADER_KEY or not separator or not value.strip():
                raise HopfFormatError(f"Cocycle documents start with a `{HEADER_KEY}: <target>` header.", line=line_number)
            target = value.strip()
            continue

        parts: list[str] = line.split(maxsplit=2)
        if len(parts) != 3:
            raise HopfFormatError("Cocycle lines have the form `i j coeff`.", line=line_number)
        try:
            entries.append((int(parts[0]), int(parts[1]), parts[2], line_number))
        except ValueError as index_error:
            raise HopfFormatError("Cocycle indices must be integers.", line=line_number) from index_error

    if target is None:
        raise HopfFormatError("Cocycle document is empty.")
    return CocycleDocument(target, tuple(entries))


def dump_cocycle(F: TensorElement, target: str) -> str:
    lines: list[str] = [f"{HEADER_KEY}: {target}"]
    key: tuple[int, ...]
    value: Scalar
    for key, value in sorted(F.items()):
        lines.append(f"{key[0]} {key[1]} {value}")
    return "\n".join(lines) + "\n"
