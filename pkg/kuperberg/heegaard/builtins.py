"""
    Diagrams shipped with the app, stored as `.khd` files next to this module.
"""

import functools
from pathlib import Path
from typing import Final

from kuperberg.exceptions import UnknownDiagramError
from kuperberg.heegaard.diagrams import FramedHeegaardDiagram
from kuperberg.heegaard.parser import parse_khd

DATA_DIRECTORY: Final[Path] = Path(__file__).resolve().parent / "data"
BUILTIN_NAMES: Final[tuple[str, ...]] = ("weeks", "torus3", "sphere3", "s1xs2")


def builtin_path(name: str) -> Path:
    if name not in BUILTIN_NAMES:
        raise UnknownDiagramError(name=name, known=BUILTIN_NAMES)
    return DATA_DIRECTORY / f"{name}.khd"


@functools.cache
def builtin(name: str) -> FramedHeegaardDiagram:
    return parse_khd(builtin_path(name).read_text(encoding="utf-8"), name=name)
