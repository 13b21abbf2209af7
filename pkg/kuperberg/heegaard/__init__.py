from kuperberg.heegaard.builtins import BUILTIN_NAMES, builtin, builtin_path
from kuperberg.heegaard.diagrams import (
    CurveKind,
    CurveRecord,
    DiagramReport,
    FramedHeegaardDiagram,
    GroupPresentation,
    IntersectionPoint,
    fundamental_group_presentation,
    rotation_exponents,
    validate
)
from kuperberg.heegaard.parser import parse_khd, serialize_khd
