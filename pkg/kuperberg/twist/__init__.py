from kuperberg.twist.cocycles import (
    Cocycle,
    TwistArtifacts,
    bicharacter_cocycle,
    component_bicharacter,
    idempotent_cocycle,
    inverse_twist,
    iterated_fn,
    same_coalgebra,
    twist_hopf,
    verify_cocycle
)
from kuperberg.twist.serialization import CocycleDocument, dump_cocycle, parse_cocycle
from kuperberg.twist.suites import prop22_suite
