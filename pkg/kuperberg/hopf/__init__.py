from kuperberg.hopf.algebra import (
    AlgebraElement,
    AxiomCheck,
    AxiomReport,
    HopfAlgebra,
    TensorElement,
    antipode_power,
    check_hopf_axioms,
    iterated_coproduct
)
from kuperberg.hopf.catalog import (
    GroupTable,
    catalog,
    catalog_names,
    dual_group_algebra,
    group_algebra,
    named_group,
    sweedler_h4,
    taft_algebra
)
from kuperberg.hopf.integrals import (
    HALFINT_ANTIPODE_INVERSE,
    HALFINT_CONVENTIONS,
    HALFINT_G_ACTION,
    Covector,
    IntegralPair,
    compute_integrals,
    convolution_power,
    pair,
    tmap,
    twisted_cointegral,
    twisted_integral
)
from kuperberg.hopf.serialization import dump_hopf, parse_hopf
from kuperberg.hopf.suites import IdentityReport, trace_identity_suite
