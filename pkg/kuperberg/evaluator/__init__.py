from kuperberg.evaluator.expressions import (
    Constant,
    Leg,
    Mapped,
    Pairing,
    ScalarExpression,
    Source,
    compile_expression,
    evaluate_expression,
    expression_value
)
from kuperberg.evaluator.groups import (
    commuting_triples,
    free_abelian_presentation,
    group_algebra_invariant,
    hom_count,
    invariant_ratio
)
from kuperberg.evaluator.invariants import (
    GaugeVerdict,
    InvariantResult,
    diagram_expression,
    evaluate,
    evaluate_naive,
    framing_ratio,
    gauge_check,
    plan_contraction,
    torus_closed_form,
    weeks_closed_form
)
from kuperberg.evaluator.lemmas import LEMMA_ITEMS, DecomposableMap, lemma_suite, random_decomposable
from kuperberg.evaluator.network import ContractionPlan, ContractionStats, SparseTensor, contract_pair
