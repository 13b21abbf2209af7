"""
    Brute-force counts of group homomorphisms from diagram presentations,
    used to cross-check the invariant on group algebras.
"""

import itertools
import logging
from typing import Final

from kuperberg.conf import setting
from kuperberg.exceptions import BudgetExceededError
from kuperberg.evaluator.invariants import evaluate
from kuperberg.heegaard.builtins import builtin
from kuperberg.heegaard.diagrams import FramedHeegaardDiagram, GroupPresentation, fundamental_group_presentation
from kuperberg.hopf.algebra import HopfAlgebra
from kuperberg.hopf.catalog import GroupTable, group_algebra
from kuperberg.hopf.integrals import compute_integrals
from kuperberg.scalars import FieldDescriptor, Scalar

MAX_GROUP_ORDER: Final[int] = 24

Letter = tuple[str, int]


def free_abelian_presentation(rank: int) -> GroupPresentation:
    """ ℤ^rank: one commutator relator per pair of generators. """

    generators: tuple[str, ...] = tuple(f"a{index}" for index in range(1, rank + 1))
    relators: tuple[tuple[Letter, ...], ...] = tuple(
        ((first, 1), (second, 1), (first, -1), (second, -1))
        for first, second in itertools.combinations(generators, 2)
    )
    return GroupPresentation(generators, relators)


def _word_value(G: GroupTable, word: tuple[Letter, ...], assignment: dict[str, int]) -> int:
    value: int = G.identity
    generator: str
    exponent: int
    for generator, exponent in word:
        value = G.product(value, G.power(assignment[generator], exponent))
    return value


def hom_count(presentation: GroupPresentation, G: GroupTable, budget: int | None = None) -> int:
    """
        Number of assignments of the generators to elements of G that make
        every relator trivial. With no generators there is exactly one.
    """

    budget = int(setting("KUPERBERG_NAIVE_BUDGET")) if budget is None else budget
    assignments: int = G.order ** len(presentation.generators)
    if G.order > MAX_GROUP_ORDER or assignments > budget:
        logging.warning(f"Refusing to count homomorphisms into {G.name}: {assignments} assignments")
        raise BudgetExceededError(group=G.name, assignments=assignments, budget=budget)

    count: int = 0
    images: tuple[int, ...]
    for images in itertools.product(range(G.order), repeat=len(presentation.generators)):
        assignment: dict[str, int] = dict(zip(presentation.generators, images))
        if all(_word_value(G, relator, assignment) == G.identity for relator in presentation.relators):
            count += 1

    logging.debug(f"|Hom({presentation}, {G.name})| = {count}")
    return count


def group_algebra_invariant(d: FramedHeegaardDiagram, G: GroupTable) -> int:
    return hom_count(fundamental_group_presentation(d), G)


def commuting_triples(G: GroupTable) -> int:
    count: int = 0
    a: int
    b: int
    c: int
    for a, b in itertools.product(range(G.order), repeat=2):
        if G.product(a, b) != G.product(b, a):
            continue
        for c in range(G.order):
            if G.product(a, c) == G.product(c, a) and G.product(b, c) == G.product(c, b):
                count += 1
    return count


def invariant_ratio(G: GroupTable, field: FieldDescriptor | None = None) -> Scalar:
    """ Z(T³, k[G]) divided by the number of commuting triples of G. """

    H: HopfAlgebra = group_algebra(G, field)
    value: Scalar = evaluate(H, compute_integrals(H), builtin("torus3")).value
    ratio: Scalar = value / commuting_triples(G)
    logging.info(f"Z(torus3, {H.name}) / #commuting triples of {G.name} = {ratio}")
    return ratio
