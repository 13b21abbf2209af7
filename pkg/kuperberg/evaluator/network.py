"""
    Exact sparse tensor networks & their contraction.

    A network is a list of sparse tensors over named index variables. Every
    variable ranges over the basis of one Hopf algebra & is shared by exactly
    two tensors, so contracting the whole network leaves a single scalar: the
    sum over all assignments of the product of the entries.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Final, Iterable, Mapping, Sequence

from kuperberg.conf import setting
from kuperberg.exceptions import BudgetExceededError, PlanFailureError
from kuperberg.scalars import FieldDescriptor, Scalar

Key = tuple[int, ...]

SCALAR_KEY: Final[Key] = ()


@dataclass(frozen=True)
class SparseTensor:
    """ Tensor over named variables, storing only nonzero entries. """

    variables: tuple[str, ...]
    entries: Mapping[Key, Scalar]
    label: str = ""

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def rank(self) -> int:
        return len(self.variables)

    def scalar_value(self, field: FieldDescriptor) -> Scalar:
        if self.variables:
            raise PlanFailureError("Only rank-0 tensors have a scalar value.", tensor=self.label, variables=self.variables)
        return self.entries.get(SCALAR_KEY, field.zero())

    def __str__(self) -> str:
        return f"{self.label or 'tensor'}({', '.join(self.variables)}) [{self.size} terms]"


def scalar_tensor(value: Scalar, label: str = "") -> SparseTensor:
    return SparseTensor((), {} if value.is_zero() else {SCALAR_KEY: value}, label)


@dataclass(frozen=True)
class _JoinLayout:
    shared: tuple[str, ...]
    variables: tuple[str, ...]
    left_shared: tuple[int, ...]
    right_shared: tuple[int, ...]
    left_kept: tuple[int, ...]
    right_kept: tuple[int, ...]


def _layout(left_variables: Sequence[str], right_variables: Sequence[str]) -> _JoinLayout:
    shared: tuple[str, ...] = tuple(variable for variable in left_variables if variable in right_variables)
    left_kept: tuple[int, ...] = tuple(i for i, variable in enumerate(left_variables) if variable not in shared)
    right_kept: tuple[int, ...] = tuple(i for i, variable in enumerate(right_variables) if variable not in shared)
    return _JoinLayout(
        shared,
        tuple(left_variables[i] for i in left_kept) + tuple(right_variables[i] for i in right_kept),
        tuple(left_variables.index(variable) for variable in shared),
        tuple(right_variables.index(variable) for variable in shared),
        left_kept,
        right_kept
    )


def _project(key: Key, positions: tuple[int, ...]) -> Key:
    return tuple(key[position] for position in positions)


def contract_pair(left: SparseTensor, right: SparseTensor, label: str = "") -> tuple[SparseTensor, int]:
    """
        Contracts two tensors, summing over every variable they share.
        Returns the result & the number of products formed.
    """

    layout: _JoinLayout = _layout(left.variables, right.variables)

    index: defaultdict[Key, list[tuple[Key, Scalar]]] = defaultdict(list)
    key: Key
    value: Scalar
    for key, value in right.entries.items():
        index[_project(key, layout.right_shared)].append((_project(key, layout.right_kept), value))

    result: dict[Key, Scalar] = {}
    products: int = 0
    for key, value in left.entries.items():
        matches: list[tuple[Key, Scalar]] | None = index.get(_project(key, layout.left_shared))
        if not matches:
            continue
        kept: Key = _project(key, layout.left_kept)
        right_kept: Key
        right_value: Scalar
        for right_kept, right_value in matches:
            products += 1
            combined: Key = kept + right_kept
            current: Scalar | None = result.get(combined)
            result[combined] = value * right_value if current is None else current + value * right_value

    return SparseTensor(layout.variables, {k: v for k, v in result.items() if not v.is_zero()}, label), products


def _joined_support(left_variables: Sequence[str], left: Iterable[Key], right_variables: Sequence[str], right: Iterable[Key]) -> tuple[tuple[str, ...], frozenset[Key]]:
    """ Support of the contraction of two tensors, ignoring cancellation. """

    layout: _JoinLayout = _layout(left_variables, right_variables)

    index: defaultdict[Key, set[Key]] = defaultdict(set)
    key: Key
    for key in right:
        index[_project(key, layout.right_shared)].add(_project(key, layout.right_kept))

    support: set[Key] = set()
    for key in left:
        matches: set[Key] | None = index.get(_project(key, layout.left_shared))
        if matches:
            kept: Key = _project(key, layout.left_kept)
            support.update(kept + right_kept for right_kept in matches)
    return layout.variables, frozenset(support)


@dataclass(frozen=True)
class JoinEstimate:
    """ Bounds on the support of a contraction, read off the shared-key groups. """

    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def estimate_join(left_variables: Sequence[str], left: Iterable[Key], right_variables: Sequence[str], right: Iterable[Key]) -> JoinEstimate:
    """
        Groups both supports by their shared coordinates. Each group yields
        |left group|·|right group| distinct keys, so the largest group is a
        lower bound & the sum over groups an upper bound on the support.
    """

    layout: _JoinLayout = _layout(left_variables, right_variables)

    def groups(keys: Iterable[Key], shared: tuple[int, ...], kept: tuple[int, ...]) -> defaultdict[Key, set[Key]]:
        grouped: defaultdict[Key, set[Key]] = defaultdict(set)
        key: Key
        for key in keys:
            grouped[_project(key, shared)].add(_project(key, kept))
        return grouped

    right_groups: defaultdict[Key, set[Key]] = groups(right, layout.right_shared, layout.right_kept)
    lower: int = 0
    upper: int = 0
    shared_key: Key
    kept_keys: set[Key]
    for shared_key, kept_keys in groups(left, layout.left_shared, layout.left_kept).items():
        matches: set[Key] | None = right_groups.get(shared_key)
        if matches:
            size: int = len(kept_keys) * len(matches)
            upper += size
            lower = max(lower, size)
    return JoinEstimate(lower, upper)


def validate_network(nodes: Sequence[SparseTensor]) -> None:
    owners: defaultdict[str, int] = defaultdict(int)
    node: SparseTensor
    for node in nodes:
        if len(set(node.variables)) != len(node.variables):
            raise PlanFailureError("A tensor repeats one of its variables.", tensor=node.label)
        variable: str
        for variable in node.variables:
            owners[variable] += 1
    dangling: list[str] = sorted(variable for variable, count in owners.items() if count != 2)
    if dangling:
        raise PlanFailureError("Every variable must be shared by exactly two tensors.", variables=dangling)


@dataclass(frozen=True)
class ContractionPlan:
    """
        A network plus the order in which to contract it. Node ids 0 … n-1 are
        the network's tensors; step k creates node n + k from the two ids it
        names.
    """

    nodes: tuple[SparseTensor, ...]
    steps: tuple[tuple[int, int], ...]
    cost_estimate: int
    field: FieldDescriptor

    def describe(self) -> str:
        lines: list[str] = [f"{len(self.nodes)} tensors, {len(self.steps)} steps, max intermediate ≤ {self.cost_estimate} terms"]
        step_number: int
        left: int
        right: int
        for step_number, (left, right) in enumerate(self.steps):
            lines.append(f"  #{len(self.nodes) + step_number} = #{left} · #{right}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ContractionStats:
    max_intermediate: int
    term_count: int


def default_budget() -> int:
    return int(setting("KUPERBERG_BUDGET"))


class _SupportState:
    """ Variables & supports of the live nodes while a plan is being built. """

    def __init__(self, nodes: Sequence[SparseTensor]) -> None:
        self.variables: dict[int, tuple[str, ...]] = {}
        self.supports: dict[int, frozenset[Key]] = {}
        self.owners: defaultdict[str, set[int]] = defaultdict(set)
        self.next_id: int = 0
        node: SparseTensor
        for node in nodes:
            self.add(node.variables, frozenset(node.entries.keys()))

    def add(self, variables: tuple[str, ...], support: frozenset[Key]) -> int:
        node_id: int = self.next_id
        self.next_id += 1
        self.variables[node_id] = variables
        self.supports[node_id] = support
        variable: str
        for variable in variables:
            self.owners[variable].add(node_id)
        return node_id

    def remove(self, node_id: int) -> None:
        variable: str
        for variable in self.variables.pop(node_id):
            self.owners[variable].discard(node_id)
        del self.supports[node_id]

    def join(self, left: int, right: int) -> tuple[tuple[str, ...], frozenset[Key]]:
        return _joined_support(self.variables[left], self.supports[left], self.variables[right], self.supports[right])

    def estimate(self, left: int, right: int) -> JoinEstimate:
        return estimate_join(self.variables[left], self.supports[left], self.variables[right], self.supports[right])

    def connected_pairs(self) -> set[tuple[int, int]]:
        pairs: set[tuple[int, int]] = set()
        node_ids: set[int]
        for node_ids in self.owners.values():
            if len(node_ids) == 2:
                left: int
                right: int
                left, right = sorted(node_ids)
                pairs.add((left, right))
        return pairs


def plan_network(
    nodes: Sequence[SparseTensor],
    field: FieldDescriptor,
    budget: int | None = None,
    order: Sequence[tuple[int, int]] | None = None
) -> ContractionPlan:
    """
        Chooses a contraction order. The greedy rule contracts, at each step,
        the connected pair whose result has the smallest support (ties go to
        the lowest node ids); rank-0 leftovers are multiplied at the end. A
        user supplied order is checked & costed instead.
    """

    budget = default_budget() if budget is None else budget
    validate_network(nodes)
    state: _SupportState = _SupportState(nodes)
    steps: list[tuple[int, int]] = []
    cost_estimate: int = max((node.size for node in nodes), default=1)

    def commit(left: int, right: int, variables: tuple[str, ...], support: frozenset[Key]) -> None:
        nonlocal cost_estimate
        if len(support) > budget:
            raise PlanFailureError(step=len(steps), predicted=len(support), budget=budget)
        state.remove(left)
        state.remove(right)
        state.add(variables, support)
        steps.append((left, right))
        cost_estimate = max(cost_estimate, len(support))

    if order is not None:
        left: int
        right: int
        for left, right in order:
            if left == right or left not in state.variables or right not in state.variables:
                raise PlanFailureError("Contraction order names a node that is not available.", step=len(steps), nodes=(left, right))
            commit(left, right, *state.join(left, right))
        if len(state.variables) != 1 or next(iter(state.variables.values())):
            raise PlanFailureError("Contraction order does not reduce the network to a scalar.", remaining=sorted(state.variables))
        return ContractionPlan(tuple(nodes), tuple(steps), cost_estimate, field)

    estimates: dict[tuple[int, int], JoinEstimate] = {}
    joined: dict[tuple[int, int], tuple[tuple[str, ...], frozenset[Key]]] = {}

    def support_size(candidate: tuple[int, int]) -> int:
        if estimates[candidate].exact:
            return estimates[candidate].upper
        if candidate not in joined:
            joined[candidate] = state.join(*candidate)
        return len(joined[candidate][1])

    while len(state.variables) > 1:
        pairs: set[tuple[int, int]] = state.connected_pairs()
        if not pairs:
            leftovers: list[int] = sorted(state.variables)
            if any(state.variables[node_id] for node_id in leftovers):
                raise PlanFailureError("Network has an open variable.", remaining=leftovers)
            commit(leftovers[0], leftovers[1], *state.join(leftovers[0], leftovers[1]))
            continue

        pair: tuple[int, int]
        for pair in pairs:
            if pair not in estimates:
                estimates[pair] = state.estimate(*pair)

        # supports are only materialized while a lower bound can still win
        ranked: list[tuple[int, int]] = sorted(pairs, key=lambda option: (estimates[option].lower, option))
        best: tuple[int, int] = ranked[0]
        best_size: int = support_size(best)
        candidate: tuple[int, int]
        for candidate in ranked[1:]:
            if (estimates[candidate].lower, candidate) > (best_size, best):
                break
            size: int = support_size(candidate)
            if (size, candidate) < (best_size, best):
                best, best_size = candidate, size

        variables: tuple[str, ...]
        support: frozenset[Key]
        variables, support = joined.pop(best) if best in joined else state.join(*best)
        commit(best[0], best[1], variables, support)
        estimates = {key: value for key, value in estimates.items() if not set(key) & set(best)}
        joined = {key: value for key, value in joined.items() if not set(key) & set(best)}

    logging.debug(f"Planned {len(steps)} contraction steps, max intermediate ≤ {cost_estimate} terms")
    return ContractionPlan(tuple(nodes), tuple(steps), cost_estimate, field)


def execute_plan(plan: ContractionPlan, budget: int | None = None) -> tuple[Scalar, ContractionStats]:
    budget = default_budget() if budget is None else budget
    live: dict[int, SparseTensor] = dict(enumerate(plan.nodes))
    next_id: int = len(plan.nodes)
    max_intermediate: int = max((node.size for node in plan.nodes), default=0)
    term_count: int = 0

    left: int
    right: int
    for left, right in plan.steps:
        result: SparseTensor
        products: int
        result, products = contract_pair(live.pop(left), live.pop(right), f"#{next_id}")
        if result.size > budget:
            raise BudgetExceededError(step=next_id, size=result.size, budget=budget)
        live[next_id] = result
        next_id += 1
        max_intermediate = max(max_intermediate, result.size)
        term_count += products

    if len(live) != 1:
        raise PlanFailureError("Plan leaves more than one tensor.", remaining=sorted(live))
    final: SparseTensor = next(iter(live.values()))
    return final.scalar_value(plan.field), ContractionStats(max_intermediate, term_count)
