"""
    Executable checks of the 2-cocycle identities: F_{m+n} factorization,
    the u/u⁻¹ contraction formulas, Δ^n of u, u⁻¹ & Q and the integral
    formula for twisted coproducts.
"""

import functools
import random
from typing import Callable, Sequence

from kuperberg.hopf.algebra import AlgebraElement, HopfAlgebra, TensorElement, antipode_power, iterated_coproduct
from kuperberg.hopf.integrals import IntegralPair, pair
from kuperberg.hopf.suites import IdentityReport, default_trials, make_rng, random_element
from kuperberg.scalars import Scalar
from kuperberg.twist.cocycles import Cocycle, TwistArtifacts, iterated_fn, twist_elements, twisted_structure

MAX_ORDER: int = 6


def _antipode_map(H: HopfAlgebra, power: int = 1) -> Callable[[dict[int, Scalar]], dict[int, Scalar]]:
    return lambda vector: dict(antipode_power(H, power, AlgebraElement(H, vector)).coords)


def _on_all_legs(tensor: TensorElement, power: int = 1) -> TensorElement:
    return tensor.map_all(_antipode_map(tensor.algebra, power))


def _uniform(element: AlgebraElement, arity: int) -> TensorElement:
    return TensorElement.pure(*([element] * arity))


def _contract_with_coproduct_of_last_leg(tensor: TensorElement, apply_first: Callable[[AlgebraElement], AlgebraElement], before: bool) -> TensorElement:
    """
        For each term a₁⊗…⊗a_k of the tensor, returns Σ (a₁⊗…⊗a_{k-1})·Δ^{k-1}(φ(a_k))
        when `before` is set, or Δ^{k-1}(φ(a₁))·(a₂⊗…⊗a_k) otherwise.
    """

    H: HopfAlgebra = tensor.algebra
    arity: int = tensor.arity - 1
    expansions: dict[int, TensorElement] = {}
    result: TensorElement = TensorElement(H, arity, {})

    key: tuple[int, ...]
    value: Scalar
    for key, value in tensor.items():
        source: int = key[-1] if before else key[0]
        if source not in expansions:
            expansions[source] = iterated_coproduct(H, arity, apply_first(H.basis_element(source)))
        rest: TensorElement = TensorElement(H, arity, {key[:-1] if before else key[1:]: value})
        result = result + (rest * expansions[source] if before else expansions[source] * rest)
    return result


def _collapse_adjacent(tensor: TensorElement, position: int, middle: AlgebraElement, inverse_side: bool) -> TensorElement:
    """
        Replaces legs `position` & `position + 1` by S(a)·middle·b (or by
        a·middle·S(b) when inverse_side is set).
    """

    H: HopfAlgebra = tensor.algebra

    def combine(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if inverse_side:
            return a * middle * antipode_power(H, 1, b)
        return antipode_power(H, 1, a) * middle * b

    return tensor.merge_legs(position, combine)


def _with_unit(H: HopfAlgebra, tensor: TensorElement | None, position: int) -> TensorElement:
    if tensor is None:
        return TensorElement.one(H, 1)
    return tensor.insert_unit(position)


def _decomposable_map(H: HopfAlgebra, factors: Sequence[AlgebraElement], tensor: TensorElement) -> AlgebraElement:
    """ Applies Y(a₁, …, a_k) = y₀a₁y₁⋯a_ky_k (factors = y₀ … y_k) to a tensor. """

    result: AlgebraElement = H.zero()
    key: tuple[int, ...]
    value: Scalar
    for key, value in tensor.items():
        product: AlgebraElement = factors[0]
        leg: int
        index: int
        for leg, index in enumerate(key):
            product = product * H.basis_element(index) * factors[leg + 1]
        result = result + product.scale(value)
    return result


def prop22_suite(
    H: HopfAlgebra,
    P: IntegralPair,
    C: Cocycle,
    n_max: int = 4,
    trials: int | None = None,
    seed: int | None = None,
    strict: bool = False
) -> IdentityReport:
    """
        Checks the nine cocycle identities exactly for every tensor order up
        to n_max (F_m & F_n⁻¹ with m, n ≤ n_max; in item 1 m + n ≤ n_max).
        Item 9 is checked on `trials` random decomposable maps
        Y(a₁, …, a_{n-1}) = y₀a₁y₁⋯a_{n-1}y_{n-1}.
    """

    if not 2 <= n_max <= MAX_ORDER:
        raise ValueError(f"n_max must lie between 2 and {MAX_ORDER}.")

    trials = default_trials() if trials is None else trials
    rng: random.Random = make_rng(seed)
    report: IdentityReport = IdentityReport(f"cocycle identities of {H.name}", trials)

    artifacts: TwistArtifacts = twist_elements(C)
    u: AlgebraElement = artifacts.u
    uinv: AlgebraElement = artifacts.uinv
    H_F: HopfAlgebra = twisted_structure(H, C, artifacts)

    @functools.cache
    def fn(n: int) -> TensorElement:
        return iterated_fn(C, n)[0]

    @functools.cache
    def fn_inverse(n: int) -> TensorElement:
        return iterated_fn(C, n)[1]

    def lower(n: int) -> TensorElement | None:
        return fn(n) if n >= 1 else None

    def lower_inverse(n: int) -> TensorElement | None:
        return fn_inverse(n) if n >= 1 else None

    m: int
    n: int
    for m in range(1, n_max):
        for n in range(1, n_max - m + 1):
            factored: TensorElement = fn(m).tensor(fn(n)) * C.F.coproduct_on_leg(1, n).coproduct_on_leg(0, m)
            report.record("1", fn(m + n) == factored, f"m = {m}, n = {n}", strict)

    for m in range(2, n_max + 1):
        left: TensorElement = _contract_with_coproduct_of_last_leg(fn(m), lambda x: antipode_power(H, 1, x), before=True)
        right: TensorElement = _uniform(u, m - 1) * _on_all_legs(fn_inverse(m - 1)).reverse()
        report.record("2", left == right, f"m = {m}", strict)

        left = _contract_with_coproduct_of_last_leg(fn_inverse(m), lambda x: antipode_power(H, 1, x), before=False)
        right = _on_all_legs(fn(m - 1)).reverse() * _uniform(uinv, m - 1)
        report.record("3", left == right, f"m = {m}", strict)

    for n in range(2, n_max + 1):
        for m in range(1, n):
            expected: TensorElement = _with_unit(H, lower(n - 2), m - 1)
            report.record("4", _collapse_adjacent(fn(n), m - 1, uinv, False) == expected, f"n = {n}, m = {m}", strict)

            expected = _with_unit(H, lower_inverse(n - 2), m - 1)
            report.record("5", _collapse_adjacent(fn_inverse(n), m - 1, u, True) == expected, f"n = {n}, m = {m}", strict)

    for n in range(1, n_max + 1):
        report.record(
            "6",
            iterated_coproduct(H, n, u) == fn_inverse(n) * _uniform(u, n) * _on_all_legs(fn_inverse(n)).reverse(),
            f"n = {n}",
            strict
        )
        report.record(
            "7",
            iterated_coproduct(H, n, uinv) == _on_all_legs(fn(n)).reverse() * _uniform(uinv, n) * fn(n),
            f"n = {n}",
            strict
        )
        report.record(
            "8",
            iterated_coproduct(H, n, artifacts.Q) == fn_inverse(n) * _uniform(artifacts.Q, n) * _on_all_legs(fn(n), 2),
            f"n = {n}",
            strict
        )

    coproduct_of_integral: TensorElement = P.Lambda.coproduct()
    for n in range(2, n_max + 1):
        twisted_legs: TensorElement = fn(n) * iterated_coproduct(H, n, P.Lambda)
        interleaved: TensorElement = twisted_legs.insert_unit(0) * fn_inverse(n).insert_unit(n)

        _: int
        for _ in range(trials):
            factors: list[AlgebraElement] = [random_element(H, rng) for _ in range(n)]

            left_value: Scalar = H.field.zero()
            key: tuple[int, ...]
            value: Scalar
            for key, value in coproduct_of_integral.items():
                image: AlgebraElement = _decomposable_map(
                    H, factors, iterated_coproduct(H_F, n - 1, H_F.basis_element(key[0]))
                )
                twisted_antipode: AlgebraElement = u * antipode_power(H, 1, image) * uinv
                left_value = left_value + value * pair(P.lambda_, antipode_power(H, 1, H.basis_element(key[1])) * twisted_antipode)

            right_element: AlgebraElement = H.zero()
            for key, value in interleaved.items():
                inner: AlgebraElement = _decomposable_map(H, factors, TensorElement(H, n - 1, {key[1:n]: value}))
                right_element = right_element + H.basis_element(key[0]) * inner * H.basis_element(key[n])
            right_value: Scalar = pair(P.lambda_, antipode_power(H, 1, right_element))

            report.record("9", left_value == right_value, f"n = {n}: {left_value} != {right_value}", strict)

    report.log()
    return report
