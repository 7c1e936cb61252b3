"""Degree-sequence completion with pluggable tuple properties.

A property supplies a membership test on nonincreasing degree tuples and
optionally a solver for its numeric completion problem (given degrees, an
exact total increase, and a max-degree cap, produce increments). The
framework contributes the block-set search space, the bounded exhaustive
solver, and the large-solution branch realized through complement factors.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from collections.abc import Callable, Sequence

from .errors import InternalInvariantError, InvalidInputError, ResourceLimitError
from .graph import Edge, Graph
from .winwin import realize_demands

DEFAULT_CORE_CAP = 64
DEFAULT_ENUM_LIMIT = 1_000_000

Fulfills = Callable[[tuple[int, ...]], bool]
NscSolver = Callable[[Sequence[int], int, int], "list[int] | None"]


@dataclass(frozen=True)
class PiProperty:
    """Properties compare by name; the callables are construction details."""

    name: str
    fulfills: Fulfills = field(compare=False)
    nsc_solver: NscSolver | None = field(compare=False, default=None)


@dataclass(frozen=True)
class DscInstance:
    graph: Graph
    k: int
    prop: PiProperty
    delta_prime: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise InvalidInputError("budget k must be nonnegative")
        if self.delta_prime is not None and self.delta_prime < self.graph.max_degree():
            raise InvalidInputError("delta_prime below the current maximum degree")


@dataclass(frozen=True)
class LargeYes:
    edges: frozenset[Edge]


@dataclass(frozen=True)
class Clamp:
    k_new: int


# -- blocks ------------------------------------------------------------------


def block(g: Graph, d: int) -> set[int]:
    """All vertices of degree exactly d."""
    if d < 0:
        raise InvalidInputError("degree must be nonnegative")
    return {v for v in range(g.vertex_count) if g.degree(v) == d}


def block_set(g: Graph, k: int) -> set[int]:
    """Up to alpha = (max_degree + 2) * k lowest-index vertices per degree
    block, degree 0 included."""
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    alpha = (g.max_degree() + 2) * k
    taken: Counter[int] = Counter()
    chosen: set[int] = set()
    for v in range(g.vertex_count):
        d = g.degree(v)
        if taken[d] < alpha:
            taken[d] += 1
            chosen.add(v)
    return chosen


# -- the FPT search -----------------------------------------------------------


def completed_sequence(degrees: Sequence[int], additions: Sequence[Edge]) -> tuple[int, ...]:
    d = list(degrees)
    for u, v in additions:
        d[u] += 1
        d[v] += 1
    return tuple(sorted(d, reverse=True))


def dsc_fpt_solve(
    inst: DscInstance,
    *,
    delta_cap: int | None = None,
    core_cap: int = DEFAULT_CORE_CAP,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> set[Edge] | None:
    """Enumerate edge sets inside a block-set by increasing size.

    Any solution can be rerouted into the block-set, so the restricted
    search is complete. Candidate sets pushing a degree above delta_cap are
    discarded when a cap is given.
    """
    g = inst.graph
    core = sorted(block_set(g, inst.k))
    if len(core) > core_cap:
        raise ResourceLimitError(
            f"block-set has {len(core)} vertices, above the cap {core_cap}"
        )
    pairs = [
        (u, v) for i, u in enumerate(core) for v in core[i + 1:] if not g.has_edge(u, v)
    ]
    degrees = g.degrees()
    seen = 0
    for size in range(inst.k + 1):
        for combo in itertools.combinations(pairs, size):
            seen += 1
            if seen > enum_limit:
                raise ResourceLimitError(
                    f"candidate enumeration exceeded {enum_limit} edge sets"
                )
            final = completed_sequence(degrees, combo)
            if delta_cap is not None and final and final[0] > delta_cap:
                continue
            if inst.prop.fulfills(final):
                return set(combo)
    return None


# -- numeric completion --------------------------------------------------------


def _validate_increments(
    prop: PiProperty, degrees: Sequence[int], x: Sequence[int], target: int, delta: int
) -> None:
    if len(x) != len(degrees) or any(v < 0 for v in x):
        raise InternalInvariantError(f"{prop.name}: malformed increment vector")
    if sum(x) != target:
        raise InternalInvariantError(f"{prop.name}: increments sum to {sum(x)} != {target}")
    final = [d + v for d, v in zip(degrees, x)]
    if any(f > delta for f in final):
        raise InternalInvariantError(f"{prop.name}: a completed degree exceeds {delta}")
    if not prop.fulfills(tuple(sorted(final, reverse=True))):
        raise InternalInvariantError(f"{prop.name}: completed tuple does not fulfill")


def _generic_nsc(
    fulfills: Fulfills,
    degrees: Sequence[int],
    target: int,
    delta: int,
    enum_limit: int,
) -> list[int] | None:
    """Bounded enumeration over increment vectors, lexicographically."""
    n = len(degrees)
    acc = [0] * n
    seen = 0

    def rec(i: int, left: int) -> bool:
        nonlocal seen
        if i == n:
            seen += 1
            if seen > enum_limit:
                raise ResourceLimitError(
                    f"generic numeric completion exceeded {enum_limit} vectors"
                )
            if left != 0:
                return False
            final = tuple(sorted((d + v for d, v in zip(degrees, acc)), reverse=True))
            return fulfills(final)
        for v in range(0, min(delta - degrees[i], left) + 1):
            acc[i] = v
            if rec(i + 1, left - v):
                return True
        acc[i] = 0
        return False

    return list(acc) if rec(0, target) else None


def pi_nsc_decide(
    prop: PiProperty,
    degrees: Sequence[int],
    target: int,
    delta: int,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> list[int] | None:
    """Increments meeting total, cap, and property, or None.

    Dispatches to the property's own solver when it ships one; otherwise
    falls back to guarded enumeration. Witnesses are re-validated either
    way.
    """
    if target < 0 or delta < 0:
        return None
    if prop.nsc_solver is not None:
        x = prop.nsc_solver(degrees, target, delta)
    else:
        x = _generic_nsc(prop.fulfills, degrees, target, delta, enum_limit)
    if x is None:
        return None
    _validate_increments(prop, degrees, x, target, delta)
    return list(x)


# -- bounding the budget by the target maximum degree ---------------------------


def bound_threshold(delta_prime: int) -> int:
    return delta_prime * (delta_prime + 1) ** 2


def dsc_bound_k(inst: DscInstance, enum_limit: int = DEFAULT_ENUM_LIMIT) -> LargeYes | Clamp:
    """Scan totals 2k' from the threshold up; realize the first numeric yes.

    When every k' fails, budgets above the threshold are useless and the
    instance clamps down to it.
    """
    if inst.delta_prime is None:
        raise InvalidInputError("dsc_bound_k needs a delta_prime budget")
    threshold = bound_threshold(inst.delta_prime)
    if inst.k <= threshold:
        raise InvalidInputError(f"budget {inst.k} not above the threshold {threshold}")
    g = inst.graph
    degrees = g.degrees()
    max_rise = sum(inst.delta_prime - d for d in degrees)
    upper = min(inst.k, max_rise // 2)
    for k_prime in range(threshold, upper + 1):
        x = pi_nsc_decide(inst.prop, degrees, 2 * k_prime, inst.delta_prime, enum_limit)
        if x is None:
            continue
        edges = realize_demands(g, x)
        if edges is None:
            raise InternalInvariantError(
                f"realization failed at k'={k_prime} despite the degree-bound guarantee"
            )
        return LargeYes(frozenset(edges))
    return Clamp(threshold)


def dsc_solve(
    inst: DscInstance,
    *,
    core_cap: int = DEFAULT_CORE_CAP,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> set[Edge] | None:
    """Full pipeline: large-solution branch, clamp, then the FPT search."""
    if inst.delta_prime is None:
        raise InvalidInputError("dsc_solve needs a delta_prime budget")
    work_k = inst.k
    if inst.k > bound_threshold(inst.delta_prime):
        outcome = dsc_bound_k(inst, enum_limit)
        if isinstance(outcome, LargeYes):
            return set(outcome.edges)
        work_k = outcome.k_new
    work = DscInstance(inst.graph, work_k, inst.prop, inst.delta_prime)
    return dsc_fpt_solve(
        work, delta_cap=inst.delta_prime, core_cap=core_cap, enum_limit=enum_limit
    )


# -- built-in properties ---------------------------------------------------------


def regular_property() -> PiProperty:
    """All degrees equal; ships a scan over the common target degree."""

    def fulfills(t: tuple[int, ...]) -> bool:
        return len(set(t)) <= 1

    def nsc(degrees: Sequence[int], target: int, delta: int) -> list[int] | None:
        n = len(degrees)
        if n == 0:
            return [] if target == 0 else None
        total = sum(degrees)
        for c in range(max(degrees), delta + 1):
            if n * c - total == target:
                return [c - d for d in degrees]
        return None

    return PiProperty("regular", fulfills, nsc)


def h_index_property(ell: int) -> PiProperty:
    """At least ell entries of value at least ell; generic numeric fallback."""
    if ell < 0:
        raise InvalidInputError("h-index bound must be nonnegative")

    def fulfills(t: tuple[int, ...]) -> bool:
        return sum(1 for d in t if d >= ell) >= ell

    return PiProperty(f"hindex-{ell}", fulfills)


def balanced_property(ell: int) -> PiProperty:
    """Every occurring degree occurs exactly ell times; generic fallback."""
    if ell < 1:
        raise InvalidInputError("balancedness multiplicity must be positive")

    def fulfills(t: tuple[int, ...]) -> bool:
        return all(c == ell for c in Counter(t).values())

    return PiProperty(f"balanced-{ell}", fulfills)


def anonymity_fulfills(t: Sequence[int], k_anon: int) -> bool:
    """Every occurring degree occurs at least k_anon times."""
    if k_anon < 1:
        raise InvalidInputError("anonymity level must be positive")
    return all(c >= k_anon for c in Counter(t).values())


def anonymity_nsc(
    degrees: Sequence[int], k_anon: int, target: int, delta: int
) -> list[int] | None:
    """Polynomial assignment of target degrees along the sorted sequence.

    Targets may be assumed nonincreasing along the nonincreasingly sorted
    input (a swap argument reorders any witness), so the search groups
    consecutive runs of at least k_anon positions onto a shared target.
    """
    if k_anon < 1:
        raise InvalidInputError("anonymity level must be positive")
    n = len(degrees)
    if n == 0:
        return [] if target == 0 else None
    if target < 0 or k_anon > n:
        return None
    order = sorted(range(n), key=lambda i: degrees[i], reverse=True)
    d = [degrees[i] for i in order]
    prefix = [0]
    for value in d:
        prefix.append(prefix[-1] + value)

    @lru_cache(maxsize=None)
    def feasible(i: int, left: int, cap: int) -> bool:
        if i == n:
            return left == 0
        if cap < d[i]:
            return False
        for j in range(i + k_anon, n + 1):
            if 0 < n - j < k_anon:
                continue
            size = j - i
            base = prefix[j] - prefix[i]
            for t in range(d[i], cap + 1):
                cost = size * t - base
                if cost > left:
                    break
                if feasible(j, left - cost, t):
                    return True
        return False

    if not feasible(0, target, delta):
        feasible.cache_clear()
        return None

    x_sorted = [0] * n
    i, left, cap = 0, target, delta
    while i < n:
        advanced = False
        for j in range(i + k_anon, n + 1):
            if 0 < n - j < k_anon:
                continue
            size = j - i
            base = prefix[j] - prefix[i]
            for t in range(d[i], cap + 1):
                cost = size * t - base
                if cost > left:
                    break
                if feasible(j, left - cost, t):
                    for pos in range(i, j):
                        x_sorted[pos] = t - d[pos]
                    i, left, cap = j, left - cost, t
                    advanced = True
                    break
            if advanced:
                break
        if not advanced:
            raise InternalInvariantError("anonymity table disagrees with traceback")
    feasible.cache_clear()

    result = [0] * n
    for pos, original in enumerate(order):
        result[original] = x_sorted[pos]
    final = [degrees[i] + result[i] for i in range(n)]
    if (
        sum(result) != target
        or any(v < 0 for v in result)
        or any(f > delta for f in final)
        or not anonymity_fulfills(final, k_anon)
    ):
        raise InternalInvariantError("anonymity witness failed re-validation")
    return result


def anonymity_property(k_anon: int) -> PiProperty:
    if k_anon < 1:
        raise InvalidInputError("anonymity level must be positive")

    def fulfills(t: tuple[int, ...]) -> bool:
        return anonymity_fulfills(t, k_anon)

    def nsc(degrees: Sequence[int], target: int, delta: int) -> list[int] | None:
        return anonymity_nsc(degrees, k_anon, target, delta)

    return PiProperty(f"anon-{k_anon}", fulfills, nsc)


def anonymize(g: Graph, k_anon: int, budget: int) -> set[Edge] | None:
    """Edge additions (at most budget many) making the graph k_anon-anonymous."""
    if k_anon < 1:
        raise InvalidInputError("anonymity level must be positive")
    if budget < 0:
        raise InvalidInputError("budget must be nonnegative")
    inst = DscInstance(g, budget, anonymity_property(k_anon), g.max_degree() + budget)
    return dsc_solve(inst)
