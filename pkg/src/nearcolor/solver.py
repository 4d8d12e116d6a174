"""Exact minimization of bad edges for a fixed color budget.

Two independent engines realize the same contract.  ``enumerate_oracle``
scans every assignment and is the ground truth the test suite is built on;
``solve`` is a pruned branch-and-bound search that must agree with the
oracle exactly on the minimum, the count of optimal colorings, and the
lexicographically smallest witness.

``solve`` works in two phases.  The bound phase visits vertices in static
degree-descending order and prunes on the incumbent; the reconstruction
phase re-walks the tree in vertex-index order with the proven optimum as the
bound, so the first leaf reached is the lexicographically smallest witness
and (when counting) every optimum is visited exactly once.  Results are
deterministic and independent of the ``workers`` hint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .coloring import Coloring, RuleMode, bad_edges
from .errors import InfeasibleError, InvalidParameterError, SizeLimitError
from .graph import DEFAULT_CHROMATIC_SIZE_LIMIT, Graph, chromatic_number

DEFAULT_ENUM_CAP = 10**8


@dataclass(frozen=True)
class SolverConfig:
    """Search knobs; defaults match the documented limits.

    ``workers`` is a scheduling hint only: the search itself runs
    sequentially, which makes determinism trivial to honor.
    """

    enum_cap: int = DEFAULT_ENUM_CAP
    count_optimal: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.enum_cap < 1:
            raise InvalidParameterError("enumeration cap must be positive")
        if self.workers < 1:
            raise InvalidParameterError("worker hint must be positive")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a bad-edge minimization.

    ``witness`` achieves ``min_bad`` and is the lexicographically smallest
    optimal assignment; ``optimal_count`` is present only when counting was
    requested.  ``exact`` is False only for heuristic results.
    """

    min_bad: int
    witness: Coloring
    rule: RuleMode
    surjective: bool
    optimal_count: int | None = None
    exact: bool = True


def _check_instance(g: Graph, k: int, surjective: bool) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"color count must be a positive integer, got {k!r}")
    if surjective and k > g.n:
        raise InfeasibleError(
            f"no surjective coloring exists: {k} colors onto {g.n} vertices"
        )


def enumerate_oracle(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
    *,
    cap: int = DEFAULT_ENUM_CAP,
) -> SolveResult:
    """Ground-truth result by full enumeration of all k**n assignments.

    Returns the exact minimum, the exact count of optimal colorings, and the
    lexicographically smallest witness.  Instances with k**n above ``cap``
    raise :class:`SizeLimitError`; enumeration never falls back to
    heuristics.
    """
    rule = RuleMode(rule)
    _check_instance(g, k, surjective)
    if k**g.n > cap:
        raise SizeLimitError(f"enumerating {k}**{g.n} assignments exceeds cap {cap}")
    edges = g.edges
    one_class = rule is RuleMode.ONE_CLASS
    best: int | None = None
    count = 0
    witness: tuple[int, ...] | None = None
    for assign in itertools.product(range(1, k + 1), repeat=g.n):
        if surjective and len(set(assign)) != k:
            continue
        bad = 0
        if best is None:
            for u, v in edges:
                if assign[u] == assign[v]:
                    bad += 1
        else:
            over = False
            for u, v in edges:
                if assign[u] == assign[v]:
                    bad += 1
                    if bad > best:
                        over = True
                        break
            if over:
                continue
        if one_class:
            touched = {assign[u] for u, v in edges if assign[u] == assign[v]}
            if len(touched) > 1:
                continue
        if best is None or bad < best:
            best, count, witness = bad, 1, assign
        elif bad == best:
            count += 1
    if witness is None or best is None:
        raise InfeasibleError("no valid coloring exists for this instance")
    return SolveResult(
        min_bad=best,
        witness=Coloring(witness, k),
        rule=rule,
        surjective=surjective,
        optimal_count=count,
    )


def _branch_and_bound_min(g: Graph, k: int, rule: RuleMode, surjective: bool) -> int:
    """Minimum bad-edge count by DFS over vertices in degree-descending order."""
    n = g.n
    one_class = rule is RuleMode.ONE_CLASS
    order = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))
    pos_of = [0] * n
    for i, v in enumerate(order):
        pos_of[v] = i
    earlier = [
        tuple(pos_of[u] for u in g.adj[v] if pos_of[u] < i)
        for i, v in enumerate(order)
    ]
    color_at = [0] * n
    usage = [0] * (k + 1)
    class_dirty = [False] * (k + 1)
    best = g.m + 1  # any valid coloring has at most m bad edges

    def dfs(i: int, bad: int, used: int, dirty_classes: int) -> None:
        nonlocal best
        if i == n:
            if (not surjective or used == k) and bad < best:
                best = bad
            return
        if surjective and k - used > n - i:
            return
        for c in range(1, k + 1):
            conflicts = 0
            for j in earlier[i]:
                if color_at[j] == c:
                    conflicts += 1
            nb = bad + conflicts
            if nb >= best:
                continue
            opened = False
            nd = dirty_classes
            if conflicts and not class_dirty[c]:
                if one_class and dirty_classes >= 1:
                    continue
                class_dirty[c] = True
                opened = True
                nd += 1
            color_at[i] = c
            usage[c] += 1
            dfs(i + 1, nb, used + (1 if usage[c] == 1 else 0), nd)
            usage[c] -= 1
            color_at[i] = 0
            if opened:
                class_dirty[c] = False

    dfs(0, 0, 0, 0)
    return best


def _iter_optimal_assignments(
    g: Graph, k: int, rule: RuleMode, surjective: bool, target: int
) -> Iterator[tuple[int, ...]]:
    """Yield every valid assignment with exactly ``target`` bad edges.

    DFS in vertex-index order with colors ascending, so assignments come out
    in lexicographic order.  Pruning only discards subtrees that provably
    contain no valid assignment at ``target``.
    """
    n = g.n
    one_class = rule is RuleMode.ONE_CLASS
    earlier = [tuple(u for u in g.adj[v] if u < v) for v in range(n)]
    colors = [0] * n
    usage = [0] * (k + 1)
    class_dirty = [False] * (k + 1)

    def dfs(v: int, bad: int, used: int, dirty_classes: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            if bad == target and (not surjective or used == k):
                yield tuple(colors)
            return
        if surjective and k - used > n - v:
            return
        for c in range(1, k + 1):
            conflicts = 0
            for u in earlier[v]:
                if colors[u] == c:
                    conflicts += 1
            nb = bad + conflicts
            if nb > target:
                continue
            opened = False
            nd = dirty_classes
            if conflicts and not class_dirty[c]:
                if one_class and dirty_classes >= 1:
                    continue
                class_dirty[c] = True
                opened = True
                nd += 1
            colors[v] = c
            usage[c] += 1
            yield from dfs(v + 1, nb, used + (1 if usage[c] == 1 else 0), nd)
            usage[c] -= 1
            colors[v] = 0
            if opened:
                class_dirty[c] = False

    yield from dfs(0, 0, 0, 0)


def solve(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
    config: SolverConfig | None = None,
) -> SolveResult:
    """Branch-and-bound minimization; agrees with :func:`enumerate_oracle` exactly.

    The configured cap bounds the search space size k**n; instances beyond it
    raise :class:`SizeLimitError` rather than degrading to a heuristic (use
    :func:`greedy_heuristic` explicitly for those).
    """
    rule = RuleMode(rule)
    cfg = config or SolverConfig()
    _check_instance(g, k, surjective)
    if k**g.n > cfg.enum_cap:
        raise SizeLimitError(
            f"search space of {k}**{g.n} assignments exceeds cap {cfg.enum_cap}"
        )
    best = _branch_and_bound_min(g, k, rule, surjective)
    it = _iter_optimal_assignments(g, k, rule, surjective, best)
    try:
        first = next(it)
    except StopIteration:  # pragma: no cover - the bound phase proves existence
        raise InfeasibleError("no valid coloring exists for this instance")
    count: int | None = None
    if cfg.count_optimal:
        count = 1 + sum(1 for _ in it)
    return SolveResult(
        min_bad=best,
        witness=Coloring(first, k),
        rule=rule,
        surjective=surjective,
        optimal_count=count,
    )


def count_optimal(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
) -> int:
    """Number of distinct labeled valid colorings achieving the minimum."""
    result = solve(g, k, rule, surjective, SolverConfig(count_optimal=True))
    assert result.optimal_count is not None
    return result.optimal_count


def optimal_colorings(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
) -> Iterator[Coloring]:
    """All optimal colorings in lexicographic assignment order."""
    rule = RuleMode(rule)
    _check_instance(g, k, surjective)
    best = _branch_and_bound_min(g, k, rule, surjective)
    for assign in _iter_optimal_assignments(g, k, rule, surjective, best):
        yield Coloring(assign, k)


@dataclass(frozen=True)
class MinUsage:
    """Smallest per-color usage over all optimal colorings, with an attaining pair."""

    value: int
    color: int
    witness: Coloring


def minimum_color_usage(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
) -> MinUsage:
    """Minimum, over optimal colorings and colors, of a color's usage count.

    Deterministic: colorings are scanned in lexicographic order and ties go
    to the smallest color, so the returned witness is the first attaining
    pair.  With surjectivity off the minimum may be 0 (an unused color).
    """
    rule = RuleMode(rule)
    _check_instance(g, k, surjective)
    best_value: int | None = None
    best_color = 0
    best_witness: tuple[int, ...] | None = None
    target = _branch_and_bound_min(g, k, rule, surjective)
    for assign in _iter_optimal_assignments(g, k, rule, surjective, target):
        counts = [0] * (k + 1)
        for c in assign:
            counts[c] += 1
        value = min(counts[1:])
        if best_value is None or value < best_value:
            best_value = value
            best_color = counts.index(value, 1)
            best_witness = assign
            if best_value == 0:
                break
    if best_witness is None or best_value is None:  # pragma: no cover
        raise InfeasibleError("no valid coloring exists for this instance")
    return MinUsage(best_value, best_color, Coloring(best_witness, k))


def bad_edge_vertex_cover(g: Graph, coloring: Coloring) -> tuple[int, ...]:
    """Minimum vertex cover of the bad-edge subgraph, exactly.

    Searches subsets in order of size and then lexicographically, so ties
    break to the lexicographically smallest vertex set.  The bad-edge
    subgraph is small whenever the coloring is near optimal, which keeps the
    subset search cheap.
    """
    bad = bad_edges(g, coloring).edges
    if not bad:
        return ()
    verts = sorted({x for e in bad for x in e})
    for size in range(1, len(verts) + 1):
        for subset in itertools.combinations(verts, size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in bad):
                return subset
    return tuple(verts)  # pragma: no cover - all endpoints always cover


@dataclass(frozen=True)
class KChromaticSubgraph:
    """Induced subgraph left after deleting a minimum cover of witness bad edges."""

    subgraph: Graph
    kept_vertices: tuple[int, ...]
    removed: tuple[int, ...]
    chromatic: int
    min_bad: int
    witness: Coloring


def k_chromatic_subgraph(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    *,
    chromatic_size_limit: int | None = DEFAULT_CHROMATIC_SIZE_LIMIT,
) -> KChromaticSubgraph:
    """Large induced subgraph whose chromatic number is at most k.

    Minimizes bad edges with k colors, removes a minimum vertex cover of the
    witness's bad edges, and reports the induced subgraph with its exact
    chromatic number.  The construction guarantees chromatic <= k; the
    reported value records whether equality was achieved on this instance.
    Maximality over all k-chromatic subgraphs is not claimed.
    """
    rule = RuleMode(rule)
    chi = chromatic_number(g, size_limit=chromatic_size_limit)
    if not 1 <= k < chi:
        raise InvalidParameterError(
            f"k must satisfy 1 <= k < chromatic number ({chi}), got {k}"
        )
    result = solve(g, k, rule, True)
    cover = bad_edge_vertex_cover(g, result.witness)
    removed = set(cover)
    sub, kept = g.induced_subgraph(v for v in range(g.n) if v not in removed)
    chi_sub = chromatic_number(sub, size_limit=chromatic_size_limit)
    return KChromaticSubgraph(
        subgraph=sub,
        kept_vertices=kept,
        removed=cover,
        chromatic=chi_sub,
        min_bad=result.min_bad,
        witness=result.witness,
    )


def greedy_heuristic(
    g: Graph,
    k: int,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
    max_rounds: int = 20,
) -> SolveResult:
    """Greedy construction plus local search; NOT exact.

    Intended for graphs beyond exact-search limits.  The returned coloring
    is valid under ``rule`` but its bad-edge count is only an upper bound,
    flagged by ``exact=False``.  Never used as a test oracle.
    """
    rule = RuleMode(rule)
    _check_instance(g, k, surjective)
    n = g.n
    one_class = rule is RuleMode.ONE_CLASS
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    colors = [0] * n
    dirty = 0  # the one class allowed to contain adjacencies; 0 = none yet

    for v in order:
        conflicts = [0] * (k + 1)
        for u in g.adj[v]:
            if colors[u]:
                conflicts[colors[u]] += 1
        choice = 0
        for c in range(1, k + 1):
            if conflicts[c] == 0:
                choice = c
                break
        if choice == 0:
            if one_class:
                if dirty == 0:
                    dirty = min(range(1, k + 1), key=lambda c: (conflicts[c], c))
                choice = dirty
            else:
                choice = min(range(1, k + 1), key=lambda c: (conflicts[c], c))
            if dirty == 0:
                dirty = choice
        colors[v] = choice

    def total_bad() -> int:
        return sum(1 for u, v in g.edges if colors[u] == colors[v])

    def dirty_count() -> int:
        return len({colors[u] for u, v in g.edges if colors[u] == colors[v]})

    if surjective:
        # Recoloring a vertex from a class of size >= 2 to a fresh color can
        # never break validity, so repair picks the cheapest such vertex.
        for c in range(1, k + 1):
            if c in colors:
                continue
            sizes = [0] * (k + 1)
            for col in colors:
                sizes[col] += 1
            best_pick: tuple[int, int] | None = None
            for v in range(n):
                if sizes[colors[v]] < 2:
                    continue
                old = colors[v]
                colors[v] = c
                candidate = (total_bad(), v)
                colors[v] = old
                if best_pick is None or candidate < best_pick:
                    best_pick = candidate
            assert best_pick is not None
            colors[best_pick[1]] = c

    current = total_bad()
    for _ in range(max_rounds):
        improved = False
        sizes = [0] * (k + 1)
        for col in colors:
            sizes[col] += 1
        for v in range(n):
            old = colors[v]
            if surjective and sizes[old] == 1:
                continue
            for c in range(1, k + 1):
                if c == old:
                    continue
                colors[v] = c
                if (not one_class or dirty_count() <= 1) and total_bad() < current:
                    current = total_bad()
                    sizes[old] -= 1
                    sizes[c] += 1
                    improved = True
                    break
                colors[v] = old
        if not improved:
            break

    return SolveResult(
        min_bad=current,
        witness=Coloring(tuple(colors), k),
        rule=rule,
        surjective=surjective,
        optimal_count=None,
        exact=False,
    )
