"""Immutable simple graphs, named family generators, and graph operations.

Vertices are dense integer indices 0..n-1.  Family generators fix a canonical
indexing (hub = 0, rim = 1..n, pendants = n+1..2n) so that optimal-coloring
counts and witnesses are reproducible; a :class:`VertexLabelMap` bridges
between semantic roles and raw indices.

Graph values are immutable after construction and safe to share across
concurrent tasks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidParameterError, SizeLimitError

Edge = tuple[int, int]

DEFAULT_CHROMATIC_SIZE_LIMIT = 20


def _normalized(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a normalized, lexicographically sorted edge tuple.

    Invariants enforced at construction: no self-loops, no duplicate edges,
    all endpoints in range.  Adjacency sets are derived once and shared.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidParameterError(f"vertex count must be a non-negative integer, got {self.n!r}")
        seen: set[Edge] = set()
        for e in self.edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InvalidParameterError(f"edge endpoints must be integers, got {e!r}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"edge {e!r} out of range for n={self.n}")
            e = _normalized(u, v)
            if e in seen:
                raise InvalidParameterError(f"duplicate edge {e!r}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        neighbors: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in neighbors))

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((len(s) for s in self.adj), reverse=True))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep`` with vertices relabeled densely.

        Returns ``(subgraph, kept)`` where ``kept[i]`` is the original index
        of the subgraph's vertex ``i``.
        """
        kept = tuple(sorted(set(keep)))
        for v in kept:
            if not 0 <= v < self.n:
                raise InvalidParameterError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(kept)}
        edges = tuple(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(kept), edges), kept


class VertexLabelMap:
    """Maps semantic role names (e.g. ``"hub"``, ``"rim[3]"``) to vertex indices.

    The mapping is total and injective over the labeled graph's vertices, so
    tests can address structural roles without hard-coding the canonical
    indexing.
    """

    def __init__(self, n: int, roles: Mapping[str, int]):
        values = list(roles.values())
        if len(set(values)) != len(values):
            raise InvalidParameterError("label map is not injective")
        if set(values) != set(range(n)):
            raise InvalidParameterError("label map does not cover vertices 0..n-1 exactly")
        self._n = n
        self._roles = dict(roles)

    def __getitem__(self, role: str) -> int:
        return self._roles[role]

    def __contains__(self, role: str) -> bool:
        return role in self._roles

    def __len__(self) -> int:
        return len(self._roles)

    def roles(self) -> dict[str, int]:
        return dict(self._roles)

    def __repr__(self) -> str:
        return f"VertexLabelMap({self._n}, {self._roles!r})"


# ---------------------------------------------------------------------------
# Named family generators
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    """Path on n >= 2 vertices: 0-1-2-...-(n-1)."""
    if n < 2:
        raise InvalidParameterError(f"a path needs at least 2 vertices, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices: 0-1-...-(n-1)-0."""
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    return Graph(n, edges)


def wheel(n: int) -> tuple[Graph, VertexLabelMap]:
    """Wheel with an n-cycle rim (n >= 3): hub 0 joined to rim vertices 1..n."""
    if n < 3:
        raise InvalidParameterError(f"a wheel rim needs at least 3 vertices, got {n}")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(1, n)]
    edges.append((1, n))
    roles = {"hub": 0}
    roles.update({f"rim[{i}]": i for i in range(1, n + 1)})
    g = Graph(n + 1, tuple(edges))
    return g, VertexLabelMap(g.n, roles)


def helm(n: int) -> tuple[Graph, VertexLabelMap]:
    """Helm: wheel with rim size n plus one pendant per rim vertex.

    Pendant of rim vertex i sits at index n + i.
    """
    base, _ = wheel(n)
    edges = list(base.edges)
    edges += [(i, n + i) for i in range(1, n + 1)]
    roles = {"hub": 0}
    roles.update({f"rim[{i}]": i for i in range(1, n + 1)})
    roles.update({f"pendant[{i}]": n + i for i in range(1, n + 1)})
    g = Graph(2 * n + 1, tuple(edges))
    return g, VertexLabelMap(g.n, roles)


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise InvalidParameterError(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, VertexLabelMap]:
    """Vertex-disjoint union; g keeps indices 0..n_g-1, h is shifted by n_g."""
    edges = list(g.edges)
    edges += [(u + g.n, v + g.n) for u, v in h.edges]
    roles = {f"G[{i}]": i for i in range(g.n)}
    roles.update({f"H[{j}]": g.n + j for j in range(h.n)})
    out = Graph(g.n + h.n, tuple(edges))
    return out, VertexLabelMap(out.n, roles)


def join(g: Graph, h: Graph) -> tuple[Graph, VertexLabelMap]:
    """Disjoint union plus every edge between the two sides."""
    base, labels = disjoint_union(g, h)
    edges = list(base.edges)
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    out = Graph(base.n, tuple(edges))
    return out, VertexLabelMap(out.n, labels.roles())


def corona(g: Graph, h: Graph) -> tuple[Graph, VertexLabelMap]:
    """Corona: one private copy of h per vertex of g, joined to that vertex.

    Base vertices keep indices 0..n_g-1; copy i occupies the block
    n_g + i*n_h .. n_g + (i+1)*n_h - 1.
    """
    edges = list(g.edges)
    roles = {f"G[{i}]": i for i in range(g.n)}
    for i in range(g.n):
        offset = g.n + i * h.n
        edges += [(offset + u, offset + v) for u, v in h.edges]
        edges += [(i, offset + u) for u in range(h.n)]
        roles.update({f"H[{i}][{j}]": offset + j for j in range(h.n)})
    out = Graph(g.n + g.n * h.n, tuple(edges))
    return out, VertexLabelMap(out.n, roles)


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------

def chromatic_number(g: Graph, *, size_limit: int | None = DEFAULT_CHROMATIC_SIZE_LIMIT) -> int:
    """Exact chromatic number by saturation-ordered branch and bound.

    Exhaustive (never heuristic); graphs above ``size_limit`` vertices raise
    :class:`SizeLimitError`.  Pass ``size_limit=None`` to lift the cap.
    """
    if g.n < 1:
        raise InvalidParameterError("chromatic number needs at least one vertex")
    if size_limit is not None and g.n > size_limit:
        raise SizeLimitError(
            f"graph has {g.n} vertices, exact chromatic search is capped at {size_limit}"
        )
    if g.m == 0:
        return 1
    n = g.n
    adj = g.adj

    # Greedy largest-first upper bound.
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    greedy = [0] * n
    ub = 0
    for v in order:
        used = {greedy[u] for u in adj[v] if greedy[u]}
        c = 1
        while c in used:
            c += 1
        greedy[v] = c
        ub = max(ub, c)

    best = ub
    colors = [0] * n

    def dfs(colored: int, max_used: int) -> None:
        nonlocal best
        if max_used >= best:
            return
        if colored == n:
            best = max_used
            return
        # Most saturated uncolored vertex; ties by degree, then index.
        pick, pick_sat, pick_deg = -1, -1, -1
        for v in range(n):
            if colors[v] == 0:
                sat = len({colors[u] for u in adj[v] if colors[u]})
                deg = len(adj[v])
                if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
                    pick, pick_sat, pick_deg = v, sat, deg
        v = pick
        forbidden = {colors[u] for u in adj[v]}
        limit = min(max_used + 1, best - 1)
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            dfs(colored + 1, max(max_used, c))
            colors[v] = 0

    dfs(0, 0)
    return best
