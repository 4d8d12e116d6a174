"""Coloring semantics: bad edges, class-adjacency rules, and color-usage counts.

A *bad edge* is an edge whose endpoints carry the same color.  All operations
here are pure functions over immutable inputs and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import InvalidColoringError, InvalidParameterError
from .graph import Edge, Graph


class RuleMode(Enum):
    """Which colorings count as admissible candidates during minimization.

    ONE_CLASS: at most one color class may contain adjacent vertices.
    UNRESTRICTED: every assignment competes; only the bad-edge count matters.
    """

    ONE_CLASS = "one-class"
    UNRESTRICTED = "unrestricted"


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..k to vertices 0..n-1."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidParameterError(f"color count must be a positive integer, got {self.k!r}")
        for i, c in enumerate(self.assignment):
            if not isinstance(c, int) or not 1 <= c <= self.k:
                raise InvalidColoringError(f"vertex {i} has color {c!r}, expected 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.assignment)

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def is_surjective(self) -> bool:
        """True when every color 1..k appears at least once."""
        return len(self.used_colors()) == self.k


class BadEdges(NamedTuple):
    count: int
    edges: tuple[Edge, ...]


def _check_fit(g: Graph, coloring: Coloring) -> None:
    if coloring.n != g.n:
        raise InvalidColoringError(
            f"coloring has {coloring.n} entries for a graph on {g.n} vertices"
        )


def bad_edges(g: Graph, coloring: Coloring) -> BadEdges:
    """All edges whose endpoints share a color, with their count."""
    _check_fit(g, coloring)
    a = coloring.assignment
    hits = tuple(e for e in g.edges if a[e[0]] == a[e[1]])
    return BadEdges(len(hits), hits)


def adjacent_class_count(g: Graph, coloring: Coloring) -> int:
    """Number of color classes whose induced subgraph contains at least one edge."""
    _check_fit(g, coloring)
    a = coloring.assignment
    return len({a[u] for u, v in g.edges if a[u] == a[v]})


def is_valid(
    g: Graph,
    coloring: Coloring,
    rule: RuleMode | str = RuleMode.ONE_CLASS,
    surjective: bool = True,
) -> bool:
    """Whether ``coloring`` is an admissible candidate under ``rule``.

    Color entries are range-checked at construction, so only surjectivity and
    the one-class rule are tested here; semantic violations return False.  A
    length mismatch is a structural error and raises.
    """
    _check_fit(g, coloring)
    rule = RuleMode(rule)
    if surjective and not coloring.is_surjective():
        return False
    if rule is RuleMode.ONE_CLASS and adjacent_class_count(g, coloring) > 1:
        return False
    return True


@dataclass(frozen=True)
class ColorUsage:
    """How many vertices carry each color 1..k (``counts[i]`` is color i+1)."""

    counts: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.counts)

    def count(self, color: int) -> int:
        if not 1 <= color <= self.k:
            raise InvalidParameterError(f"color {color} out of range 1..{self.k}")
        return self.counts[color - 1]

    def as_dict(self) -> dict[int, int]:
        return {c + 1: self.counts[c] for c in range(self.k)}


def color_usage(g: Graph, coloring: Coloring) -> ColorUsage:
    """Usage profile of a coloring; validates that it fits the graph."""
    _check_fit(g, coloring)
    counts = [0] * coloring.k
    for c in coloring.assignment:
        counts[c - 1] += 1
    return ColorUsage(tuple(counts))


def cross_bad_edges(left: ColorUsage, right: ColorUsage) -> int:
    """Bad edges a join would create between sides with these usage profiles.

    Every cross pair is adjacent in a join, so color i contributes
    ``left(i) * right(i)`` bad edges.
    """
    if left.k != right.k:
        raise InvalidParameterError(
            f"usage profiles must range over the same color set, got {left.k} and {right.k}"
        )
    return sum(a * b for a, b in zip(left.counts, right.counts))
