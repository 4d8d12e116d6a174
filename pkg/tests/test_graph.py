"""Graph construction, family generators, operations, and chromatic number."""

import random

import pytest

from nearcolor import (
    Graph,
    InvalidParameterError,
    SizeLimitError,
    chromatic_number,
    complete,
    corona,
    cycle,
    disjoint_union,
    helm,
    join,
    path,
    wheel,
)


def test_graph_normalizes_and_validates():
    g = Graph(4, ((3, 1), (0, 1), (2, 0)))
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.m == 3
    assert g.degree(0) == 2
    assert g.adj[1] == frozenset({0, 3})


def test_graph_rejects_self_loop():
    with pytest.raises(InvalidParameterError):
        Graph(2, ((0, 0),))


def test_graph_rejects_duplicate_edges():
    with pytest.raises(InvalidParameterError):
        Graph(3, ((0, 1), (1, 0)))


def test_graph_rejects_out_of_range():
    with pytest.raises(InvalidParameterError):
        Graph(2, ((0, 2),))


def test_adjacency_is_symmetric_and_degree_sum_is_twice_m():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 10)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = Graph(n, tuple(pairs))
        for u in range(n):
            for v in g.adj[u]:
                assert u in g.adj[v]
        assert sum(g.degree(v) for v in range(n)) == 2 * g.m


# --- generators -----------------------------------------------------------

def test_path_examples():
    assert path(2).m == 1
    g = path(5)
    assert (g.n, g.m) == (5, 4)
    assert sorted(g.degree(v) for v in range(5)) == [1, 1, 2, 2, 2]
    assert chromatic_number(path(10)) == 2
    with pytest.raises(InvalidParameterError):
        path(1)


def test_cycle_examples():
    assert chromatic_number(cycle(3)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(cycle(7)) == 3
    assert all(cycle(5).degree(v) == 2 for v in range(5))
    with pytest.raises(InvalidParameterError):
        cycle(2)


def test_wheel_examples():
    g3, _ = wheel(3)
    assert g3.edges == complete(4).edges  # triangle rim plus hub is a 4-clique
    g4, labels = wheel(4)
    assert (g4.n, g4.m) == (5, 8)
    assert chromatic_number(g4) == 3
    assert g4.degree(labels["hub"]) == 4
    assert all(g4.degree(labels[f"rim[{i}]"]) == 3 for i in range(1, 5))
    assert chromatic_number(wheel(5)[0]) == 4
    with pytest.raises(InvalidParameterError):
        wheel(2)


def test_helm_examples():
    g3, labels = helm(3)
    assert (g3.n, g3.m) == (7, 9)
    g4, _ = helm(4)
    assert (g4.n, g4.m) == (9, 12)
    assert chromatic_number(helm(5)[0]) == 4
    for i in range(1, 4):
        pendant = labels[f"pendant[{i}]"]
        assert g3.degree(pendant) == 1
        assert g3.adj[pendant] == frozenset({labels[f"rim[{i}]"]})


def test_complete_examples():
    assert complete(1).m == 0
    assert complete(4).m == 6
    assert chromatic_number(complete(6)) == 6


def test_generators_are_connected_and_valid():
    gs = [path(6), cycle(8), wheel(5)[0], helm(4)[0], complete(5)]
    for g in gs:
        assert g.is_connected()


# --- operations -----------------------------------------------------------

def test_disjoint_union_counts_and_chromatic():
    u, _ = disjoint_union(complete(3), complete(3))
    assert (u.n, u.m) == (6, 6)
    assert not u.is_connected()
    assert chromatic_number(u) == max(chromatic_number(complete(3)), chromatic_number(complete(3)))
    v, _ = disjoint_union(path(2), cycle(5))
    assert (v.n, v.m) == (7, 6)


def test_join_of_triangles_is_six_clique():
    j, labels = join(complete(3), complete(3))
    assert j.edges == complete(6).edges
    assert chromatic_number(j) == 6
    assert labels["G[0]"] == 0 and labels["H[2]"] == 5


def test_join_chromatic_is_sum_on_small_cases():
    for g, h in [(path(3), cycle(5)), (complete(2), complete(3)), (cycle(4), path(2))]:
        j, _ = join(g, h)
        assert chromatic_number(j) == chromatic_number(g) + chromatic_number(h)


def test_wheel_is_join_of_hub_and_cycle():
    for n in range(3, 8):
        w, _ = wheel(n)
        j, _ = join(complete(1), cycle(n))
        assert w.edges == j.edges
        assert w.degree_sequence() == j.degree_sequence()


def test_corona_examples():
    k4, _ = corona(complete(1), complete(3))
    assert k4.edges == complete(4).edges
    sun, labels = corona(cycle(3), complete(1))
    assert (sun.n, sun.m) == (6, 6)
    assert sun.degree(labels["H[1][0]"]) == 1
    assert chromatic_number(corona(cycle(4), complete(1))[0]) == 2


def test_corona_edge_count_formula_random_pairs():
    rng = random.Random(11)
    builders = [path, cycle, complete, lambda n: wheel(n)[0]]
    for _ in range(20):
        g = rng.choice(builders)(rng.randint(3, 5))
        h = rng.choice(builders)(rng.randint(3, 4))
        c, _ = corona(g, h)
        assert c.n == g.n * (1 + h.n)
        assert c.m == g.m + g.n * (h.m + h.n)
        assert c.is_connected() == g.is_connected()


def test_induced_subgraph_relabels_densely():
    g = cycle(5)
    sub, kept = g.induced_subgraph([1, 2, 3, 4])
    assert kept == (1, 2, 3, 4)
    assert sub.edges == ((0, 1), (1, 2), (2, 3))  # the path left after removing vertex 0


# --- chromatic number -----------------------------------------------------

def test_chromatic_number_cycle_parity():
    for n in range(3, 16):
        assert chromatic_number(cycle(n)) == (2 if n % 2 == 0 else 3)


def test_chromatic_number_cliques():
    for n in range(1, 8):
        assert chromatic_number(complete(n)) == n


def test_chromatic_number_helm5_needs_four_colors():
    assert chromatic_number(helm(5)[0]) == 4


def test_chromatic_number_size_limit():
    with pytest.raises(SizeLimitError):
        chromatic_number(path(21))
    assert chromatic_number(path(21), size_limit=25) == 2
    assert chromatic_number(path(21), size_limit=None) == 2
