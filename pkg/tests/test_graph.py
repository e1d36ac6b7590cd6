import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chipfire.constructions import directed_cycle, useful_complete
from chipfire.errors import BudgetExhausted, ContractError
from chipfire.graph import (DirectedMultigraph, UndirectedGraph, bfs_distance,
                            enumerate_orientations, is_dag, scc_partition)

from conftest import digraphs, reachability


def test_rejects_self_loops_and_bad_indices():
    with pytest.raises(ContractError):
        DirectedMultigraph(3, [(1, 1)])
    with pytest.raises(ContractError):
        DirectedMultigraph(2, [(0, 2)])
    with pytest.raises(ContractError):
        UndirectedGraph(3, [(0, 1), (1, 0)])


def test_parallel_edges_count_in_degrees():
    g = DirectedMultigraph(2, [(0, 1), (0, 1), (1, 0)])
    assert g.out_degree == (2, 1)
    assert g.in_degree == (1, 2)
    assert g.successors[0] == (1, 1)


def test_condensation_figure():
    A, B, C, D, E, F, G, H = range(8)
    g = DirectedMultigraph(8, [(A, B), (B, C), (C, D), (D, A), (C, E), (E, F),
                               (F, G), (G, E), (B, H), (F, H)])
    rep = scc_partition(g)
    assert set(rep.components) == {(A, B, C, D), (E, F, G), (H,)}
    assert [rep.components[c] for c in rep.sink_components] == [(H,)]
    abcd, efg, h = (rep.component_of[x] for x in (A, E, H))
    assert rep.condensation_edges == {(abcd, efg), (abcd, h), (efg, h)}


def test_cycle_is_single_sink_component():
    rep = scc_partition(directed_cycle(5))
    assert rep.components == ((0, 1, 2, 3, 4),)
    assert rep.sink_components == (0,)


def test_directed_path_components():
    rep = scc_partition(DirectedMultigraph(3, [(0, 1), (1, 2)]))
    assert rep.components == ((0,), (1,), (2,))
    assert rep.sink_vertices() == {2}


@pytest.mark.parametrize("g, expected", [
    (DirectedMultigraph(4, [(0, 1), (1, 2), (2, 3)]), True),
    (directed_cycle(3), False),
    (useful_complete(4), False),
])
def test_is_dag_examples(g, expected):
    assert is_dag(g) is expected


def test_bfs_distance_preliminaries_example():
    # undirected example graph: 1-2, 2-3, 3-4, 1-3
    g = UndirectedGraph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    assert bfs_distance(g, 0)[3] == 2
    assert bfs_distance(g, 2)[2] == 0


def test_bfs_distance_path_and_unreachable():
    assert bfs_distance(UndirectedGraph(3, [(0, 1), (1, 2)]), 0) == [0, 1, 2]
    assert bfs_distance(UndirectedGraph(3, [(0, 1)]), 0) == [0, 1, None]


def k(n):
    return UndirectedGraph(n, itertools.combinations(range(n), 2))


def test_orientation_counts():
    assert len(list(enumerate_orientations(UndirectedGraph(2, [(0, 1)])))) == 2
    assert len(list(enumerate_orientations(k(4)))) == 64
    strongly = [d for d in enumerate_orientations(k(3))
                if len(scc_partition(d).components) == 1]
    assert len(strongly) == 2
    assert {d.edges for d in strongly} == {((0, 1), (1, 2), (2, 0)),
                                           ((0, 2), (1, 0), (2, 1))}


def test_orientation_order_is_binary_counter():
    first, second = itertools.islice(enumerate_orientations(k(3)), 2)
    assert first.edges == ((0, 1), (0, 2), (1, 2))
    assert second.edges == ((0, 2), (1, 0), (1, 2))


def test_orientation_limit():
    with pytest.raises(BudgetExhausted, match="orientation limit"):
        next(enumerate_orientations(k(8), limit=24))


def test_orientations_preserve_degree():
    g = UndirectedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    for d in enumerate_orientations(g):
        assert [a + b for a, b in zip(d.out_degree, d.in_degree)] == list(g.degree)


@settings(max_examples=200)
@given(digraphs())
def test_scc_matches_mutual_reachability(g):
    reach = reachability(g)
    rep = scc_partition(g)
    n = g.vertex_count
    for u in range(n):
        for v in range(n):
            same = rep.component_of[u] == rep.component_of[v]
            assert same == (reach[u][v] and reach[v][u])
    assert sorted(v for c in rep.components for v in c) == list(range(n))


@settings(max_examples=200)
@given(digraphs())
def test_condensation_is_acyclic_and_sinks_exact(g):
    rep = scc_partition(g)
    cond = DirectedMultigraph(len(rep.components), rep.condensation_edges)
    assert is_dag(cond)
    outs = {a for a, _ in rep.condensation_edges}
    assert set(rep.sink_components) == set(range(len(rep.components))) - outs


@settings(max_examples=200)
@given(digraphs())
def test_is_dag_iff_all_components_singletons(g):
    assert is_dag(g) == all(len(c) == 1 for c in scc_partition(g).components)


@settings(max_examples=100)
@given(digraphs(), st.randoms(use_true_random=False))
def test_scc_invariant_under_relabeling(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    inverse = [0] * len(perm)
    for i, p in enumerate(perm):
        inverse[p] = i
    rep = scc_partition(g)
    back = {tuple(sorted(inverse[v] for v in c))
            for c in scc_partition(g.relabel(perm)).components}
    assert back == set(rep.components)
    assert g.relabel(perm).relabel(inverse) == g
