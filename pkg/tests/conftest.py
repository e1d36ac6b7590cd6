import random

import pytest
from hypothesis import strategies as st

from chipfire.graph import DirectedMultigraph, UndirectedGraph

# Edge list of the K_4 worked example, 1-based labels.
K4_EDGES_1BASED = [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (4, 2)]
K4_START = (1, 0, 2, 2)


@pytest.fixture
def k4():
    return DirectedMultigraph(4, [(u - 1, v - 1) for u, v in K4_EDGES_1BASED])


def reachability(g):
    """Transitive-reflexive closure by repeated squaring of a boolean matrix."""
    n = g.vertex_count
    reach = [[i == j for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        reach[u][v] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return reach


@st.composite
def digraphs(draw, max_vertices=7, max_edges=16):
    n = draw(st.integers(1, max_vertices))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
        lambda e: e[0] != e[1])
    edges = draw(st.lists(pairs, max_size=max_edges if n > 1 else 0))
    return DirectedMultigraph(n, edges)


@st.composite
def games(draw, max_vertices=6, max_chips=6):
    g = draw(digraphs(max_vertices=max_vertices))
    chips = draw(st.lists(st.integers(0, max_chips), min_size=g.vertex_count,
                          max_size=g.vertex_count))
    return g, tuple(chips)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.35) -> UndirectedGraph:
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return UndirectedGraph(n, edges)


def random_dag(rng: random.Random, n: int, p: float = 0.4) -> DirectedMultigraph:
    """Edges only go from lower to higher position in a random vertex order."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return DirectedMultigraph(n, edges)


def random_strongly_connected(rng: random.Random, n: int, extra: int) -> DirectedMultigraph:
    """A Hamiltonian cycle through a random order plus random extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return DirectedMultigraph(n, edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
