"""Directed multigraphs, simple undirected graphs and their structure.

Vertices are dense integer indices ``0 .. n-1``.  Constructions that follow
the usual 1-based labelling ``v_1 .. v_n`` map ``v_i`` to index ``i - 1``.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExhausted, ContractError

Edge = tuple[int, int]

#: Orientations are enumerated exhaustively, so the edge count is capped.
DEFAULT_ORIENTATION_LIMIT = 24


def _check_vertex(n: int, v: int, what: str = "vertex") -> None:
    if not 0 <= v < n:
        raise ContractError(f"{what} index {v} out of range for {n} vertices")


@dataclass(frozen=True, init=False)
class DirectedMultigraph:
    """A directed graph whose edges form a multiset of ordered pairs.

    Parallel edges are allowed and every degree counts multiplicity.
    Self-loops are rejected.  Instances are immutable; the edge tuple is
    stored in canonical (sorted) order so equal multisets compare equal.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise ContractError("vertex_count must be nonnegative")
        canon = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            _check_vertex(vertex_count, u, "edge endpoint")
            _check_vertex(vertex_count, v, "edge endpoint")
            if u == v:
                raise ContractError(f"self-loop at vertex {u} is not allowed")
            canon.append((u, v))
        canon.sort()
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def out_degree(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, _ in self.edges:
            deg[u] += 1
        return tuple(deg)

    @cached_property
    def in_degree(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for _, v in self.edges:
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbours of each vertex, repeated once per parallel edge."""
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            out[u].append(v)
        return tuple(tuple(s) for s in out)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def underlying(self) -> UndirectedGraph:
        """The simple undirected graph obtained by forgetting directions.

        Raises ContractError if two edges join the same pair of vertices.
        """
        return UndirectedGraph(self.vertex_count, self.edges)

    def relabel(self, perm: Sequence[int]) -> DirectedMultigraph:
        """Rename vertex ``v`` to ``perm[v]``."""
        return DirectedMultigraph(self.vertex_count,
                                  ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True, init=False)
class UndirectedGraph:
    """A simple undirected graph: no self-loops, no repeated edges."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise ContractError("vertex_count must be nonnegative")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            _check_vertex(vertex_count, u, "edge endpoint")
            _check_vertex(vertex_count, v, "edge endpoint")
            if u == v:
                raise ContractError(f"self-loop at vertex {u} is not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ContractError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def degree(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.neighbors)

    def as_digraph(self) -> DirectedMultigraph:
        """Symmetric digraph with both directions of every edge.

        The undirected firing rule on ``self`` is exactly the directed rule on
        this digraph, since ``deg(v)`` becomes the out-degree.
        """
        return DirectedMultigraph(
            self.vertex_count,
            itertools.chain(self.edges, ((v, u) for u, v in self.edges)))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return all(d is not None for d in bfs_distance(self, 0))


@dataclass(frozen=True)
class CondensationReport:
    """Strongly connected components and the condensation DAG.

    Components are numbered in order of their smallest vertex and each
    component lists its vertices in increasing order.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    condensation_edges: frozenset[tuple[int, int]]
    sink_components: tuple[int, ...]

    @property
    def is_strongly_connected(self) -> bool:
        return len(self.components) == 1

    def sink_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.sink_components for v in self.components[c])


def _tarjan(n: int, succ: Sequence[Sequence[int]]) -> list[list[int]]:
    # iterative Tarjan: recursion would overflow on long gadget cycles
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def scc_partition(g: DirectedMultigraph) -> CondensationReport:
    """Partition ``g`` into maximal strongly connected components."""
    comps = sorted(sorted(c) for c in _tarjan(g.vertex_count, g.successors))
    component_of = [0] * g.vertex_count
    for cid, comp in enumerate(comps):
        for v in comp:
            component_of[v] = cid
    cedges = frozenset(
        (component_of[u], component_of[v])
        for u, v in g.edges if component_of[u] != component_of[v])
    has_out = {a for a, _ in cedges}
    sinks = tuple(c for c in range(len(comps)) if c not in has_out)
    return CondensationReport(tuple(component_of), tuple(tuple(c) for c in comps),
                              cedges, sinks)


def is_strongly_connected(g: DirectedMultigraph) -> bool:
    return g.vertex_count > 0 and scc_partition(g).is_strongly_connected


def is_dag(g: DirectedMultigraph) -> bool:
    """True iff ``g`` has no directed cycle (Kahn's algorithm)."""
    indeg = list(g.in_degree)
    queue = deque(v for v in range(g.vertex_count) if indeg[v] == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in g.successors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == g.vertex_count


def bfs_distance(g: UndirectedGraph, source: int) -> list[int | None]:
    """Edge-count distances from ``source``; ``None`` marks unreachable vertices."""
    _check_vertex(g.vertex_count, source, "source")
    dist: list[int | None] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def enumerate_orientations(g: UndirectedGraph,
                           limit: int = DEFAULT_ORIENTATION_LIMIT
                           ) -> Iterator[DirectedMultigraph]:
    """Yield all ``2**m`` orientations of ``g``.

    Orientation number ``k`` reverses edge ``i`` (in ``g.edges`` order) iff
    bit ``i`` of ``k`` is set, so the first orientation points every edge
    from its smaller to its larger endpoint.
    """
    m = len(g.edges)
    if m > limit:
        raise BudgetExhausted(
            f"{m} edges exceed the orientation limit of {limit} "
            f"(would enumerate 2**{m} orientations)")
    for k in range(1 << m):
        yield DirectedMultigraph(
            g.vertex_count,
            ((v, u) if (k >> i) & 1 else (u, v) for i, (u, v) in enumerate(g.edges)))
