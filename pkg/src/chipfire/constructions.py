"""Graph families and ready-to-run games.

Label conventions (0-based indices):

* cycles: ``v_0 .. v_{n-1}`` map to ``0 .. n-1``;
* useful orientations of K_n and K_{a,a}: ``v_i`` maps to ``i - 1``;
* the firing-sequence gadget: hub ``v`` is 0, then each cycle copy's
  ``v_1 .. v_{l-1}`` in copy order, then ``u``, then each waterfall's
  vertices from top to tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .dynamics import ChipConfiguration, check_configuration
from .errors import ContractError, DomainError, UnrealizableSequence
from .graph import DirectedMultigraph, UndirectedGraph, bfs_distance
from .period import FiringString, is_periodic_string


@dataclass(frozen=True)
class GadgetGame:
    graph: Union[DirectedMultigraph, UndirectedGraph]
    initial: ChipConfiguration
    designated_vertex: Optional[int] = None
    predicted_period: Optional[int] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "initial", check_configuration(self.graph, self.initial))
        dv = self.designated_vertex
        if dv is not None and not 0 <= dv < self.graph.vertex_count:
            raise ContractError(f"designated vertex {dv} out of range")
        if self.predicted_period is not None and self.predicted_period < 1:
            raise ContractError("predicted period must be positive")

    @property
    def directed(self) -> bool:
        return isinstance(self.graph, DirectedMultigraph)


def directed_cycle(n: int) -> DirectedMultigraph:
    """Directed n-cycle with edges ``v_{i+1} -> v_i`` and ``v_0 -> v_{n-1}``."""
    if n < 2:
        raise DomainError("a directed cycle needs at least 2 vertices")
    return DirectedMultigraph(n, [(i + 1, i) for i in range(n - 1)] + [(0, n - 1)])


def cycle_divisor_game(n: int, i: int) -> GadgetGame:
    """One chip on every ``v_j`` with ``j % i == 0``; the period is exactly ``i``."""
    if i < 1 or n % i:
        raise DomainError(f"{i} does not divide {n}")
    g = directed_cycle(n)
    chips = tuple(int(j % i == 0) for j in range(n))
    return GadgetGame(g, chips, 0, i, f"C_{n} divisor game, period {i}")


def useful_complete(n: int) -> DirectedMultigraph:
    """The useful orientation of K_n.

    Edges ``v_i -> v_{i+1}`` and ``v_n -> v_1``, plus ``v_1 -> v_k`` for
    ``3 <= k <= n-1`` and ``v_j -> v_k`` for ``1 < k <= j-2``.
    """
    if n < 3:
        raise DomainError("useful orientation of K_n needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    edges += [(1, k) for k in range(3, n)]
    edges += [(j, k) for j in range(1, n + 1) for k in range(2, j - 1)]
    return DirectedMultigraph(n, [(u - 1, v - 1) for u, v in edges])


def useful_bipartite(a: int) -> DirectedMultigraph:
    """The useful orientation of K_{a,a}; odd labels form one side."""
    if a < 2:
        raise DomainError("useful orientation of K_{a,a} needs a >= 2")
    m = 2 * a
    edges = [(i, i + 1) for i in range(1, m)] + [(m, 1)]
    # v_1 -> v_2 is already a chain edge
    edges += [(1, 2 * i) for i in range(2, a)]
    edges += [(2 * j + 1, 2 * k) for j in range(1, a) for k in range(1, j)]
    edges += [(2 * j, 2 * k - 1) for j in range(1, a + 1) for k in range(2, j)]
    return DirectedMultigraph(m, [(u - 1, v - 1) for u, v in edges])


def bipartite_with_sink(a: int, b: int) -> DirectedMultigraph:
    """Orientation of K_{a,b} whose only sink component is useful K_{a,a}.

    Indices ``0 .. 2a-1`` carry the useful orientation (even indices are
    the left side); the ``b - a`` extra right-side vertices follow and point
    into every left vertex.
    """
    if a < 2 or a >= b:
        raise DomainError("bipartite_with_sink needs 2 <= a < b")
    core = useful_bipartite(a)
    left = range(0, 2 * a, 2)
    extra = range(2 * a, a + b)
    edges = list(core.edges) + [(x, y) for x in extra for y in left]
    return DirectedMultigraph(a + b, edges)


def _short_sequence_game(s: str) -> GadgetGame:
    if s in ("0", "1"):
        chips = (int(s),) * 3
        return GadgetGame(directed_cycle(3), chips, 0, 1, f"C_3 realizing {s}")
    if s in ("10", "01"):
        return GadgetGame(directed_cycle(4), (1, 0, 1, 0), 0 if s == "10" else 1, 2,
                          f"C_4 realizing {s}")
    # s == "11"
    g = DirectedMultigraph(4, [(0, 1), (1, 2), (1, 3), (2, 0), (3, 0)])
    return GadgetGame(g, (2, 2, 0, 0), 0, 2, "4-vertex gadget realizing 11")


def _plain_cycle_game(s: str) -> GadgetGame:
    chips = tuple(int(b) for b in s)
    return GadgetGame(directed_cycle(len(s)), chips, 0, len(s), f"C_{len(s)} realizing {s}")


def _hub_gadget(s: str, extra_chips_when_flush: bool) -> GadgetGame:
    fs = FiringString(s)
    ell, n, d = fs.length, fs.ones, fs.trailing_zeros
    copies = 2 * n
    hub = 0
    edges = []
    chips = [copies * int(s[0])]

    def cycle_vertex(j, i):
        return 1 + j * (ell - 1) + (i - 1)

    for j in range(copies):
        ids = [hub] + [cycle_vertex(j, i) for i in range(1, ell)]
        edges += [(ids[i + 1], ids[i]) for i in range(ell - 1)]
        edges.append((hub, ids[ell - 1]))
        chips += [int(b) for b in s[1:]]

    u = len(chips)
    chips.append(0)
    edges.append((hub, u))
    depth = max(d, 1)
    for j in range(n):
        top = len(chips)
        chips += [0] * depth
        edges.append((u, top))
        edges += [(top + i, top + i + 1) for i in range(depth - 1)]
        edges.append((top + depth - 1, hub))
        if d >= 1:
            chips[top + depth - 1] = 1
    if d >= 1 or extra_chips_when_flush:
        chips[hub] += n
    if d == 0:
        chips[u] = n
    g = DirectedMultigraph(len(chips), edges)
    return GadgetGame(g, tuple(chips), hub, ell,
                      f"hub gadget realizing {s} ({copies} cycles, {n} waterfalls)")


def realize_sequence(s: FiringString | str, *, force_gadget: bool = False,
                     extra_chips_when_flush: bool = True) -> GadgetGame:
    """Build a game whose designated vertex has atomic firing sequence ``s``.

    The resulting period is ``len(s)``.  Strings of length at most 2 use small
    fixed graphs.  Longer strings that are not repetitions of a shorter block
    use a plain cycle carrying the string as its chips; repetitions (or any
    string, with ``force_gadget``) use ``2 n(s)`` cycles glued at a hub plus
    waterfall paths that hold the period at ``len(s)``.

    The hub always receives ``n(s)`` chips on top of its cycle chips.  Setting
    ``extra_chips_when_flush=False`` omits them when ``s`` ends in 1; that
    variant is kept for comparison; it misses ``s`` for most such strings.
    """
    s = str(s)
    FiringString(s)
    if "1" not in s and len(s) >= 2:
        raise UnrealizableSequence(
            f"{s!r} is unrealizable: on a strongly connected digraph every "
            "vertex fires at least once per period when the period exceeds 1")
    if len(s) <= 2:
        return _short_sequence_game(s)
    if not force_gadget and not is_periodic_string(s):
        return _plain_cycle_game(s)
    return _hub_gadget(s, extra_chips_when_flush)


def undirected_t2_game(g: UndirectedGraph, anchor: int) -> GadgetGame:
    """Period-2 game on a connected graph in which every vertex fires once per period.

    Vertices at even distance from ``anchor`` start with ``deg(u)`` chips;
    vertices at odd distance start ``deg(u) - k`` where ``k`` counts the
    neighbours at a different distance.
    """
    if g.vertex_count < 2:
        raise DomainError("need at least 2 vertices")
    dist = bfs_distance(g, anchor)
    if any(x is None for x in dist):
        raise DomainError("graph is not connected")
    chips = []
    for u in range(g.vertex_count):
        deg = g.degree[u]
        if dist[u] % 2 == 0:
            chips.append(deg)
        else:
            crossing = sum(1 for w in g.neighbors[u] if dist[w] != dist[u])
            chips.append(deg - crossing)
    return GadgetGame(g, tuple(chips), anchor, 2, f"undirected period-2 game at {anchor}")
