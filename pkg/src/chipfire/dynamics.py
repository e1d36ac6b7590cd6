"""The parallel chip-firing rule.

A vertex fires when it holds at least as many chips as its out-degree (for an
undirected graph, its degree) and that degree is positive.  Every firing
vertex sends one chip along each outgoing edge, all vertices simultaneously.

Configurations are plain tuples of Python ints, so chip counts never overflow.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .errors import BudgetExhausted, ContractError
from .graph import DirectedMultigraph, UndirectedGraph

ChipConfiguration = tuple[int, ...]
Graph = Union[DirectedMultigraph, UndirectedGraph]
Stepper = Callable[[ChipConfiguration], tuple[ChipConfiguration, tuple[bool, ...]]]

#: Upper bound on ``rounds`` accepted by :func:`run_trajectory`.
DEFAULT_TRAJECTORY_CAP = 10_000_000

_check_conservation = False


@contextlib.contextmanager
def conservation_checks(enabled: bool = True):
    """Make every stepper compiled inside the block assert chip conservation."""
    global _check_conservation
    previous = _check_conservation
    _check_conservation = enabled
    try:
        yield
    finally:
        _check_conservation = previous


@dataclass(frozen=True)
class StepResult:
    next: ChipConfiguration
    fired: tuple[bool, ...]


@dataclass(frozen=True)
class TrajectoryRecord:
    configurations: tuple[ChipConfiguration, ...]
    firings: tuple[tuple[bool, ...], ...]


def as_digraph(g: Graph) -> DirectedMultigraph:
    return g.as_digraph() if isinstance(g, UndirectedGraph) else g


def check_configuration(g: Graph, c: Sequence[int]) -> ChipConfiguration:
    """Validate ``c`` against ``g`` and return it as a tuple of ints."""
    if len(c) != g.vertex_count:
        raise ContractError(
            f"configuration has {len(c)} entries but the graph has "
            f"{g.vertex_count} vertices")
    conf = tuple(int(x) for x in c)
    if any(x < 0 for x in conf):
        raise ContractError("chip counts must be nonnegative")
    return conf


def compile_stepper(g: Graph) -> Stepper:
    """Return a fast closure applying one parallel round on ``g``.

    The closure does no validation; callers check the configuration once.
    """
    d = as_digraph(g)
    threshold = [k if k > 0 else None for k in d.out_degree]
    succ = d.successors
    vertices = range(d.vertex_count)

    def step(c):
        nxt = list(c)
        fired = [False] * len(nxt)
        for v in vertices:
            k = threshold[v]
            if k is not None and c[v] >= k:
                fired[v] = True
                nxt[v] -= k
                for w in succ[v]:
                    nxt[w] += 1
        return tuple(nxt), tuple(fired)

    if not _check_conservation:
        return step

    def checked_step(c):
        nxt, fired = step(c)
        if sum(nxt) != sum(c):
            raise AssertionError(f"chips not conserved: {c} -> {nxt}")
        return nxt, fired

    return checked_step


def step_directed(g: DirectedMultigraph, c: Sequence[int]) -> StepResult:
    """One round of the directed parallel game."""
    if isinstance(g, UndirectedGraph):
        raise ContractError("step_directed needs a DirectedMultigraph")
    nxt, fired = compile_stepper(g)(check_configuration(g, c))
    return StepResult(nxt, fired)


def step_undirected(g: UndirectedGraph, c: Sequence[int]) -> StepResult:
    """One round of the undirected parallel game (threshold ``deg(v)``)."""
    if not isinstance(g, UndirectedGraph):
        raise ContractError("step_undirected needs an UndirectedGraph")
    nxt, fired = compile_stepper(g)(check_configuration(g, c))
    return StepResult(nxt, fired)


def run_trajectory(g: Graph, c0: Sequence[int], rounds: int,
                   mode: str | None = None,
                   cap: int = DEFAULT_TRAJECTORY_CAP) -> TrajectoryRecord:
    """Apply the firing rule ``rounds`` times and record everything.

    ``mode`` may be ``"directed"`` or ``"undirected"``; by default it follows
    the type of ``g``.
    """
    if mode is not None:
        expected = UndirectedGraph if mode == "undirected" else DirectedMultigraph
        if mode not in ("directed", "undirected") or not isinstance(g, expected):
            raise ContractError(f"mode {mode!r} does not match {type(g).__name__}")
    if rounds < 0:
        raise ContractError("rounds must be nonnegative")
    if rounds > cap:
        raise BudgetExhausted(f"{rounds} rounds exceed the trajectory cap {cap}",
                              rounds=0)
    step = compile_stepper(g)
    c = check_configuration(g, c0)
    configs = [c]
    firings = []
    for _ in range(rounds):
        c, fired = step(c)
        configs.append(c)
        firings.append(fired)
    return TrajectoryRecord(tuple(configs), tuple(firings))
