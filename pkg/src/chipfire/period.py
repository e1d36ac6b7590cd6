"""Exact period detection and firing-sequence bookkeeping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .dynamics import Graph, ChipConfiguration, check_configuration, compile_stepper
from .errors import BudgetExhausted, ContractError

DEFAULT_MAX_ROUNDS = 1_000_000
DEFAULT_SEARCH_BUDGET = 2_000_000


@dataclass(frozen=True)
class PeriodSummary:
    """The eventual periodic orbit of a game.

    ``cycle_configurations[k]`` and ``firing_rows[k]`` describe round
    ``transient + k``.
    """

    transient: int
    period: int
    fire_counts: tuple[int, ...]
    cycle_configurations: tuple[ChipConfiguration, ...]
    firing_rows: tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class FiringString:
    bits: str

    def __post_init__(self):
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ContractError(f"not a nonempty binary string: {self.bits!r}")

    def __str__(self):
        return self.bits

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        return self.bits.count("1")

    @property
    def last_one_index(self) -> int | None:
        k = self.bits.rfind("1")
        return None if k < 0 else k

    @property
    def trailing_zeros(self) -> int:
        return len(self.bits) - len(self.bits.rstrip("0"))


def detect_period(g: Graph, c0: Sequence[int],
                  max_rounds: int = DEFAULT_MAX_ROUNDS) -> PeriodSummary:
    """Simulate until a configuration repeats and report the orbit.

    Every visited configuration is stored exactly, so the first repeat closes
    the eventual cycle and the reported period is minimal.

    Raises BudgetExhausted if no configuration repeats within ``max_rounds``
    rounds.
    """
    if max_rounds < 1:
        raise ContractError("max_rounds must be at least 1")
    step = compile_stepper(g)
    c = check_configuration(g, c0)
    seen = {c: 0}
    history = [c]
    fired_rows = []
    for t in range(1, max_rounds + 1):
        c, fired = step(c)
        fired_rows.append(fired)
        first = seen.get(c)
        if first is not None:
            rows = tuple(fired_rows[first:])
            counts = tuple(sum(col) for col in zip(*rows))
            return PeriodSummary(first, t - first, counts,
                                 tuple(history[first:]), rows)
        seen[c] = t
        history.append(c)
    raise BudgetExhausted(f"no repeated configuration within {max_rounds} rounds",
                          rounds=max_rounds)


def atomic_firing_sequence(summary: PeriodSummary, v: int) -> FiringString:
    """The firing indicators of ``v`` over one period of the orbit."""
    if summary.firing_rows and not 0 <= v < len(summary.firing_rows[0]):
        raise ContractError(f"vertex {v} out of range")
    return FiringString("".join("1" if row[v] else "0" for row in summary.firing_rows))


def minimal_string_period(bits: FiringString | str) -> int:
    """Smallest ``r`` dividing the length such that ``bits`` repeats its prefix."""
    s = str(bits)
    if not s:
        raise ContractError("empty string has no period")
    n = len(s)
    for r in range(1, n + 1):
        if n % r == 0 and s[:r] * (n // r) == s:
            return r
    return n  # pragma: no cover


def is_periodic_string(bits: FiringString | str) -> bool:
    """True if ``bits`` is a repetition of a strictly shorter block."""
    return minimal_string_period(bits) < len(str(bits))


def joint_sequence_period(summary: PeriodSummary) -> int:
    """Smallest ``r`` for which every vertex's orbit firing sequence is r-periodic."""
    T = summary.period
    for r in range(1, T + 1):
        if T % r == 0 and all(
                summary.firing_rows[t] == summary.firing_rows[t % r] for t in range(T)):
            return r
    return T  # pragma: no cover


def eventual_periods(g: Graph, configurations: Iterable[Sequence[int]],
                     max_rounds: int = DEFAULT_MAX_ROUNDS,
                     memo: dict | None = None) -> list[int]:
    """Eventual period of each start configuration.

    Equivalent to ``[detect_period(g, c).period for c in configurations]``
    but trajectories share a memo of already-classified configurations, so
    exhaustive enumerations visit each reachable configuration once.
    """
    step = compile_stepper(g)
    known: dict = {} if memo is None else memo
    out = []
    for c0 in configurations:
        c = check_configuration(g, c0)
        path: list[ChipConfiguration] = []
        where: dict = {}
        while True:
            p = known.get(c)
            if p is not None:
                break
            i = where.get(c)
            if i is not None:
                p = len(path) - i
                break
            if len(path) > max_rounds:
                raise BudgetExhausted(
                    f"no repeated configuration within {max_rounds} rounds",
                    rounds=max_rounds)
            where[c] = len(path)
            path.append(c)
            c = step(c)[0]
        for x in path:
            known[x] = p
        out.append(p)
    return out


def bounded_configurations(n: int, per_vertex_bound: int) -> Iterable[ChipConfiguration]:
    """All configurations with entries in ``[0, per_vertex_bound]``, lexicographic."""
    return itertools.product(range(per_vertex_bound + 1), repeat=n)


def configurations_up_to(n: int, total_bound: int) -> Iterable[ChipConfiguration]:
    """All configurations with total chips at most ``total_bound``, lexicographic."""
    def rec(k, remaining):
        if k == 0:
            yield ()
            return
        for x in range(remaining + 1):
            for rest in rec(k - 1, remaining - x):
                yield (x,) + rest
    return rec(n, total_bound)


@dataclass
class ConvergentSearchReport:
    min_period: int | None
    witness: ChipConfiguration | None
    start: ChipConfiguration | None
    configurations_tested: int
    complete: bool = True
    periods_seen: dict[int, int] = field(default_factory=dict)


def convergent_period_search(g: Graph, min_chips: int, per_vertex_bound: int,
                             max_rounds: int = DEFAULT_MAX_ROUNDS,
                             budget: int = DEFAULT_SEARCH_BUDGET
                             ) -> ConvergentSearchReport:
    """Minimum eventual period over bounded games with at least ``min_chips`` chips.

    Every configuration with entries in ``[0, per_vertex_bound]`` and total
    at least ``min_chips`` is simulated, in lexicographic order.  ``start`` is
    the first configuration achieving the minimum and ``witness`` the first
    configuration of its periodic orbit (a game with no transient).

    This only bounds the convergent period from above on the searched box;
    it is evidence, not the limiting value.  If more than ``budget``
    configurations qualify, the search stops early and ``complete`` is False.
    """
    n = g.vertex_count
    memo: dict = {}
    best = None
    start = None
    tested = 0
    complete = True
    seen: dict[int, int] = {}
    for c in bounded_configurations(n, per_vertex_bound):
        if sum(c) < min_chips:
            continue
        if tested >= budget:
            complete = False
            break
        tested += 1
        (p,) = eventual_periods(g, [c], max_rounds, memo)
        seen[p] = seen.get(p, 0) + 1
        if best is None or p < best:
            best, start = p, c
    witness = None
    if start is not None:
        witness = detect_period(g, start, max_rounds).cycle_configurations[0]
    return ConvergentSearchReport(best, witness, start, tested, complete,
                                  dict(sorted(seen.items())))
