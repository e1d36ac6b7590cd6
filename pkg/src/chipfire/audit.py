"""Exhaustive and sampled audits of period and firing-count claims.

Each audit returns an :class:`AuditReport`; an empty ``violations`` list
means the claim held on every instance examined.  Audits only combine the
public operations of the other modules.
"""

from __future__ import annotations

import json
import math
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .constructions import (cycle_divisor_game, directed_cycle, useful_bipartite,
                            useful_complete)
from .errors import BudgetExhausted, ContractError
from .graph import (DEFAULT_ORIENTATION_LIMIT, DirectedMultigraph, UndirectedGraph,
                    enumerate_orientations, is_strongly_connected)
from .linalg import minimal_positive_kernel_vector
from .period import (DEFAULT_MAX_ROUNDS, configurations_up_to, detect_period,
                     eventual_periods)


@dataclass
class AuditReport:
    claim: str
    instances_checked: int
    violations: list = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)
    observations: dict = field(default_factory=dict)
    complete: bool = True

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> AuditReport:
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> AuditReport:
        return cls.from_dict(json.loads(text))


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def audit_no_period2_orientations(base: UndirectedGraph, total_chip_bound: int = 8,
                                  max_rounds: int = DEFAULT_MAX_ROUNDS,
                                  budget: int | None = None,
                                  max_recorded: int = 200) -> AuditReport:
    """Look for eventual period 2 on every orientation of ``base``.

    Every configuration with at most ``total_chip_bound`` chips is simulated
    on every orientation, including orientations that are not strongly
    connected (their dynamics settle on the sink components).  At most
    ``max_recorded`` counterexamples are stored; ``observations`` carries the
    full count.
    """
    t0 = time.perf_counter()
    n = base.vertex_count
    checked = 0
    violations = []
    n_violations = 0
    strongly = 0
    histogram: Counter = Counter()
    complete = True
    orientations = list(enumerate_orientations(base, DEFAULT_ORIENTATION_LIMIT))
    for k, d in enumerate(orientations):
        strongly += is_strongly_connected(d)
        configs = list(configurations_up_to(n, total_chip_bound))
        if budget is not None and checked + len(configs) > budget:
            complete = False
            break
        periods = eventual_periods(d, configs, max_rounds)
        checked += len(configs)
        histogram.update(periods)
        for c, p in zip(configs, periods):
            if p == 2:
                n_violations += 1
                if len(violations) < max_recorded:
                    violations.append({"orientation": k,
                                       "edges": [list(e) for e in d.edges],
                                       "configuration": list(c), "period": p})
    return AuditReport(
        claim="no orientation admits an eventual period of 2",
        instances_checked=checked,
        violations=violations,
        parameters={"vertices": n, "edges": [list(e) for e in base.edges],
                    "total_chip_bound": total_chip_bound, "max_rounds": max_rounds},
        elapsed=time.perf_counter() - t0,
        observations={"orientations": len(orientations),
                      "strongly_connected_orientations": strongly,
                      "violation_count": n_violations,
                      "period_histogram": {str(p): c for p, c in sorted(histogram.items())}},
        complete=complete)


def audit_cycle_periods(n: int, total_chip_bound: int | None = None,
                        max_rounds: int = DEFAULT_MAX_ROUNDS) -> AuditReport:
    """Every period on the directed n-cycle divides n, and every divisor occurs."""
    if n < 2:
        raise ContractError("cycle audit needs n >= 2")
    t0 = time.perf_counter()
    bound = n if total_chip_bound is None else total_chip_bound
    g = directed_cycle(n)
    configs = list(configurations_up_to(n, bound))
    periods = eventual_periods(g, configs, max_rounds)
    violations = [{"configuration": list(c), "period": p}
                  for c, p in zip(configs, periods) if n % p]
    divisors = [i for i in range(1, n + 1) if n % i == 0]
    realized = []
    for i in divisors:
        game = cycle_divisor_game(n, i)
        s = detect_period(game.graph, game.initial, max_rounds)
        if s.period == i and s.transient == 0:
            realized.append(i)
        else:
            violations.append({"divisor": i, "detected_period": s.period,
                               "transient": s.transient})
    return AuditReport(
        claim=f"periods on the directed {n}-cycle are exactly the divisors of {n}",
        instances_checked=len(configs) + len(divisors),
        violations=violations,
        parameters={"n": n, "total_chip_bound": bound, "max_rounds": max_rounds},
        elapsed=time.perf_counter() - t0,
        observations={"observed_periods": sorted(set(periods)),
                      "realized_divisors": realized})


def useful_family(g: DirectedMultigraph) -> tuple[str, int] | None:
    """Identify ``g`` as a useful orientation: ``("complete", n)``, ``("bipartite", a)`` or None."""
    n = g.vertex_count
    if n >= 3 and len(g.edges) == n * (n - 1) // 2 and g == useful_complete(n):
        return ("complete", n)
    if n >= 4 and n % 2 == 0 and len(g.edges) == (n // 2) ** 2 and g == useful_bipartite(n // 2):
        return ("bipartite", n // 2)
    return None


def random_configuration(rng: random.Random, n: int, min_chips: int,
                         max_chips: int) -> tuple[int, ...]:
    chips = [0] * n
    for _ in range(rng.randint(min_chips, max_chips)):
        chips[rng.randrange(n)] += 1
    return tuple(chips)


def audit_stationary_fire_counts(g: DirectedMultigraph,
                                 games: Iterable[Sequence[int]] | None = None, *,
                                 samples: int = 500, min_chips: int = 0,
                                 max_chips: int = 12, seed: int = 0,
                                 max_rounds: int = DEFAULT_MAX_ROUNDS) -> AuditReport:
    """Check per-period fire counts of games with period above 1.

    On each such game every vertex must fire, the fire counts divided by
    their gcd must equal the solver's minimal kernel vector, and on the
    useful orientations vertex ``v_3`` (K_n) or ``v_4`` (K_{a,a}) must fire
    most.  Without explicit ``games``, ``samples`` configurations are drawn
    with a generator seeded by ``seed`` by dropping between ``min_chips`` and
    ``max_chips`` chips on uniformly random vertices.
    """
    if not is_strongly_connected(g):
        raise ContractError("fire-count audit needs a strongly connected graph")
    t0 = time.perf_counter()
    if games is None:
        rng = random.Random(seed)
        games = [random_configuration(rng, g.vertex_count, min_chips, max_chips)
                 for _ in range(samples)]
    else:
        games = [tuple(c) for c in games]
    expected = minimal_positive_kernel_vector(g).counts
    family = useful_family(g)
    top = None
    if family and family[0] == "complete" and family[1] >= 4:
        top = 2
    elif family and family[0] == "bipartite" and family[1] >= 3:
        top = 3
    violations = []
    checked = 0
    periods: Counter = Counter()
    exhausted = 0
    for c in games:
        try:
            s = detect_period(g, c, max_rounds)
        except BudgetExhausted:
            exhausted += 1
            continue
        periods[s.period] += 1
        if s.period == 1:
            continue
        checked += 1
        f = s.fire_counts
        problems = []
        if min(f) < 1:
            problems.append("some vertex never fires")
        gcd = math.gcd(*f)
        if gcd == 0 or tuple(x // gcd for x in f) != expected:
            problems.append("normalized fire counts differ from the kernel vector")
        if top is not None and f[top] != max(f):
            problems.append(f"vertex index {top} does not fire most")
        if problems:
            violations.append({"configuration": list(c), "fire_counts": list(f),
                               "problems": problems})
    return AuditReport(
        claim="fire counts of periodic games are positive multiples of the kernel vector",
        instances_checked=checked,
        violations=violations,
        parameters={"edges": [list(e) for e in g.edges], "vertices": g.vertex_count,
                    "samples": len(games), "min_chips": min_chips,
                    "max_chips": max_chips, "seed": seed, "max_rounds": max_rounds},
        elapsed=time.perf_counter() - t0,
        observations={"kernel_vector": list(expected),
                      "family": list(family) if family else None,
                      "period_histogram": {str(p): k for p, k in sorted(periods.items())},
                      "budget_exhausted": exhausted},
        complete=exhausted == 0)
