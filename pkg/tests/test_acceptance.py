"""Exit criteria.  Each test checks one criterion at its stated tolerance and
time budget and records a PASS/FAIL line shown in the terminal summary."""

import contextlib
import itertools
import math
import random
import time

import pytest

from chipfire.audit import (audit_cycle_periods, audit_no_period2_orientations,
                            complete_graph, cycle_graph)
from chipfire.constructions import (bipartite_with_sink, directed_cycle, realize_sequence,
                                    undirected_t2_game, useful_bipartite, useful_complete)
from chipfire.dynamics import conservation_checks, run_trajectory
from chipfire.errors import UnrealizableSequence
from chipfire.graph import DirectedMultigraph, scc_partition
from chipfire.linalg import (bipartite_lower_bound, complete_graph_recurrence,
                             minimal_positive_kernel_vector)
from chipfire.period import atomic_firing_sequence, detect_period

from conftest import (ACCEPTANCE_LINES, K4_START, random_connected_graph, random_dag,
                      random_strongly_connected)

pytestmark = pytest.mark.acceptance


@pytest.fixture(autouse=True)
def _conserve():
    # every stepper compiled during these tests asserts chip conservation per round
    with conservation_checks():
        yield


@contextlib.contextmanager
def criterion(number, title, budget_s):
    status = "FAIL"
    start = time.perf_counter()
    elapsed = None
    try:
        clock = {}
        yield clock
        elapsed = clock.get("elapsed", time.perf_counter() - start)
        assert elapsed < budget_s, f"took {elapsed:.4f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        if elapsed is None:
            elapsed = time.perf_counter() - start
        line = f"[{status}] AC{number:>2} {title} ({elapsed * 1000:.1f} ms, budget {budget_s * 1000:g} ms)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_ac01_k4_golden_game(k4):
    with criterion(1, "K_4 golden game", 1e-3) as clock:
        t0 = time.perf_counter()
        rec = run_trajectory(useful_complete(4), K4_START, 4)
        s = detect_period(useful_complete(4), K4_START)
        clock["elapsed"] = time.perf_counter() - t0
        assert useful_complete(4) == k4
        assert rec.configurations == ((1, 0, 2, 2), (2, 1, 1, 1), (0, 1, 2, 2),
                                      (1, 1, 2, 1), (1, 0, 2, 2))
        assert (s.transient, s.period, s.fire_counts) == (0, 4, (1, 3, 4, 2))


def test_ac02_recurrence_equals_solver():
    with criterion(2, "recurrence == solver f_3, n = 4..12", 1.0):
        values = {}
        for n in range(4, 13):
            f = minimal_positive_kernel_vector(useful_complete(n))
            assert f[2] == complete_graph_recurrence(n)
            values[n] = f[2]
        assert (values[4], values[5], values[6]) == (4, 17, 89)


def test_ac03_factorial_growth():
    with criterion(3, "T_n / T_(n-1) >= n-1, n = 4..20", 1.0):
        for n in range(4, 21):
            assert complete_graph_recurrence(n) >= (n - 1) * complete_graph_recurrence(n - 1)


def test_ac04_cycle_periods():
    with criterion(4, "directed cycle periods are the divisors, n = 2..10", 30.0):
        for n in range(2, 11):
            rep = audit_cycle_periods(n, n)
            assert rep.passed, rep.violations[:3]
            divisors = [i for i in range(1, n + 1) if n % i == 0]
            assert rep.observations["realized_divisors"] == divisors


def test_ac05_no_period_two_on_k4():
    with criterion(5, "no T = 2 on any K_4 orientation; contrast on C_4", 60.0):
        rep = audit_no_period2_orientations(complete_graph(4), 8)
        assert rep.passed and rep.complete
        assert rep.observations["orientations"] == 64
        contrast = audit_no_period2_orientations(cycle_graph(4), 8)
        assert not contrast.passed


def test_ac06_firing_sequence_realization():
    with criterion(6, "realize every string of length 1..8 containing a 1", 60.0):
        count = 0
        for length in range(1, 9):
            for bits in itertools.product("01", repeat=length):
                s = "".join(bits)
                if "1" not in s:
                    if length >= 2:
                        with pytest.raises(UnrealizableSequence):
                            realize_sequence(s)
                    continue
                game = realize_sequence(s)
                summary = detect_period(game.graph, game.initial)
                assert summary.period == length, s
                assert atomic_firing_sequence(summary, game.designated_vertex).bits == s
                count += 1
        assert count == sum(2 ** k - 1 for k in range(1, 9)) == 502
        zero = realize_sequence("0")
        assert detect_period(zero.graph, zero.initial).period == 1


def test_ac07_dag_stabilization():
    with criterion(7, "200 random DAGs reach T = 1", 10.0):
        rng = random.Random(2024)
        for _ in range(200):
            g = random_dag(rng, rng.randint(1, 12))
            chips = [rng.randint(0, 6) for _ in range(g.vertex_count)]
            assert detect_period(g, chips).period == 1


def test_ac08_undirected_period_two():
    with criterion(8, "undirected T = 2 game on 100 random connected graphs", 10.0):
        rng = random.Random(808)
        for _ in range(100):
            g = random_connected_graph(rng, rng.randint(2, 10), rng.uniform(0.1, 0.7))
            game = undirected_t2_game(g, rng.randrange(g.vertex_count))
            s = detect_period(g, game.initial)
            assert s.period == 2
            assert s.fire_counts == (1,) * g.vertex_count


def test_ac09_bipartite_bounds():
    with criterion(9, "bipartite f_4 maximal and T_a > (a-1) T_(a-1)", 1.0):
        assert bipartite_lower_bound(3) == 8
        for a in range(3, 9):
            f = minimal_positive_kernel_vector(useful_bipartite(a))
            assert f[3] == max(f)
        for a in range(4, 9):
            assert bipartite_lower_bound(a) > (a - 1) * bipartite_lower_bound(a - 1)


def test_ac10_sink_component_behaviour():
    with criterion(10, "non-sink vertices of K_{a,b} are passive", 10.0):
        rng = random.Random(10)
        for a, b in [(2, 3), (3, 4)]:
            g = bipartite_with_sink(a, b)
            sinks = scc_partition(g).sink_vertices()
            assert sinks == frozenset(range(2 * a))
            for _ in range(200):
                chips = [rng.randint(0, 6) for _ in range(g.vertex_count)]
                s = detect_period(g, chips)
                assert all(s.fire_counts[v] == 0 for v in range(g.vertex_count)
                           if v not in sinks)


def _mixed_graphs(rng):
    pool = [directed_cycle(n) for n in range(3, 7)]
    pool += [useful_complete(4), useful_complete(5), useful_bipartite(3),
             DirectedMultigraph(4, [(0, 1), (1, 2), (1, 3), (2, 0), (3, 0)])]
    pool += [random_strongly_connected(rng, rng.randint(3, 7), rng.randint(0, 6))
             for _ in range(12)]
    return pool


def test_ac11_solver_simulation_oracle():
    with criterion(11, "1000 periodic games: f / gcd == minimal kernel vector", 60.0):
        rng = random.Random(11)
        graphs = _mixed_graphs(rng)
        kernels = [minimal_positive_kernel_vector(g).counts for g in graphs]
        found = attempts = 0
        while found < 1000:
            attempts += 1
            assert attempts < 20000
            i = rng.randrange(len(graphs))
            g = graphs[i]
            total = rng.randint(sum(g.out_degree) // 2, 2 * sum(g.out_degree))
            chips = [0] * g.vertex_count
            for _ in range(total):
                chips[rng.randrange(g.vertex_count)] += 1
            s = detect_period(g, chips)
            if s.period == 1:
                continue
            found += 1
            gcd = math.gcd(*s.fire_counts)
            assert tuple(x // gcd for x in s.fire_counts) == kernels[i]
