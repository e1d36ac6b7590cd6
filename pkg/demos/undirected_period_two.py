"""Period-2 games on undirected graphs, and why K_4 orientations never give one."""

from chipfire import (UndirectedGraph, audit_no_period2_orientations, complete_graph,
                      cycle_graph, detect_period, undirected_t2_game)


def main():
    # a path with chords; the chords create odd cycles
    n = 8
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, 2), (1, 5), (3, 7), (2, 6)]
    g = UndirectedGraph(n, edges)
    game = undirected_t2_game(g, 0)
    s = detect_period(g, game.initial)
    print("graph edges:", g.edges)
    print("start:", game.initial, "period:", s.period, "fire counts:", s.fire_counts)

    for base, name in [(complete_graph(4), "K_4"), (cycle_graph(4), "C_4")]:
        rep = audit_no_period2_orientations(base, 8)
        print(f"{name}: {rep.observations['orientations']} orientations, "
              f"{rep.instances_checked} games, period-2 games found: "
              f"{rep.observations['violation_count']}")


if __name__ == "__main__":
    main()
