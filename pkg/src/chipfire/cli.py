"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain or contract error,
3 audit violation, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import audit, constructions, gamefile
from .dynamics import run_trajectory
from .errors import BudgetExhausted, ChipFiringError
from .graph import UndirectedGraph
from .linalg import complete_graph_recurrence, minimal_positive_kernel_vector
from .period import DEFAULT_MAX_ROUNDS, atomic_firing_sequence, detect_period

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VIOLATION, EXIT_BUDGET = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _fmt(values) -> str:
    return ",".join(str(int(x)) for x in values)


def _load(path):
    with open(path) as fh:
        return gamefile.parse_game_file(fh.read())


def _cmd_simulate(args, out):
    game = _load(args.file)
    rec = run_trajectory(game.graph, game.initial, args.rounds)
    if args.trace:
        for t, c in enumerate(rec.configurations):
            line = f"round {t}: {_fmt(c)}"
            if t < len(rec.firings):
                line += f" fired={_fmt(rec.firings[t])}"
            out.write(line + "\n")
    else:
        out.write(f"round {args.rounds}: {_fmt(rec.configurations[-1])}\n")
    return EXIT_OK


def _cmd_period(args, out):
    game = _load(args.file)
    s = detect_period(game.graph, game.initial, args.max_rounds)
    out.write(f"transient={s.transient} period={s.period} f={_fmt(s.fire_counts)}\n")
    if game.designated_vertex is not None:
        seq = atomic_firing_sequence(s, game.designated_vertex)
        out.write(f"designated={game.designated_vertex} sequence={seq}\n")
    for v in range(game.graph.vertex_count):
        out.write(f"seq {v} {atomic_firing_sequence(s, v)}\n")
    return EXIT_OK


def _cmd_solve(args, out):
    game = _load(args.file)
    g = game.graph
    if isinstance(g, UndirectedGraph):
        g = g.as_digraph()
    f = minimal_positive_kernel_vector(g)
    top = max(range(len(f)), key=lambda i: (f[i], -i))
    out.write(f"f={_fmt(f)}\n")
    out.write(f"max={f.maximum} vertex={top}\n")
    family = audit.useful_family(g)
    if family and family[0] == "complete" and family[1] >= 4:
        t_n = complete_graph_recurrence(family[1])
        ok = "yes" if f[2] == t_n else "no"
        out.write(f"useful K_{family[1]}: f_3={f[2]} recurrence={t_n} match={ok}\n")
    elif family and family[0] == "bipartite":
        out.write(f"useful K_{{{family[1]},{family[1]}}}: f_4={f[3]}\n")
    return EXIT_OK


def _cmd_construct(args, out):
    kind = args.kind
    p = args.params
    try:
        if kind == "cycle":
            game = constructions.cycle_divisor_game(int(p[0]), int(p[1]))
        elif kind == "complete":
            g = constructions.useful_complete(int(p[0]))
            game = constructions.GadgetGame(g, (0,) * g.vertex_count,
                                            label=f"useful K_{p[0]}")
        elif kind == "bipartite":
            g = constructions.useful_bipartite(int(p[0]))
            game = constructions.GadgetGame(g, (0,) * g.vertex_count,
                                            label=f"useful K_{{{p[0]},{p[0]}}}")
        elif kind == "bipartite-sink":
            g = constructions.bipartite_with_sink(int(p[0]), int(p[1]))
            game = constructions.GadgetGame(g, (0,) * g.vertex_count,
                                            label=f"K_{{{p[0]},{p[1]}}} with useful sink")
        elif kind == "sequence":
            (bits,) = p
            game = constructions.realize_sequence(bits, force_gadget=args.force_gadget)
        elif kind == "undirected-t2":
            path, anchor = p
            base = _load(path).graph
            if not isinstance(base, UndirectedGraph):
                raise UsageError("undirected-t2 needs a 'graph' file")
            game = constructions.undirected_t2_game(base, int(anchor))
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown construction {kind}")
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ChipFiringError):
            raise
        raise UsageError(f"bad parameters for construct {kind}: {' '.join(p)}") from None
    out.write(gamefile.write_game_file(game))
    return EXIT_OK


def _cmd_recurrence(args, out):
    out.write(f"{complete_graph_recurrence(args.n)}\n")
    return EXIT_OK


def _cmd_audit(args, out):
    if args.claim == "no-t2":
        if args.graph:
            base = _load(args.graph).graph
            if not isinstance(base, UndirectedGraph):
                raise UsageError("no-t2 base must be a 'graph' file")
        elif args.cycle:
            base = audit.cycle_graph(args.cycle)
        else:
            base = audit.complete_graph(args.complete)
        report = audit.audit_no_period2_orientations(
            base, 8 if args.bound is None else args.bound, args.max_rounds)
    elif args.claim == "cycle-divisors":
        if args.target is None:
            raise UsageError("cycle-divisors needs N")
        report = audit.audit_cycle_periods(int(args.target), args.bound, args.max_rounds)
    else:
        if args.target is None:
            raise UsageError("fire-counts needs FILE")
        g = _load(args.target).graph
        report = audit.audit_stationary_fire_counts(
            g, samples=args.samples, min_chips=args.min_chips,
            max_chips=12 if args.bound is None else args.bound,
            seed=args.seed, max_rounds=args.max_rounds)
    out.write(report.to_json() + "\n")
    if not report.passed:
        return EXIT_VIOLATION
    if not report.complete:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_export_dot(args, out):
    out.write(gamefile.export_dot(_load(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chipfire", description="Parallel chip-firing games.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", help="run a game for a number of rounds")
    p.add_argument("file")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("period", help="detect transient, period and fire counts")
    p.add_argument("file")
    p.add_argument("--max-rounds", type=int, default=DEFAULT_MAX_ROUNDS)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("solve", help="minimal positive firing vector")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="emit a constructed game file")
    p.add_argument("kind", choices=["cycle", "complete", "bipartite", "bipartite-sink",
                                    "sequence", "undirected-t2"])
    p.add_argument("params", nargs="+")
    p.add_argument("--force-gadget", action="store_true",
                   help="use the hub gadget even for non-repeating strings")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("recurrence", help="lower-bound recurrence for useful K_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_recurrence)

    p = sub.add_parser("audit", help="exhaustive or sampled claim checks")
    p.add_argument("claim", choices=["no-t2", "cycle-divisors", "fire-counts"])
    p.add_argument("target", nargs="?", help="N for cycle-divisors, FILE for fire-counts")
    p.add_argument("--bound", type=int, help="total chip bound (max chips when sampling)")
    p.add_argument("--complete", type=int, default=4, help="no-t2 base K_N")
    p.add_argument("--cycle", type=int, help="no-t2 base: undirected N-cycle")
    p.add_argument("--graph", help="no-t2 base: undirected graph file")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--min-chips", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=DEFAULT_MAX_ROUNDS)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("export-dot", help="write DOT source for a game")
    p.add_argument("file")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def run_cli(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except BudgetExhausted as exc:
        err.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except (ChipFiringError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
