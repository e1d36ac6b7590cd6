"""Line-oriented text format for games, and DOT export.

Grammar::

    file   = header, { edge | chips | meta } ;
    header = ("digraph" | "graph"), SP, int ;
    edge   = "e", SP, int, SP, int ;
    chips  = "chips", SP, int, SP, int ;
    meta   = ("designated", SP, int) | ("period", SP, int) ;

Blank lines and ``#`` comments are ignored.  Unlisted vertices hold zero
chips.  In a ``graph`` file, ``e u v`` is an undirected edge.
"""

from __future__ import annotations

from .constructions import GadgetGame
from .errors import ChipFiringError, GameFileError
from .graph import DirectedMultigraph, UndirectedGraph


def _ints(parts, lineno, count):
    if len(parts) != count:
        raise GameFileError(f"expected {count} integer field(s), got {len(parts)}", lineno)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GameFileError("malformed integer", lineno) from None


def parse_game_file(text: str) -> GadgetGame:
    header = None
    n = 0
    edges = []
    chips: dict[int, int] = {}
    designated = period = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0]
        if header is None:
            if word not in ("digraph", "graph"):
                raise GameFileError("file must start with 'digraph N' or 'graph N'", lineno)
            (n,) = _ints(parts[1:], lineno, 1)
            if n < 0:
                raise GameFileError("vertex count must be nonnegative", lineno)
            header = word
            continue
        if word == "e":
            u, v = _ints(parts[1:], lineno, 2)
            if not (0 <= u < n and 0 <= v < n):
                raise GameFileError("vertex index out of range", lineno)
            if u == v:
                raise GameFileError("self-loop", lineno)
            edges.append((u, v))
        elif word == "chips":
            v, k = _ints(parts[1:], lineno, 2)
            if not 0 <= v < n:
                raise GameFileError("vertex index out of range", lineno)
            if k < 0:
                raise GameFileError("negative chip count", lineno)
            if v in chips:
                raise GameFileError(f"duplicate chips record for vertex {v}", lineno)
            chips[v] = k
        elif word == "designated":
            (designated,) = _ints(parts[1:], lineno, 1)
            if not 0 <= designated < n:
                raise GameFileError("vertex index out of range", lineno)
        elif word == "period":
            (period,) = _ints(parts[1:], lineno, 1)
            if period < 1:
                raise GameFileError("period must be positive", lineno)
        else:
            raise GameFileError(f"unknown directive {word!r}", lineno)
    if header is None:
        raise GameFileError("empty game file", 1)
    try:
        g = (DirectedMultigraph(n, edges) if header == "digraph"
             else UndirectedGraph(n, edges))
        return GadgetGame(g, tuple(chips.get(v, 0) for v in range(n)),
                          designated, period)
    except ChipFiringError as exc:
        raise GameFileError(str(exc)) from exc


def write_game_file(game: GadgetGame) -> str:
    """Canonical text: sorted edges, nonzero chips by vertex, then annotations."""
    g = game.graph
    lines = []
    if game.label:
        lines.append(f"# {game.label}")
    lines.append(f"{'digraph' if game.directed else 'graph'} {g.vertex_count}")
    lines += [f"e {u} {v}" for u, v in g.edges]
    lines += [f"chips {v} {k}" for v, k in enumerate(game.initial) if k]
    if game.designated_vertex is not None:
        lines.append(f"designated {game.designated_vertex}")
    if game.predicted_period is not None:
        lines.append(f"period {game.predicted_period}")
    return "\n".join(lines) + "\n"


def export_dot(game: GadgetGame) -> str:
    """DOT source with each vertex labelled ``index:chips``."""
    directed = game.directed
    arrow = "->" if directed else "--"
    out = [f"{'digraph' if directed else 'graph'} G {{"]
    for v, k in enumerate(game.initial):
        attrs = f'label="{v}:{k}"'
        if v == game.designated_vertex:
            attrs += ", peripheries=2"
        out.append(f"  {v} [{attrs}];")
    out += [f"  {u} {arrow} {v};" for u, v in game.graph.edges]
    out.append("}")
    return "\n".join(out) + "\n"
