"""Build games whose designated vertex fires in a prescribed pattern."""

import sys

from chipfire import atomic_firing_sequence, detect_period, realize_sequence


def show(bits, force=False):
    game = realize_sequence(bits, force_gadget=force)
    s = detect_period(game.graph, game.initial)
    seq = atomic_firing_sequence(s, game.designated_vertex)
    print(f"{bits:>10}  {game.graph.vertex_count:3d} vertices  period={s.period}  "
          f"observed={seq}  ({game.label})")


def main(argv):
    strings = argv or ["1", "10", "11", "100", "1010", "110110", "10010"]
    for bits in strings:
        show(bits)
    print("\nhub gadget forced on a non-repeating string:")
    show("1011", force=True)


if __name__ == "__main__":
    main(sys.argv[1:])
