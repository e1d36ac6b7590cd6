"""Periods on directed cycles: exhaustive check plus one game per divisor."""

from chipfire import audit_cycle_periods, cycle_divisor_game, detect_period


def main():
    for n in range(2, 11):
        rep = audit_cycle_periods(n)
        print(f"C_{n}: {rep.instances_checked} games, periods seen "
              f"{rep.observations['observed_periods']}, ok={rep.passed}")

    game = cycle_divisor_game(6, 3)
    s = detect_period(game.graph, game.initial)
    print(f"\n{game.label}: chips {game.initial} -> period {s.period}")


if __name__ == "__main__":
    main()
