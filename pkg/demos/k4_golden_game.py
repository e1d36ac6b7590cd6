"""Walk through the period-4 game on the useful orientation of K_4."""

from chipfire import detect_period, minimal_positive_kernel_vector, run_trajectory, useful_complete


def main():
    g = useful_complete(4)
    print("edges:", g.edges)
    start = (1, 0, 2, 2)
    rec = run_trajectory(g, start, 4)
    for t, c in enumerate(rec.configurations):
        fired = rec.firings[t] if t < len(rec.firings) else ()
        print(f"t={t}  chips={c}  fired={fired}")

    summary = detect_period(g, start)
    print(f"transient={summary.transient} period={summary.period}")
    print("fire counts per period:", summary.fire_counts)
    # the balance system predicts the same vector without simulating
    print("kernel vector:         ", minimal_positive_kernel_vector(g).counts)


if __name__ == "__main__":
    main()
