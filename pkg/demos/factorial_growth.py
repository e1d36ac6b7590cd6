"""Compare the solver's f_3 on useful K_n with the closed recurrence."""

from chipfire import complete_graph_recurrence, minimal_positive_kernel_vector, useful_complete


def main():
    print(" n   f_3 (solver)   T_n (recurrence)   T_n / T_(n-1)")
    for n in range(4, 13):
        f3 = minimal_positive_kernel_vector(useful_complete(n))[2]
        t = complete_graph_recurrence(n)
        ratio = t / complete_graph_recurrence(n - 1)
        print(f"{n:2d}   {f3:12d}   {t:16d}   {ratio:8.2f}")


if __name__ == "__main__":
    main()
