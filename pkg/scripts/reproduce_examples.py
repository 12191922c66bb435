"""Print enumerators for the built-in codes and the headline LP verdicts."""

import numpy as np

from adlp import codes
from adlp.enumerator import ad_enumerators
from adlp.lp import FeasibilityQuery, assemble, solve


def show_enumerators(name, gamma):
    A, B = ad_enumerators(codes.builtin(name), gamma)
    print(f"{name} gamma={gamma}")
    print("  A =", np.array2string(A.values, precision=6))
    print("  B =", np.array2string(B.values, precision=6))


def show_verdict(label, q):
    v = solve(assemble(q))
    print(f"{label}: {v.status.value} ({v.iterations} pivots)")


def main():
    show_enumerators("leung4", 0.1)
    show_enumerators("shor9", 1e-3)
    show_verdict("n=1 M=1 t=0 c=1e6", FeasibilityQuery(1, 1, 0, 1e6, (0.1,)))
    show_verdict("n=4 M=2 t=1 c=3/64", FeasibilityQuery(4, 2, 1, 3 / 64, (0.1, 0.05), "strengthened"))
    for s in ("paper", "strengthened"):
        show_verdict(f"n=3 M=2 t=1 c=9.8e4 [{s}]", FeasibilityQuery(3, 2, 1, 9.8e4, (0.1, 0.05, 0.01, 1e-4), s))


if __name__ == "__main__":
    main()
