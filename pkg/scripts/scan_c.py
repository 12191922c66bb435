"""Bisect for the largest ruled-out c on a small grid of instances."""

import argparse
import logging

from adlp.lp import FeasibilityQuery, NoBracketError, max_ruled_out_c


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gammas", default="0.1,0.05,0.01")
    ap.add_argument("--constraint-set", default="strengthened")
    ap.add_argument("--c-hi", type=float, default=1e5)
    ap.add_argument("--resolution", type=float, default=1e-3)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    gammas = tuple(float(g) for g in args.gammas.split(","))

    for n, M, t in [(1, 2, 1), (2, 2, 1), (2, 4, 1), (3, 2, 1)]:
        q = FeasibilityQuery(n, M, t, 0.0, gammas, args.constraint_set)
        try:
            c = max_ruled_out_c(q, 0.0, args.c_hi, args.resolution)
            print(f"n={n} M={M} t={t}: ruled out up to c={c:.6g}")
        except NoBracketError:
            print(f"n={n} M={M} t={t}: feasible already at c=0")


if __name__ == "__main__":
    main()
