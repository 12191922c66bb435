"""Probe the n=3, M=2, t=1 instance: which c do concrete codes need?

The repetition code span{|000>, |111>} is a feasible point of the program for
any c above its own (B_0 - A_0) / gamma^2, so no sound verdict can rule out a
larger c. Random codes are sampled for comparison.
"""

import argparse

import numpy as np

from adlp import codes
from adlp.enumerator import ad_enumerators, aux_vector
from adlp.lp import FeasibilityQuery, assemble, witness_from_code

GAMMAS = (0.1, 0.05, 0.01, 1e-4)


def required_c(code, gammas, t=1):
    worst = 0.0
    for g in gammas:
        A, B = ad_enumerators(code, g)
        gap = (B.values[: t + 1] - A.values[: t + 1]).max()
        worst = max(worst, gap / g ** (t + 1))
    return worst


def repetition_code():
    zero, one = np.zeros(8), np.zeros(8)
    zero[0], one[7] = 1.0, 1.0
    return codes.validate(3, [zero, one], name="repetition3")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rep = repetition_code()
    c = required_c(rep, GAMMAS)
    print(f"repetition code needs c >= {c:.6g}")
    for s in ("paper", "strengthened"):
        p = assemble(FeasibilityQuery(3, 2, 1, 9.8e4, GAMMAS, s))
        x = witness_from_code(p, aux_vector(rep), [ad_enumerators(rep, g) for g in GAMMAS])
        print(f"  its witness in the {s} set at c=9.8e4: max violation {p.max_violation(x):.2e}")

    rng = np.random.default_rng(args.seed)
    cs = [required_c(codes.random_code(3, 2, rng), GAMMAS) for _ in range(args.samples)]
    print(f"random codes: min c {min(cs):.4g}, median {np.median(cs):.4g}, max {max(cs):.4g}")


if __name__ == "__main__":
    main()
