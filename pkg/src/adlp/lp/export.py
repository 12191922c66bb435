"""Plain-text export in CPLEX LP format.

Variable names: ``y_s_t`` is the AUX pair {s, t} (canonical Pauli indices, s <= t);
``A_i_k`` and ``B_i_k`` are the enumerators at the k-th damping value divided by
gamma_k^i. Row names follow ``LPProblem.eq_names`` / ``ub_names``.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from adlp.lp.problem import LPProblem

_TERMS_PER_LINE = 6


def _num(v: float) -> str:
    return repr(float(v))


def _row(out: io.TextIOBase, name: str, row: sp.csr_matrix, names: list[str], sense: str, rhs: float) -> None:
    out.write(f" {name}:")
    for k, (j, v) in enumerate(zip(row.indices, row.data)):
        if k and k % _TERMS_PER_LINE == 0:
            out.write("\n  ")
        sign = "-" if v < 0 else "+"
        out.write(f" {sign} {_num(abs(v))} {names[j]}")
    out.write(f" {sense} {_num(rhs)}\n")


def write_lp(p: LPProblem, out: io.TextIOBase) -> None:
    q = p.query
    names = p.var_names()
    out.write(f"\\ n={q.n} M={q.M} t={q.t} c={q.c!r} gammas={list(q.gammas)} set={q.constraint_set}\n")
    out.write("\\ A_i_k = A_i / gamma_k^i, B_i_k = B_i / gamma_k^i, y_s_t = tr(sP) tr(tP)\n")
    out.write("Minimize\n obj: 0 y_0_0\nSubject To\n")
    for r, name in enumerate(p.eq_names):
        _row(out, name, p.A_eq.getrow(r), names, "=", p.b_eq[r])
    for r, name in enumerate(p.ub_names):
        _row(out, name, p.A_ub.getrow(r), names, "<=", p.b_ub[r])
    out.write("Bounds\n")
    for j, name in enumerate(names):
        lo, hi = p.lb[j], p.ub[j]
        if lo == hi:
            out.write(f" {name} = {_num(lo)}\n")
        elif np.isinf(lo) and np.isinf(hi):
            out.write(f" {name} free\n")
        elif np.isinf(lo):
            out.write(f" -inf <= {name} <= {_num(hi)}\n")
        elif np.isinf(hi):
            out.write(f" {name} >= {_num(lo)}\n")
        else:
            out.write(f" {_num(lo)} <= {name} <= {_num(hi)}\n")
    out.write("End\n")


def export_lp(p: LPProblem, destination: str | Path | io.TextIOBase) -> None:
    if isinstance(destination, (str, Path)):
        with open(destination, "w") as fh:
            write_lp(p, fh)
    else:
        write_lp(p, destination)


def export_lp_text(p: LPProblem) -> str:
    buf = io.StringIO()
    write_lp(p, buf)
    return buf.getvalue()
