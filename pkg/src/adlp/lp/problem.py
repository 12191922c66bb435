"""Assembly of the multi-gamma feasibility program.

Enumerator variables are stored gamma-normalized: ``A_i_k`` holds A_i / gamma_k^i and
``B_i_k`` holds B_i / gamma_k^i. With the connection rows scaled the same way, every
coefficient and right-hand side stays O(1) down to gamma ~ 1e-4.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
import scipy.sparse as sp

from adlp import connection
from adlp.enumerator import AuxVector, EnumeratorVector
from adlp.pauli import num_pairs, pair_index

ConstraintSet = Literal["paper", "strengthened"]
CONSTRAINT_SETS = ("paper", "strengthened")
MAX_LP_QUBITS = 6


class QueryError(ValueError):
    pass


@dataclass(frozen=True)
class FeasibilityQuery:
    n: int
    M: int
    t: int
    c: float
    gammas: tuple[float, ...]
    constraint_set: ConstraintSet = "paper"

    def __post_init__(self) -> None:
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        if self.constraint_set == "paper-literal":
            object.__setattr__(self, "constraint_set", "paper")
        if not 1 <= self.n <= MAX_LP_QUBITS:
            raise QueryError(f"n must be in [1, {MAX_LP_QUBITS}], got {self.n}")
        if not 1 <= self.M <= 2**self.n:
            raise QueryError(f"M must be in [1, 2^n], got {self.M}")
        if not 0 <= self.t <= self.n:
            raise QueryError(f"t must be in [0, n], got {self.t}")
        if not self.c >= 0 or math.isinf(self.c):
            raise QueryError(f"c must be finite and non-negative, got {self.c}")
        if not self.gammas:
            raise QueryError("at least one damping value is required")
        if len(set(self.gammas)) != len(self.gammas):
            raise QueryError(f"damping values must be distinct: {self.gammas}")
        if any(not 0.0 < g < 1.0 for g in self.gammas):
            raise QueryError(f"damping values must lie in (0, 1): {self.gammas}")
        if self.constraint_set not in CONSTRAINT_SETS:
            raise QueryError(f"unknown constraint set {self.constraint_set!r}")

    def with_c(self, c: float) -> FeasibilityQuery:
        return FeasibilityQuery(self.n, self.M, self.t, c, self.gammas, self.constraint_set)

    def with_gammas(self, gammas: Sequence[float]) -> FeasibilityQuery:
        return FeasibilityQuery(self.n, self.M, self.t, self.c, tuple(gammas), self.constraint_set)


@dataclass(eq=False)
class LPProblem:
    """Rows ``A_eq x = b_eq``, ``A_ub x <= b_ub`` and bounds ``lb <= x <= ub``."""

    query: FeasibilityQuery
    A_eq: sp.csr_matrix
    b_eq: np.ndarray
    eq_names: list[str]
    A_ub: sp.csr_matrix
    b_ub: np.ndarray
    ub_names: list[str]
    lb: np.ndarray
    ub: np.ndarray
    # gamma_k^i for each enumerator variable, to undo the normalization
    scales: np.ndarray = field(repr=False, default_factory=lambda: np.zeros(0))

    @property
    def n_aux(self) -> int:
        return num_pairs(self.query.n)

    @property
    def n_vars(self) -> int:
        return len(self.lb)

    def enum_index(self, kind: str, i: int, k: int) -> int:
        n = self.query.n
        return self.n_aux + k * 2 * (n + 1) + (0 if kind == "A" else n + 1) + i

    def var_name(self, j: int) -> str:
        if j < self.n_aux:
            s, t = connection._unpair(j, self.query.n)
            return f"y_{s}_{t}"
        r = j - self.n_aux
        n1 = self.query.n + 1
        k, r = divmod(r, 2 * n1)
        kind, i = ("A", r) if r < n1 else ("B", r - n1)
        return f"{kind}_{i}_{k}"

    def var_names(self) -> list[str]:
        n = self.query.n
        rows, cols = np.triu_indices(4**n)
        names = [f"y_{s}_{t}" for s, t in zip(rows.tolist(), cols.tolist())]
        names.extend(self.var_name(j) for j in range(self.n_aux, self.n_vars))
        return names

    def residuals(self, x: np.ndarray) -> dict[str, float]:
        """Largest violation of each constraint family at ``x``."""
        eq = np.abs(self.A_eq @ x - self.b_eq)
        ub = np.maximum(self.A_ub @ x - self.b_ub, 0.0)
        lo = np.maximum(self.lb - x, 0.0)
        hi = np.maximum(x - self.ub, 0.0)
        return {
            "equality": float(eq.max(initial=0.0)),
            "inequality": float(ub.max(initial=0.0)),
            "bounds": float(max(lo.max(initial=0.0), hi.max(initial=0.0))),
        }

    def max_violation(self, x: np.ndarray) -> float:
        return max(self.residuals(x).values())

    def unscaled_enumerators(self, x: np.ndarray) -> list[dict]:
        """Per-gamma A and B vectors recovered from a point of the program."""
        n = self.query.n
        out = []
        for k, g in enumerate(self.query.gammas):
            A = [x[self.enum_index("A", i, k)] * g**i for i in range(n + 1)]
            B = [x[self.enum_index("B", i, k)] * g**i for i in range(n + 1)]
            out.append({"gamma": g, "A": [float(v) for v in A], "B": [float(v) for v in B]})
        return out


def assemble(q: FeasibilityQuery) -> LPProblem:
    n, M, t, c = q.n, q.M, q.t, q.c
    strengthened = q.constraint_set == "strengthened"
    n_aux = num_pairs(n)
    n1 = n + 1
    n_vars = n_aux + len(q.gammas) * 2 * n1
    diag = pair_index(np.arange(4**n), np.arange(4**n), n)

    lb = np.full(n_vars, -np.inf)
    ub = np.full(n_vars, np.inf)
    lb[n_aux:] = 0.0  # A_i, B_i are non-negative
    if strengthened:
        lb[diag] = 0.0
        ub[diag] = float(M**2)
    lb[0] = ub[0] = float(M**2)  # y_{I,I} = tr(P)^2

    eq_blocks, b_eq, eq_names = [], [], []
    ub_rows: list[tuple[dict[int, float], float, str]] = []
    scales = np.ones(n_vars)

    def enum(kind: str, i: int, k: int) -> int:
        return n_aux + k * 2 * n1 + (0 if kind == "A" else n1) + i

    for k, g in enumerate(q.gammas):
        for kind, weight in (("A", M**2), ("B", M)):
            rows = connection.build(kind, n, g, scaled=True).rows
            cols = sp.csr_matrix(
                (np.full(n1, float(weight)), (np.arange(n1), [enum(kind, i, k) - n_aux for i in range(n1)])),
                shape=(n1, n_vars - n_aux),
            )
            eq_blocks.append(sp.hstack([-rows, cols], format="csr"))
            b_eq.extend([0.0] * n1)
            eq_names.extend(f"eq{kind}_{i}_{k}" for i in range(n1))
            for i in range(n1):
                scales[enum(kind, i, k)] = g**i

        for i in range(t + 1):
            ub_rows.append(({enum("B", i, k): 1.0, enum("A", i, k): -1.0}, c * g ** (t + 1 - i), f"relax_{i}_{k}"))
        for i in range(n1):
            ub_rows.append(({enum("B", i, k): 1.0}, float(math.comb(n, i)), f"binom_{i}_{k}"))
        ub_rows.append(({enum("B", i, k): g**i for i in range(n1)}, 1.0, f"fidelity_{k}"))
        if strengthened:
            ub_rows.append(({enum("A", 0, k): -1.0}, -((1.0 - g) ** n), f"afloor_{k}"))
            for i in range(n1):
                ub_rows.append(({enum("A", i, k): 1.0, enum("B", i, k): -1.0}, 0.0, f"bgeqa_{i}_{k}"))

    A_eq = sp.vstack(eq_blocks, format="csr")
    if strengthened:
        purity = sp.csr_matrix((np.ones(4**n), (np.zeros(4**n, dtype=int), diag)), shape=(1, n_vars))
        A_eq = sp.vstack([A_eq, purity], format="csr")
        b_eq.append(float(2**n * M))
        eq_names.append("purity")

    data, ri, ci = [], [], []
    for r, (coefs, _, _) in enumerate(ub_rows):
        for j, v in coefs.items():
            ri.append(r)
            ci.append(j)
            data.append(v)
    A_ub = sp.csr_matrix((data, (ri, ci)), shape=(len(ub_rows), n_vars))

    return LPProblem(
        query=q,
        A_eq=A_eq,
        b_eq=np.array(b_eq),
        eq_names=eq_names,
        A_ub=A_ub,
        b_ub=np.array([r[1] for r in ub_rows]),
        ub_names=[r[2] for r in ub_rows],
        lb=lb,
        ub=ub,
        scales=scales,
    )


def witness_from_code(
    problem: LPProblem,
    aux: AuxVector,
    enumerators: Sequence[tuple[EnumeratorVector, EnumeratorVector]],
) -> np.ndarray:
    """Point of the program built from a real code's AUX vector and enumerators.

    ``enumerators`` holds one (A, B) pair per gamma of the query, in order.
    """
    q = problem.query
    if len(enumerators) != len(q.gammas):
        raise ValueError("need one enumerator pair per damping value")
    x = np.zeros(problem.n_vars)
    x[: problem.n_aux] = aux.reduced()
    for k, (A, B) in enumerate(enumerators):
        for i in range(q.n + 1):
            x[problem.enum_index("A", i, k)] = A.values[i] / problem.scales[problem.enum_index("A", i, k)]
            x[problem.enum_index("B", i, k)] = B.values[i] / problem.scales[problem.enum_index("B", i, k)]
    return x
