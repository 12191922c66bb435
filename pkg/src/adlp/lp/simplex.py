"""Dense two-phase tableau simplex for standard-form programs ``A x = b, x >= 0``.

Pricing is Dantzig's rule, falling back to Bland's smallest-index rule after a run of
degenerate pivots so that cycling cannot occur. The basis is periodically refactored
from the original data to keep round-off from accumulating in the tableau.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SolverConfig:
    feasibility_tol: float = 1e-7
    pivot_tol: float = 1e-9
    optimality_tol: float = 1e-9
    degenerate_switch: int = 50
    refactor_every: int = 200
    max_iter: int | None = None


@dataclass
class SimplexResult:
    status: str  # "optimal", "infeasible", "unbounded" or "iteration_limit"
    x: np.ndarray | None
    basis: np.ndarray
    phase1_objective: float
    # Farkas multipliers for the rows of (A, b) when infeasible: u @ A <= 0, u @ b > 0
    farkas: np.ndarray | None
    iterations: int


class _Tableau:
    def __init__(self, A: np.ndarray, b: np.ndarray, basis: np.ndarray, cost: np.ndarray, config: SolverConfig):
        self.A = A
        self.b = b
        self.basis = basis.copy()
        self.cost = cost
        self.config = config
        self.iterations = 0
        self.eligible = np.ones(A.shape[1], dtype=bool)
        self.refactor()

    def refactor(self) -> None:
        B = self.A[:, self.basis]
        self.T = np.linalg.solve(B, np.column_stack([self.A, self.b]))
        self.T[:, -1] = np.maximum(self.T[:, -1], 0.0)
        self.set_cost(self.cost)

    def set_cost(self, cost: np.ndarray) -> None:
        self.cost = cost
        cB = cost[self.basis]
        self.d = cost - cB @ self.T[:, :-1]
        self.d[self.basis] = 0.0

    @property
    def rhs(self) -> np.ndarray:
        return self.T[:, -1]

    def pivot(self, r: int, q: int) -> None:
        T = self.T
        T[r] /= T[r, q]
        col = T[:, q].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        self.d -= self.d[q] * T[r, :-1]
        self.d[q] = 0.0
        self.basis[r] = q
        self.iterations += 1

    def run(self, max_iter: int) -> str:
        cfg = self.config
        degenerate = 0
        while True:
            if self.iterations >= max_iter:
                return "iteration_limit"
            if self.iterations and self.iterations % cfg.refactor_every == 0:
                self.refactor()
            d = np.where(self.eligible, self.d, 0.0)
            candidates = np.flatnonzero(d < -cfg.optimality_tol)
            if candidates.size == 0:
                return "optimal"
            bland = degenerate >= cfg.degenerate_switch
            q = int(candidates[0]) if bland else int(candidates[np.argmin(d[candidates])])
            col = self.T[:, q]
            rows = np.flatnonzero(col > cfg.pivot_tol)
            if rows.size == 0:
                return "unbounded"
            ratios = self.rhs[rows] / col[rows]
            theta = ratios.min()
            tied = rows[ratios <= theta + 1e-12 * max(1.0, theta)]
            if bland:
                r = int(tied[np.argmin(self.basis[tied])])
            else:
                r = int(tied[np.argmax(np.abs(col[tied]))])
            degenerate = degenerate + 1 if theta <= cfg.pivot_tol else 0
            self.pivot(r, q)


def _identity_columns(A: np.ndarray) -> dict[int, int]:
    """Map row -> index of a column equal to the unit vector of that row."""
    found: dict[int, int] = {}
    nnz = np.count_nonzero(A, axis=0)
    for j in np.flatnonzero(nnz == 1):
        r = int(np.flatnonzero(A[:, j])[0])
        if A[r, j] == 1.0 and r not in found:
            found[r] = int(j)
    return found


def two_phase(
    A: np.ndarray,
    b: np.ndarray,
    c: np.ndarray | None = None,
    config: SolverConfig = SolverConfig(),
) -> SimplexResult:
    """Minimize ``c @ x`` subject to ``A x = b, x >= 0`` (pure feasibility when c is None)."""
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    m, n = A.shape
    flip = np.where(b < 0, -1.0, 1.0)
    A *= flip[:, None]
    b *= flip

    units = _identity_columns(A)
    art_rows = [r for r in range(m) if r not in units]
    art = np.zeros((m, len(art_rows)))
    art[art_rows, np.arange(len(art_rows))] = 1.0
    Afull = np.hstack([A, art])
    basis = np.array([units.get(r, -1) for r in range(m)])
    basis[art_rows] = n + np.arange(len(art_rows))
    cost1 = np.zeros(n + len(art_rows))
    cost1[n:] = 1.0

    max_iter = config.max_iter or 50 * (m + n) + 1000
    tab = _Tableau(Afull, b, basis, cost1, config)
    tab.eligible[n:] = False
    status = tab.run(max_iter)
    if status == "iteration_limit":
        return SimplexResult(status, None, tab.basis, np.nan, None, tab.iterations)

    # recompute primal and dual values from the final basis rather than the tableau
    B = Afull[:, tab.basis]
    xB = np.linalg.solve(B, b)
    u = np.linalg.solve(B.T, cost1[tab.basis])
    phase1 = float(cost1[tab.basis] @ xB)
    if phase1 > config.feasibility_tol:
        return SimplexResult("infeasible", None, tab.basis, phase1, u * flip, tab.iterations)

    if c is not None and np.any(c):
        # drive zero-level artificials out of the basis, dropping redundant rows
        tab.refactor()
        keep = np.ones(m, dtype=bool)
        for r in range(m):
            if tab.basis[r] >= n:
                row = np.abs(tab.T[r, :n])
                j = int(np.argmax(row))
                if row[j] > config.pivot_tol:
                    tab.pivot(r, j)
                else:
                    keep[r] = False
        cost2 = np.zeros(Afull.shape[1])
        cost2[:n] = c
        if not keep.all():
            idx = np.flatnonzero(keep)
            sub = _Tableau(A[idx][:, :n], b[idx], tab.basis[idx], cost2[:n], config)
            sub.iterations = tab.iterations
            tab, Afull, b = sub, A[idx][:, :n], b[idx]
        else:
            tab.set_cost(cost2)
        status = tab.run(max_iter)
        if status != "optimal":
            return SimplexResult(status, None, tab.basis, phase1, None, tab.iterations)
        xB = np.linalg.solve(Afull[:, tab.basis], b)

    x = np.zeros(Afull.shape[1])
    x[tab.basis] = xB
    x = np.maximum(x[:n], 0.0)
    return SimplexResult("optimal", x, tab.basis, phase1, None, tab.iterations)
