"""Feasibility verdicts for assembled programs.

The program is brought to standard form (shifted/split variables, slacks), handed to
the tableau simplex, and whatever comes back is re-checked against the original rows:
a witness by direct residual evaluation, an infeasibility claim by its Farkas
multipliers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from adlp.lp.problem import LPProblem
from adlp.lp.simplex import SolverConfig, two_phase


class Status(str, enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    NUMERICAL_FAILURE = "NumericalFailure"


@dataclass
class LPVerdict:
    status: Status
    x: np.ndarray | None = None
    certificate: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    phase1_objective: float = float("nan")
    iterations: int = 0
    message: str = ""

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    @property
    def infeasible(self) -> bool:
        return self.status is Status.INFEASIBLE

    def witness(self, problem: LPProblem, zero_tol: float = 0.0) -> dict[str, float] | None:
        if self.x is None:
            return None
        nz = np.flatnonzero(np.abs(self.x) > zero_tol)
        return {problem.var_name(int(j)): float(self.x[j]) for j in nz}

    def to_json(self, problem: LPProblem) -> dict:
        q = problem.query
        out = {
            "status": self.status.value,
            "c": q.c,
            "gammas": list(q.gammas),
            "constraintSet": q.constraint_set,
            "witness": self.witness(problem),
            "residuals": self.residuals,
            "phase1Objective": self.phase1_objective,
            "iterations": self.iterations,
        }
        if self.x is not None:
            out["enumerators"] = problem.unscaled_enumerators(self.x)
        if self.certificate:
            out["certificate"] = {k: v for k, v in self.certificate.items() if not isinstance(v, np.ndarray)}
        if self.message:
            out["message"] = self.message
        return out


@dataclass
class _StandardForm:
    A: np.ndarray
    b: np.ndarray
    offset: np.ndarray  # x = offset + D @ xs
    D_cols: list[tuple[int, float]]  # (original var, sign) per structural column
    n_eq: int
    n_ub: int


def _standard_form(p: LPProblem) -> _StandardForm:
    A_eq = p.A_eq.tocsc()
    A_ub = p.A_ub.tocsc()
    used = (np.diff(A_eq.indptr) > 0) | (np.diff(A_ub.indptr) > 0)
    lb, ub = p.lb, p.ub
    offset = np.zeros(p.n_vars)
    cols: list[tuple[int, float]] = []
    upper: list[tuple[int, float]] = []  # (structural column, bound) rows
    for j in range(p.n_vars):
        lo, hi = lb[j], ub[j]
        if lo == hi:
            offset[j] = lo
        elif np.isfinite(lo):
            offset[j] = lo
            cols.append((j, 1.0))
            if np.isfinite(hi):
                upper.append((len(cols) - 1, hi - lo))
        elif np.isfinite(hi):
            offset[j] = hi
            cols.append((j, -1.0))
        elif used[j]:
            cols.append((j, 1.0))
            cols.append((j, -1.0))
        # unused free variables can take any value; they are left at zero

    idx = np.array([j for j, _ in cols], dtype=int)
    sgn = np.array([s for _, s in cols])
    E = (A_eq[:, idx].toarray() * sgn) if len(cols) else np.zeros((A_eq.shape[0], 0))
    U = (A_ub[:, idx].toarray() * sgn) if len(cols) else np.zeros((A_ub.shape[0], 0))
    b_eq = p.b_eq - A_eq @ offset
    b_ub = p.b_ub - A_ub @ offset

    m_eq, m_ub, m_up = E.shape[0], U.shape[0], len(upper)
    n_s = len(cols)
    A = np.zeros((m_eq + m_ub + m_up, n_s + m_ub + m_up))
    A[:m_eq, :n_s] = E
    A[m_eq : m_eq + m_ub, :n_s] = U
    A[m_eq : m_eq + m_ub, n_s : n_s + m_ub] = np.eye(m_ub)
    for r, (col, _) in enumerate(upper):
        A[m_eq + m_ub + r, col] = 1.0
        A[m_eq + m_ub + r, n_s + m_ub + r] = 1.0
    b = np.concatenate([b_eq, b_ub, [u for _, u in upper]])
    return _StandardForm(A, b, offset, cols, m_eq, m_ub)


def check_farkas(p: LPProblem, lam: np.ndarray, mu: np.ndarray, tol: float = 1e-9) -> dict:
    """Independent check that (lam, mu) proves infeasibility.

    Any feasible x satisfies g @ x <= beta with g = lam A_eq + mu A_ub and
    beta = lam b_eq + mu b_ub (mu >= 0), while the bounds force g @ x >= alpha.
    alpha > beta therefore rules out every x. Coefficients of g on unbounded
    directions must vanish up to ``tol`` relative to the multiplier scale.
    """
    scale = max(np.abs(lam).max(initial=0.0), np.abs(mu).max(initial=0.0), 1e-300)
    g = p.A_eq.T @ lam + p.A_ub.T @ mu
    beta = float(lam @ p.b_eq + mu @ p.b_ub)
    small = np.abs(g) <= tol * scale
    lo = np.where(np.isfinite(p.lb), p.lb, 0.0)
    hi = np.where(np.isfinite(p.ub), p.ub, 0.0)
    unbounded = ((g > 0) & ~np.isfinite(p.lb)) | ((g < 0) & ~np.isfinite(p.ub))
    gg = np.where(small, 0.0, g)
    alpha = float(np.sum(np.where(gg > 0, gg * lo, gg * hi)))
    # the dropped tiny coefficients can shift alpha by at most |g_j| * |x_j| on finite boxes
    slack = float(np.sum(np.abs(np.where(small, g, 0.0)) * np.maximum(np.abs(lo), np.abs(hi))))
    ok = bool(mu.min(initial=0.0) >= -tol * scale and not np.any(unbounded & ~small) and alpha - slack > beta)
    return {
        "verified": ok,
        "gap": float((alpha - slack - beta) / scale),
        "alpha": alpha,
        "beta": beta,
        "max_free_coefficient": float(np.abs(np.where(~np.isfinite(p.lb) & ~np.isfinite(p.ub), g, 0.0)).max(initial=0.0) / scale),
    }


def solve(p: LPProblem, config: SolverConfig = SolverConfig()) -> LPVerdict:
    sf = _standard_form(p)
    res = two_phase(sf.A, sf.b, config=config)
    if res.status == "iteration_limit":
        return LPVerdict(Status.NUMERICAL_FAILURE, iterations=res.iterations, message="iteration limit reached")

    if res.status == "infeasible":
        # standard-form Farkas vector u has u @ A <= 0, u @ b > 0; flip to the
        # original orientation where mu >= 0 weights the <= rows
        u = res.farkas
        lam = -u[: sf.n_eq]
        mu = -u[sf.n_eq : sf.n_eq + sf.n_ub]
        cert = check_farkas(p, lam, mu, tol=config.pivot_tol)
        cert.update(phase1_objective=res.phase1_objective, eq_multipliers=lam, ub_multipliers=mu)
        if not cert["verified"]:
            return LPVerdict(
                Status.NUMERICAL_FAILURE,
                certificate=cert,
                phase1_objective=res.phase1_objective,
                iterations=res.iterations,
                message="phase 1 reported infeasible but the Farkas certificate did not verify",
            )
        return LPVerdict(
            Status.INFEASIBLE,
            certificate=cert,
            phase1_objective=res.phase1_objective,
            iterations=res.iterations,
        )

    x = sf.offset.copy()
    for k, (j, s) in enumerate(sf.D_cols):
        x[j] += s * res.x[k]
    residuals = p.residuals(x)
    if max(residuals.values()) > config.feasibility_tol:
        return LPVerdict(
            Status.NUMERICAL_FAILURE,
            x=x,
            residuals=residuals,
            phase1_objective=res.phase1_objective,
            iterations=res.iterations,
            message="witness failed independent re-validation",
        )
    return LPVerdict(Status.FEASIBLE, x=x, residuals=residuals, phase1_objective=res.phase1_objective, iterations=res.iterations)
