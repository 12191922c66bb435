"""Bisection for the largest relaxation constant c that is still ruled out."""

from __future__ import annotations

import logging

from adlp.lp.problem import FeasibilityQuery, assemble
from adlp.lp.simplex import SolverConfig
from adlp.lp.solve import LPVerdict, Status, solve

log = logging.getLogger(__name__)


class NoBracketError(RuntimeError):
    """Even the lower end of the search interval is feasible."""


class NumericalFailureError(RuntimeError):
    def __init__(self, c: float, verdict: LPVerdict) -> None:
        super().__init__(f"solver failed at c={c}: {verdict.message}")
        self.c = c
        self.verdict = verdict


def _verdict(q: FeasibilityQuery, c: float, config: SolverConfig) -> bool:
    v = solve(assemble(q.with_c(c)), config)
    log.debug("c=%g -> %s", c, v.status.value)
    if v.status is Status.NUMERICAL_FAILURE:
        raise NumericalFailureError(c, v)
    return v.infeasible


def max_ruled_out_c(
    q: FeasibilityQuery,
    c_lo: float,
    c_hi: float,
    resolution: float,
    config: SolverConfig = SolverConfig(),
) -> float:
    """Largest tested c in [c_lo, c_hi] with an Infeasible verdict.

    Assumes monotonicity in c (a larger c only loosens the relaxation rows).
    """
    if c_hi < c_lo:
        raise ValueError(f"c_hi={c_hi} is below c_lo={c_lo}")
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if not _verdict(q, c_lo, config):
        raise NoBracketError(f"feasible already at c_lo={c_lo}")
    if c_hi == c_lo or _verdict(q, c_hi, config):
        return c_hi
    lo, hi = c_lo, c_hi
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if _verdict(q, mid, config):
            lo = mid
        else:
            hi = mid
    return lo
