from adlp.lp.export import export_lp, export_lp_text
from adlp.lp.problem import (
    CONSTRAINT_SETS,
    FeasibilityQuery,
    LPProblem,
    QueryError,
    assemble,
    witness_from_code,
)
from adlp.lp.search import NoBracketError, NumericalFailureError, max_ruled_out_c
from adlp.lp.simplex import SolverConfig, two_phase
from adlp.lp.solve import LPVerdict, Status, check_farkas, solve

__all__ = [
    "CONSTRAINT_SETS",
    "FeasibilityQuery",
    "LPProblem",
    "LPVerdict",
    "NoBracketError",
    "NumericalFailureError",
    "QueryError",
    "SolverConfig",
    "Status",
    "assemble",
    "check_farkas",
    "export_lp",
    "export_lp_text",
    "max_ruled_out_c",
    "solve",
    "two_phase",
    "witness_from_code",
]
