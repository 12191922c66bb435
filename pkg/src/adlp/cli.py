"""``adlp`` command-line entry point.

Exit codes: 0 success (and Feasible), 1 malformed input or failed check,
2 Infeasible, 3 solver numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

import numpy as np

from adlp import __version__, codes, connection, enumerator
from adlp.lp import (
    CONSTRAINT_SETS,
    FeasibilityQuery,
    NoBracketError,
    NumericalFailureError,
    QueryError,
    SolverConfig,
    Status,
    assemble,
    export_lp,
    max_ruled_out_c,
    solve,
)

EXIT_OK, EXIT_BAD_INPUT, EXIT_INFEASIBLE, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _gammas(text: str) -> list[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of damping values")
    for s in items:
        float(s)
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adlp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"adlp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "human"), default="json")
        p.add_argument("--out", help="write the report here instead of standard output")

    def solver_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--feasibility-tol", type=float, default=SolverConfig.feasibility_tol)
        p.add_argument("--pivot-tol", type=float, default=SolverConfig.pivot_tol)

    p = sub.add_parser("enumerate", help="AD (and optionally Shor-Laflamme) enumerators of a code")
    p.add_argument("--code", required=True, help="built-in code name or JSON code file")
    p.add_argument("--gamma", required=True, type=lambda s: _gammas(s)[0])
    p.add_argument("--sl", action="store_true", help="also report Shor-Laflamme enumerators")
    common(p)

    p = sub.add_parser("lemma-check", help="check the connection-matrix identities on random codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gammas", type=_gammas, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)

    p = sub.add_parser("feasibility", help="decide the multi-gamma feasibility program")
    for flag in ("--n", "--M", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--gammas", type=_gammas, required=True)
    p.add_argument("--constraint-set", choices=CONSTRAINT_SETS, default="paper")
    p.add_argument("--export-lp", help="also write the program in CPLEX LP format")
    solver_opts(p)
    common(p)

    p = sub.add_parser("scan-c", help="bisect for the largest ruled-out c")
    for flag in ("--n", "--M", "--t"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--gammas", type=_gammas, required=True)
    p.add_argument("--c-lo", type=float, required=True)
    p.add_argument("--c-hi", type=float, required=True)
    p.add_argument("--resolution", type=float, required=True)
    p.add_argument("--constraint-set", choices=CONSTRAINT_SETS, default="paper")
    solver_opts(p)
    common(p)
    return parser


def _meta(args: argparse.Namespace) -> dict:
    flags = {k: v for k, v in vars(args).items() if k not in ("format", "out")}
    return {"tool": "adlp", "version": __version__, "flags": flags}


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(feasibility_tol=args.feasibility_tol, pivot_tol=args.pivot_tol)


def cmd_enumerate(args: argparse.Namespace) -> tuple[int, dict]:
    code = codes.load(args.code)
    gamma = float(args.gamma)
    A, B = enumerator.ad_enumerators(code, gamma)
    report = {
        "meta": _meta(args),
        "code": {"name": code.name or args.code, "n": code.n, "M": code.M},
        "gamma": args.gamma,
        "A": A.values.tolist(),
        "B": B.values.tolist(),
    }
    if args.sl:
        A_sl, B_sl = enumerator.sl_enumerators(code)
        report["A_SL"] = A_sl.values.tolist()
        report["B_SL"] = B_sl.values.tolist()
    return EXIT_OK, report


def cmd_lemma_check(args: argparse.Namespace) -> tuple[int, dict]:
    rng = np.random.default_rng(args.seed)
    results = []
    for trial in range(args.trials):
        code = codes.random_code(args.n, args.M, rng)
        for g in args.gammas:
            r = connection.verify_lemma(code, float(g), tol=args.tol)
            results.append({"trial": trial, "gamma": g, "residual_A": r.residual_A, "residual_B": r.residual_B})
    worst_A = max(r["residual_A"] for r in results)
    worst_B = max(r["residual_B"] for r in results)
    passed = worst_A < args.tol and worst_B < args.tol
    report = {
        "meta": _meta(args),
        "passed": passed,
        "max_residual_A": worst_A,
        "max_residual_B": worst_B,
        "tolerance": args.tol,
        "gammas": args.gammas,
        "results": results,
    }
    return (EXIT_OK if passed else EXIT_BAD_INPUT), report


def _query(args: argparse.Namespace, c: float) -> FeasibilityQuery:
    return FeasibilityQuery(
        n=args.n, M=args.M, t=args.t, c=c, gammas=tuple(float(g) for g in args.gammas),
        constraint_set=args.constraint_set,
    )


def cmd_feasibility(args: argparse.Namespace) -> tuple[int, dict]:
    config = _config(args)
    problem = assemble(_query(args, args.c))
    if args.export_lp:
        export_lp(problem, args.export_lp)
    verdict = solve(problem, config)
    report = verdict.to_json(problem)
    report["gammas"] = args.gammas
    report["meta"] = _meta(args)
    report["tolerances"] = asdict(config)
    code = {Status.FEASIBLE: EXIT_OK, Status.INFEASIBLE: EXIT_INFEASIBLE}.get(verdict.status, EXIT_NUMERICAL)
    return code, report


def cmd_scan_c(args: argparse.Namespace) -> tuple[int, dict]:
    config = _config(args)
    q = _query(args, args.c_lo)
    report = {"meta": _meta(args), "tolerances": asdict(config), "gammas": args.gammas,
              "constraintSet": args.constraint_set}
    try:
        report["max_ruled_out_c"] = max_ruled_out_c(q, args.c_lo, args.c_hi, args.resolution, config)
        report["status"] = "Bracketed"
        return EXIT_OK, report
    except NoBracketError as exc:
        report.update(status="NoBracket", max_ruled_out_c=None, message=str(exc))
        return EXIT_OK, report
    except NumericalFailureError as exc:
        report.update(status="NumericalFailure", max_ruled_out_c=None, message=str(exc))
        return EXIT_NUMERICAL, report


COMMANDS = {
    "enumerate": cmd_enumerate,
    "lemma-check": cmd_lemma_check,
    "feasibility": cmd_feasibility,
    "scan-c": cmd_scan_c,
}


def _human(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "meta":
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}: {len(value)} entries")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _csv(report: dict) -> str:
    buf = io.StringIO()
    columns = [k for k in ("A", "B", "A_SL", "B_SL") if k in report]
    writer = csv.writer(buf)
    writer.writerow(["i", *columns])
    for i in range(len(report["A"])):
        writer.writerow([i, *(repr(report[k][i]) for k in columns)])
    return buf.getvalue()


def render(report: dict, fmt: str, command: str) -> str:
    if fmt == "csv":
        if command != "enumerate":
            raise UsageError("CSV output is only available for enumerator tables")
        return _csv(report)
    if fmt == "human":
        return _human(report)
    return json.dumps(report, indent=2, default=float) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    try:
        args = build_parser().parse_args(argv)
        code, report = COMMANDS[args.command](args)
        text = render(report, args.format, args.command)
    except (UsageError, QueryError, codes.CodeError, ValueError, OSError) as exc:
        return EXIT_BAD_INPUT, f"adlp: error: {exc}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return code, ""
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stderr if code == EXIT_BAD_INPUT and text.startswith("adlp: error") else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
