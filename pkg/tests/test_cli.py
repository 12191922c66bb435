import json
import subprocess
import sys

import pytest

from adlp import codes
from adlp.cli import main, run


def report(argv):
    code, text = run(argv)
    return code, json.loads(text)


def test_enumerate_leung():
    code, out = report(["enumerate", "--code", "leung4", "--gamma", "0.1"])
    assert code == 0
    assert len(out["A"]) == len(out["B"]) == 5
    assert out["A"][0] == pytest.approx(1.9**4 / 16, abs=1e-12)
    assert out["gamma"] == "0.1"
    assert out["meta"]["version"]


def test_enumerate_csv_and_sl():
    code, text = run(["enumerate", "--code", "trivial-zero(1)", "--gamma", "0.25", "--sl", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "i,A,B,A_SL,B_SL"
    assert len(lines) == 3


def test_enumerate_code_file(tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps(codes.to_json(codes.builtin("trivial-one(2)"))))
    code, out = report(["enumerate", "--code", str(path), "--gamma", "0.3"])
    assert code == 0
    assert out["B"][0] == pytest.approx(0.7**2)


def test_lemma_check():
    code, out = report(["lemma-check", "--n", "2", "--M", "1", "--trials", "10", "--seed", "7", "--gammas", "0.1,0.5"])
    assert code == 0
    assert out["passed"]
    assert out["max_residual_A"] < 1e-9 and out["max_residual_B"] < 1e-9
    assert len(out["results"]) == 20


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--n", "1", "--M", "1", "--t", "0", "--c", "1e6", "--gammas", "0.1"], 0),
        (["--n", "1", "--M", "2", "--t", "1", "--c", "4.9", "--gammas", "0.1", "--constraint-set", "strengthened"], 2),
    ],
)
def test_feasibility_exit_codes(argv, expected):
    code, out = report(["feasibility", *argv])
    assert code == expected
    assert out["status"] == ("Feasible" if expected == 0 else "Infeasible")
    assert out["tolerances"]["feasibility_tol"] == 1e-7
    assert out["gammas"] == [argv[argv.index("--gammas") + 1]]


def test_feasibility_iteration_failure_exit(monkeypatch):
    from adlp import cli
    from adlp.lp import SolverConfig

    monkeypatch.setattr(cli, "_config", lambda args: SolverConfig(max_iter=1))
    code, out = report(["feasibility", "--n", "1", "--M", "2", "--t", "1", "--c", "4.9", "--gammas", "0.1"])
    assert code == 3
    assert out["status"] == "NumericalFailure"


def test_gamma_echo_is_verbatim():
    code, out = report(["feasibility", "--n", "1", "--M", "1", "--t", "0", "--c", "1", "--gammas", "0.10,1e-4"])
    assert out["gammas"] == ["0.10", "1e-4"]
    assert out["meta"]["flags"]["gammas"] == ["0.10", "1e-4"]


def test_export_and_out(tmp_path):
    lp, dest = tmp_path / "p.lp", tmp_path / "r.json"
    code, text = run(["feasibility", "--n", "1", "--M", "1", "--t", "0", "--c", "1", "--gammas", "0.1",
                      "--export-lp", str(lp), "--out", str(dest)])
    assert code == 0 and text == ""
    assert lp.read_text().startswith("\\")
    assert json.loads(dest.read_text())["status"] == "Feasible"


def test_scan_c():
    code, out = report(["scan-c", "--n", "1", "--M", "2", "--t", "1", "--gammas", "0.1", "--c-lo", "1",
                        "--c-hi", "10", "--resolution", "1e-4", "--constraint-set", "strengthened"])
    assert code == 0
    assert out["status"] == "Bracketed"
    assert out["max_ruled_out_c"] == pytest.approx(5.0, abs=1e-4)
    code, out = report(["scan-c", "--n", "1", "--M", "1", "--t", "0", "--gammas", "0.1", "--c-lo", "1",
                        "--c-hi", "10", "--resolution", "1e-2"])
    assert out["status"] == "NoBracket" and out["max_ruled_out_c"] is None


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["enumerate", "--code", "nope", "--gamma", "0.1"],
        ["enumerate", "--code", "leung4", "--gamma", "1.5"],
        ["enumerate", "--code", "leung4", "--gamma", "abc"],
        ["feasibility", "--n", "1", "--M", "3", "--t", "0", "--c", "1", "--gammas", "0.1"],
        ["feasibility", "--n", "1", "--M", "1", "--t", "0", "--c", "1", "--gammas", "0.1,0.1"],
        ["feasibility", "--n", "1", "--M", "1", "--t", "0", "--c", "1", "--gammas", "0.1", "--format", "csv"],
        ["scan-c", "--n", "1", "--M", "2", "--t", "1", "--gammas", "0.1", "--c-lo", "5", "--c-hi", "1",
         "--resolution", "1e-2"],
    ],
)
def test_malformed_input_exits_one(argv):
    code, text = run(argv)
    assert code == 1
    assert text.startswith("adlp: error")


def test_main_writes_diagnostic_to_stderr(capsys):
    assert main(["enumerate", "--code", "nope", "--gamma", "0.1"]) == 1
    captured = capsys.readouterr()
    assert captured.out == "" and "error" in captured.err


def test_reports_deterministic():
    argv = ["lemma-check", "--n", "1", "--M", "1", "--trials", "3", "--seed", "11", "--gammas", "0.2"]
    assert run(argv) == run(argv)


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "adlp.cli", "enumerate", "--code", "trivial-zero(1)",
                          "--gamma", "0.5", "--format", "human"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "A:" in res.stdout
