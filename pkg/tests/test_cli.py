import csv
import io
import json
import subprocess
import sys

import pytest

from cycledeg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_degree_all_routes(capsys):
    code, out, _ = run(capsys, "degree", "--n", "4", "--route", "all")
    assert code == 0
    report = json.loads(out)
    assert {r["actual"] for r in report["records"] if r["name"] == "degree"} == {"9"}
    assert report["summary"]["fail"] == "0"


def test_degree_default_and_closed(capsys):
    code, out, _ = run(capsys, "degree", "--n", "3")
    assert code == 0 and json.loads(out)["records"][0]["actual"] == "1"
    code, out, _ = run(capsys, "degree", "--n", "12", "--route", "closed")
    assert code == 0
    assert json.loads(out)["records"][0]["actual"] == "3173090"


def test_table_h_csv(capsys):
    code, out, _ = run(capsys, "table", "H", "--n-max", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {"n": "5", "r": "2", "expected": "600"}.items() <= next(r for r in rows if r["n"] == "5" and r["r"] == "2").items()


def test_table_f_and_degree(capsys):
    code, out, _ = run(capsys, "table", "F", "--n-max", "5")
    cells = {(r["inputs"]["n"], r["inputs"]["r"]): r["actual"] for r in json.loads(out)["records"]}
    assert code == 0 and cells[("5", "1")] == "180"
    code, out, _ = run(capsys, "table", "degree", "--n-max", "7", "--format", "csv")
    assert [r["expected"] for r in csv.DictReader(io.StringIO(out))] == ["1", "9", "57", "312", "1578"]


def test_large_values_are_strings(capsys):
    code, out, _ = run(capsys, "table", "degree", "--n-max", "40")
    last = json.loads(out)["records"][-1]
    assert code == 0 and int(last["actual"]) > 2**63


@pytest.mark.parametrize(
    "argv",
    [
        ["degree", "--n", "2"],
        ["degree", "--n", "11", "--route", "combinatorial"],
        ["table", "F", "--n-max", "201"],
        ["verify", "bijection", "--n-max", "11"],
        ["verify", "nonsense"],
        ["frobnicate"],
        ["degree"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_cap_override(capsys):
    code, _, err = run(capsys, "verify", "divisors", "--n-max", "30")
    assert code == 0, err


@pytest.mark.parametrize("suite", ["path-identity", "schur-rows", "psi", "bijection", "divisors"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--n-max", "6")
    report = json.loads(out)
    assert code == 0 and report["summary"]["fail"] == "0" and report["records"]


def test_verify_sweeps_reproducible(capsys):
    args = ["verify", "blocks", "--n-max", "5", "--samples", "30", "--seed", "42"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args, "--jobs", "2")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "wall_time"}
    assert strip(first) == strip(second)
    assert strip(first)["summary"]["fail"] == "0"


def test_failure_exit_code(capsys, monkeypatch):
    from cycledeg import calculus

    monkeypatch.setattr(calculus, "f_closed", lambda n, r: -1)
    code, out, _ = run(capsys, "degree", "--n", "5")
    assert code == 1
    assert json.loads(out)["summary"]["fail"] != "0"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cycledeg", "degree", "--n", "5", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert "57" in out.stdout
