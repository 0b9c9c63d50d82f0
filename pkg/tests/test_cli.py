import csv
import json
import subprocess
import sys

import pytest

from fockkl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (("hat", "--n", "3", "--r", "3", "6,2,1"), "12,6,3"),
    (("tilde", "--n", "3", "--r", "3", "8,1"), "12,5,4"),
    (("ellmu", "--n", "3", "--r", "3", "6,2,1"), "0"),
    (("core", "--n", "3", "2,1"), "[]"),
    (("dpoly", "--n", "2", "--r", "2", "1,1", "2"), "q"),
    (("dpoly", "--n", "2", "--r", "2", "1,1", "2", "--route", "r"), "q"),
])
def test_single_queries(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_gplus_example(capsys):
    code, out, _ = run(capsys, "gplus", "--n", "3", "--r", "3", "--mu-conj", "6,2,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 4
    assert data[0] == {"partition": "3,2,1,1,1,1", "poly": "1"}


def test_gplus_by_column_label(capsys):
    code, out, _ = run(capsys, "gplus", "--n", "2", "2")
    assert code == 0 and out.split("\n")[:2] == ["2\t1", "1,1\tq"]


def test_dmat_csv(capsys, tmp_path):
    path = tmp_path / "d.csv"
    code, out, err = run(capsys, "dmat", "--n", "2", "--m", "4", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert "column" in err  # progress goes to stderr
    rows = [r for r in csv.reader(path.read_text().splitlines()) if r and not r[0].startswith("#")]
    assert len(rows) == 6 and len(rows[0]) == 6
    assert rows[0][1:] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert rows[2][1] == "q"


def test_emat_json(capsys):
    code, out, _ = run(capsys, "emat", "--n", "2", "--m", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["entries"]["2"]["1,1"] == "q"


def test_output_is_deterministic(capsys):
    a = run(capsys, "dmat", "--n", "3", "--m", "5", "--format", "csv")[1]
    b = run(capsys, "dmat", "--n", "3", "--m", "5", "--format", "csv")[1]
    assert a == b


@pytest.mark.parametrize("scope,extra", [
    ("th2", ("--m", "9", "--r", "3", "--n", "3")),
    ("th1", ("--m", "4", "--r", "2", "--n", "2")),
    ("inverse", ("--m", "4", "--n", "2")),
    ("routes", ("--m", "3", "--n", "2")),
    ("oracle", ("--m", "5", "--n", "3", "--up-to")),
    ("recursion", ("--n", "2", "--r", "2")),
])
def test_verify_scopes_pass(capsys, scope, extra):
    code, out, _ = run(capsys, "verify", scope, *extra, "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"command", "params", "checked", "failed", "counterexamples"}
    assert report["failed"] == 0 and report["checked"] > 0


def test_verify_th2_includes_worked_example(capsys):
    code, out, _ = run(capsys, "verify", "th2", "--n", "3", "--m", "9", "--r", "3")
    assert code == 0 and out.startswith("verify th2: PASS checked=144")


def test_verify_reports_failures(capsys, monkeypatch):
    from fockkl import fock
    from fockkl.laurent import q

    real = fock.d_poly_via_r
    monkeypatch.setattr(fock, "d_poly_via_r", lambda *a, **k: real(*a, **k) + q ** 7)
    code, out, _ = run(capsys, "verify", "routes", "--n", "2", "--m", "2", "--format", "json")
    report = json.loads(out)
    assert code == 1 and report["failed"] > 0
    ce = report["counterexamples"][0]
    assert set(ce) == {"lambda", "mu", "lhs", "rhs"} and "q^7" in ce["rhs"]


@pytest.mark.parametrize("argv", [
    ("hat", "--n", "3", "--r", "2", "6,2,1"),
    ("hat", "--n", "3", "6,x"),
    ("hat", "--n", "1", "2"),
    ("dpoly", "--n", "2", "2", "1"),
    ("verify", "th2", "--n", "2"),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("fockkl: error:") and err.count("\n") == 1


def test_jobs_do_not_change_reports(capsys):
    a = run(capsys, "verify", "th2", "--n", "2", "--m", "4", "--r", "2", "--format", "json")[1]
    b = run(capsys, "verify", "th2", "--n", "2", "--m", "4", "--r", "2", "--format", "json", "--jobs", "2")[1]
    assert a == b


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "fockkl.cli", "hat", "--n", "3", "--r", "3", "6,2,1"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "12,6,3"


@pytest.mark.slow
def test_dmat_full_table_for_the_worked_example(capsys):
    code, out, _ = run(capsys, "dmat", "--n", "3", "--m", "9", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["index"]) == 30
    col = {row: v["3,2,1,1,1,1"] for row, v in data["entries"].items() if "3,2,1,1,1,1" in v}
    assert col == {"3,2,1,1,1,1": "1", "3,1,1,1,1,1,1": "q", "2,2,2,1,1,1": "q", "2,1,1,1,1,1,1,1": "q^2"}
