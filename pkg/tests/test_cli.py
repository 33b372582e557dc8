import json
import subprocess
import sys

import pytest

from defectlab.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main


def run(args, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_example_table(capsys):
    code, out, _ = run(["compute", "--example", "prism", "--report", "table"], capsys)
    assert code == EXIT_OK
    assert any(line.split() == ["defect", "1"] for line in out.splitlines())


def test_compute_json_from_file(tmp_path, capsys):
    f = tmp_path / "oct.txt"
    f.write_text("4 6\n1 1 1 1 1 1\n1 -1 0 0 0 0\n0 0 1 -1 0 0\n0 0 0 0 1 -1\n")
    code, out, _ = run(["compute", "--input", str(f)], capsys)
    d = json.loads(out)
    assert code == EXIT_OK and d["defect"] == "0" and d["iota"] == "3"


def test_compute_stdin_csv(capsys, monkeypatch):
    code, out, _ = run(["compute", "--format", "csv"], capsys, "1,1,1,1\n0,1,0,1\n0,0,1,1\n", monkeypatch)
    assert code == EXIT_OK and json.loads(out)["m"] == "1"


def test_rows_are_points(tmp_path, capsys):
    f = tmp_path / "pts.txt"
    f.write_text("4 2\n0 0\n1 0\n0 1\n1 1\n")
    code, out, _ = run(["compute", "-i", str(f), "--rows-are-points"], capsys)
    d = json.loads(out)
    assert code == EXIT_OK and d["n"] == "4" and d["homogeneous"] is False


def test_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("2 3\n1 1 1\n0 q 1\n")
    code, _, err = run(["compute", "--input", str(f)], capsys)
    assert code == EXIT_INPUT and "line 3" in err


def test_missing_file(capsys):
    code, _, _ = run(["compute", "--input", "/nonexistent/x.txt"], capsys)
    assert code == EXIT_INPUT


def test_budget_exit(capsys):
    code, out, _ = run(["compute", "--example", "FANO7", "--budget", "1"], capsys)
    assert code == EXIT_BUDGET and "via identity" in out


def test_examples(capsys):
    code, out, _ = run(["examples", "--json"], capsys)
    rows = json.loads(out)
    assert code == EXIT_OK and {r["name"] for r in rows} >= {"OCT", "PRISM", "FI14"}
    code, out, _ = run(["examples"], capsys)
    assert "PRISM" in out and "expected" in out


def test_crosscheck_small(capsys):
    code, out, _ = run(["crosscheck", "--n", "6", "--trials", "10", "--seed", "3"], capsys)
    assert code == EXIT_OK and "10/10" in out


@pytest.mark.parametrize("threads", ["1", "8"])
def test_module_entry_point(threads):
    res = subprocess.run([sys.executable, "-m", "defectlab", "--threads", threads, "compute", "-e", "OCT"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["rho"] == "5"


def test_crosscheck_default_suite(capsys):
    code, out, _ = run(["crosscheck", "--n", "8", "--trials", "200", "--seed", "7"], capsys)
    last = out.strip().splitlines()[-1]
    assert code == EXIT_OK and "0 skipped" in last and last.startswith("200/200")
