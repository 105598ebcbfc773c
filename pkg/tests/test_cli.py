import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from pretzelknots.cli import main, run_capture
from pretzelknots.verify import load_cases

GOLDEN = Path(__file__).parent / "golden"


def test_analyze_golden():
    code, out = run_capture(["analyze", "P(-5,7,9)"])
    assert code == 0
    d = json.loads(out)
    assert "seconds" in d
    d.pop("seconds")
    for side in ("ffp_H", "ffp_K"):
        d[side]["consumed"].pop("seconds")
    assert d == json.loads((GOLDEN / "P-5_7_9.json").read_text())


def test_analyze_text_and_family():
    code, out = run_capture(["analyze", "--family", "2", "3", "--format", "text"])
    assert code == 0
    assert out.startswith("P(3,-3,3,-3,7)")
    assert "biorder: BiOrderable" in out


def test_analyze_dot():
    code, out = run_capture(["analyze", "P(-5,7,9)", "--dot"])
    assert code == 0 and out.startswith("digraph")


@pytest.mark.parametrize("argv", [
    ["analyze", "P(2,4,6)"], ["analyze"], ["analyze", "P(-5,7,9)", "--family", "2", "1"],
    ["sweep", "--p", "-1", "--qmax", "2", "--rmax", "2"],
    ["sweep", "--p", "-3", "--qmax", "201", "--rmax", "2"],
    ["chart", "--p", "-3", "--qmax", "0", "--rmax", "2"],
    ["analyze", "P(-5,7,9)", "--nielsen-radius", "-1"],
    ["verify-paper", "--only", "no-such-group"],
    ["verify-paper", "--fixtures", "/nonexistent.json"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    code, _ = run_capture(argv)
    assert code == 1


def test_declined_is_not_an_error():
    code, out = run_capture(["analyze", "P(1,1,1)"])
    assert code == 0 and "declined" in json.loads(out)


def test_sweep_csv():
    code, out = run_capture(["sweep", "--p", "-3", "--qmax", "2", "--rmax", "2"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["q"], r["r"]) for r in rows] == [("1", "1"), ("1", "2"), ("2", "2")]
    assert rows[0]["knot"] == "P(-5,3,3)"


@pytest.mark.parametrize("fmt", ["json", "markdown", "text"])
def test_sweep_formats(fmt):
    code, out = run_capture(["sweep", "--p", "-2", "--qmax", "1", "--rmax", "2", "--format", fmt])
    assert code == 0 and "P(-3,3,3)" in out


def test_chart_markdown():
    code, out = run_capture(["chart", "--p", "-2", "--qmax", "2", "--rmax", "5"])
    assert code == 0
    assert out.splitlines()[-3:] == ["| 3 | -2 S | 0 T |", "| 4 | -2 S | 1 F |", "| 5 | -2 S | 2 F |"]
    code, out = run_capture(["chart", "--p", "-2", "--qmax", "2", "--rmax", "3", "--format", "json"])
    cells = {(c["q"], c["r"]): c["ffp_class"] for c in json.loads(out)}
    assert cells[(2, 3)] == "trivial-Δ"


def test_verify_group():
    code, out = run_capture(["verify-paper", "--only", "no-free-factor"])
    assert code == 0
    assert out.strip().endswith("13/13 cases pass in group no-free-factor")


def test_verify_flipped_fixture(tmp_path):
    cases = [c for c in load_cases() if c["source"] == "no-free-factor"][:2]
    cases[0]["expected"]["ffp"] = "Satisfied"
    path = tmp_path / "flipped.json"
    path.write_text(json.dumps(cases))
    code, out = run_capture(["verify-paper", "--fixtures", str(path), "--format", "json"])
    assert code == 3
    d = json.loads(out)
    assert d["cases"] == 2 and len(d["mismatches"]) == 1


def test_internal_error_exit(monkeypatch):
    import pretzelknots.cli as cli

    def boom(*a, **k):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "analyze", boom)
    assert main(["analyze", "P(-5,7,9)"], io.StringIO()) == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "pretzelknots", "analyze", "P(-3,5,7)", "--format", "text"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0
    assert "rtfn: Disproved" in r.stdout
