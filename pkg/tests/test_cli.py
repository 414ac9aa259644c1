import csv
import json
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from hwsum.cli import main
from hwsum.registry import REGISTRY
from hwsum.sweep import (
    ConfigError,
    SweepConfig,
    cases_for,
    config_from_mapping,
    default_jobs,
    load_config,
    parse_values,
    run_cases,
    run_sweep,
    strip_timing,
)

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_values():
    assert parse_values("0..3") == (0, 1, 2, 3)
    assert parse_values("1/2,-1/3") == (F(1, 2), F(-1, 3))
    assert parse_values(["1/2", 2, "4..5"]) == (F(1, 2), 2, 4, 5)
    for bad in ("3..1", "1/0", "x", [], 1.5, True):
        with pytest.raises(ConfigError):
            parse_values(bad)


def test_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig(identities=("nosuch",))
    with pytest.raises(ConfigError):
        config_from_mapping({"identities": []})
    with pytest.raises(ConfigError):
        config_from_mapping({"identities": ["thm_a"], "params": {"thm_a": {"q": "1"}}})
    with pytest.raises(ConfigError):
        config_from_mapping({"colour": "blue"})
    cfg = config_from_mapping({"identities": "all", "tol": 1e-9}, jobs=3)
    assert cfg.selected == tuple(REGISTRY) and cfg.tol == 1e-9 and cfg.jobs == 3


def test_default_jobs(monkeypatch):
    monkeypatch.delenv("HWSUM_JOBS", raising=False)
    assert default_jobs() == 1
    monkeypatch.setenv("HWSUM_JOBS", "6")
    assert default_jobs() == 6
    monkeypatch.setenv("HWSUM_JOBS", "many")
    with pytest.raises(ConfigError):
        default_jobs()


def test_cases_for_override_keeps_other_axes():
    cases = cases_for("thm_a", {"n": (2, 3)})
    assert len(cases) == 2 * len(REGISTRY["thm_a"].grid["x"])
    assert all(c.bindings["t"] == 0 for c in cases)
    with pytest.raises(ConfigError):
        cases_for("eq_watson", {"a": (1,)})


def test_parallel_matches_serial():
    cases = cases_for("thm_g", {"n": tuple(range(10))}) + REGISTRY["eq_watson_a"].default_cases()[:3]
    serial = [r.verdict for r in run_cases(cases, jobs=1)]
    parallel = [r.verdict for r in run_cases(cases, jobs=4)]
    assert serial == parallel


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) >= 40
    assert any(line.split()[:3] == ["thm_a", "exact", "t,n,x"] for line in lines)
    code, out, _ = run(capsys, "list", "--mode", "numeric")
    assert {line.split()[1] for line in out.splitlines()} == {"numeric"}
    code, out, _ = run(capsys, "list", "--json")
    assert "chu" in [item["id"] for item in json.loads(out)]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "thm_a", "--t", "0", "--n", "0..4", "--x", "1/2")
    assert code == 0 and out.count("equal_exact") == 5
    code, out, _ = run(capsys, "verify", "thm_d", "--t", "0", "--n", "1", "--x", "0", "--show-values")
    assert code == 0 and "lhs=1 rhs=1" in out
    code, out, _ = run(capsys, "verify", "eq_watson", "--a", "1", "--b", "1", "--c", "3/2", "--json")
    assert code == 0 and json.loads(out)[0]["verdict"] == "within_tol"


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch"],
    ["verify", "thm_a", "--x", "1/0"],
    ["verify", "thm_a", "--x", "0.5"],
    ["verify", "thm_a", "--p", "1"],
    ["verify", "eq_watson"],
    ["oracle", "thm_a", "--n", "4..1"],
    ["sweep", str(FIXTURES / "bad_value.toml")],
    ["sweep", str(FIXTURES / "empty.toml")],
    ["sweep", "/nonexistent/config.toml"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "thm_b", "--t", "1", "--n", "3", "--x", "0")
    assert code == 0 and "lhs = -32  rhs = -32" in out
    code, out, _ = run(capsys, "oracle", "concise_f1_t0", "--n", "2")
    assert "lhs = 2  rhs = 2" in out
    code, out, _ = run(capsys, "oracle", "eq_watson", "--a", "1", "--b", "1", "--c", "3/2")
    lhs = float(out.split("lhs = ")[1].split()[0])
    assert abs(lhs - 2) < 1e-10 and "rhs = 2 (exact)" in out


def test_sweep_config_and_reports(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "sweep", str(FIXTURES / "small.toml"), "--out", str(out_json))
    assert code == 0
    report = json.loads(out_json.read_text())
    assert report["summary"]["failed"] == 0
    assert sum(report["summary"].values()) == len(report["records"])
    rec = report["records"][0]
    for key in ("identity", "params", "mode", "lhs", "rhs", "verdict", "abs_diff", "terms_used", "elapsed_ms"):
        assert key in rec
    assert isinstance(rec["lhs"], str)  # exact values travel as "p/q"

    out_csv = tmp_path / "r.csv"
    assert run(capsys, "sweep", str(FIXTURES / "small.toml"), "--out", str(out_csv))[0] == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert len(rows) == len(report["records"]) and rows[0]["identity"] == "thm_a"


def test_mutation_fixture_exits_1(capsys):
    code, out, _ = run(capsys, "sweep", str(FIXTURES / "mutation.toml"))
    assert code == 1 and "MISMATCH eq_watson" in out


def test_report_reproducible():
    cfg = load_config(str(FIXTURES / "small.toml"))
    a, b = run_sweep(cfg).to_dict(), run_sweep(cfg).to_dict()
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hwsum", "verify", "chu", "--n", "3", "--x", "1/2", "--y", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "equal_exact" in proc.stdout
