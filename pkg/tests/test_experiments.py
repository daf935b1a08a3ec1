import csv
import io
import math
from pathlib import Path

import numpy as np
import pytest
import scipy.linalg
from click.testing import CliRunner

from zenolab.cli import main
from zenolab.experiments import (
    CSV_HEADER, Check, ExperimentConfig, GridPoint, evaluate_point, grid_points, parse_config,
    run_points, run_scan, verify_bounds,
)

DATA = Path(__file__).parent / "data"


def test_header_is_frozen():
    assert CSV_HEADER == "family,k,beta,J,t,N,dt,error,bound,success_prob"


def test_parse_config_syntax():
    cfg = parse_config("""
        # comment
        system = zz_x:beta=1,J=1e-4
        family = udd
        k = [3, 4]
        dt = logspace(1e-2, 1, 25)   # geometric grid
        scan = dt
        window_policy = 3:20
    """)
    assert cfg.k == [3, 4] and len(cfg.dt) == 25
    assert cfg.dt[0] == pytest.approx(1e-2) and cfg.dt[-1] == pytest.approx(1.0)
    assert cfg.system == "zz_x:beta=1,J=1e-4" and cfg.window_policy == "3:20"


@pytest.mark.parametrize("text", [
    "family = nope\nt = 1",
    "family = udd\nk = [3]\ndt = []\nt = 1\nscan = dt",
    "family = udd\nk = [3]\ndt = [0.1, -0.2]",
    "family = udd\nk = [3]",
    "bogus = 1",
    "family = first_order\nN = [1.5]\nt = 1",
    "family = first_order\nt = 1\nwindow_policy = sideways",
    "no equals sign",
])
def test_parse_config_rejects(text):
    with pytest.raises(ValueError):
        parse_config(text)


def test_grid_order_is_lexicographic():
    cfg = ExperimentConfig(family="trotter_kick", k=[2, 1], J=[0.2, 0.1], N=[4, 2], t=1.0)
    pts = grid_points(cfg)
    keys = [(p.k, p.J, p.N) for p in pts]
    assert keys == sorted(keys) and len(keys) == 8


def test_golden_scan_csv():
    text = run_scan(parse_config((DATA / "small_scan.cfg").read_text()))
    golden = (DATA / "small_scan.golden.csv").read_text()
    assert text.splitlines()[0] == golden.splitlines()[0]
    got = list(csv.reader(io.StringIO(text)))
    want = list(csv.reader(io.StringIO(golden)))
    assert len(got) == len(want)
    for g, w in zip(got[1:4], want[1:4]):
        assert g[:7] == w[:7] and g[8:] == w[8:]
        assert float(g[7]) == pytest.approx(float(w[7]), rel=1e-9)
    assert got[4][0].startswith("# fit: family=udd slope=3.99")


def test_golden_rows_match_scipy_oracle():
    X, Z, I = np.array([[0, 1], [1, 0]]), np.diag([1, -1]), np.eye(2)
    H = np.kron(Z, Z) + 0.005 * (np.kron(X, I) + np.kron(I, X))
    R = np.kron(Z, Z)
    P = (np.eye(4) + R) / 2
    HZ = P @ H @ P + (np.eye(4) - P) @ H @ (np.eye(4) - P)
    rows = list(csv.DictReader(l for l in (DATA / "small_scan.golden.csv").read_text().splitlines()
                               if not l.startswith("#")))
    for row in rows:
        dt = float(row["dt"])
        tj = dt * np.sin(np.arange(5) * np.pi / 8) ** 2
        U = scipy.linalg.expm(-1j * H * (tj[1] - tj[0]))
        for j in range(1, 4):
            U = scipy.linalg.expm(-1j * H * (tj[j + 1] - tj[j])) @ R @ U
        err = np.linalg.norm(U - R @ scipy.linalg.expm(-1j * HZ * dt), 2)
        assert float(row["error"]) == pytest.approx(err, rel=1e-6)


def test_spec_scan_example_row_counts():
    cfg = parse_config("system = zz_x:beta=1,J=1e-4\nfamily = udd\nk = [3, 4, 5, 6]\n"
                       "dt = logspace(1e-2, 1, 25)\nscan = dt\n")
    lines = run_scan(cfg).splitlines()
    assert sum(not l.startswith("#") for l in lines) == 1 + 100
    assert sum(l.startswith("# fit: k=") for l in lines) == 4


def test_scan_deterministic_and_independent_of_jobs():
    cfg = parse_config("family = first_order\nN = [1, 2, 4, 8]\nt = 1\nJ = [0.1, 0.3]\nscan = N\n")
    a, b = run_scan(cfg), run_scan(cfg)
    assert a == b
    assert run_scan(cfg, jobs=2) == a
    rows = [r for r in a.splitlines()[1:] if not r.startswith("#")]
    for r in rows:
        fields = r.split(",")
        assert fields[1] == "" and float(fields[8]) >= float(fields[7])
        assert 0 <= float(fields[9]) <= 1


@pytest.mark.parametrize("family,k", [
    ("first_order", None), ("second_order", None), ("trotter_measurement", 2), ("kick", None),
    ("trotter_kick", 1), ("udd", 4), ("compact", 3), ("compact_kick", 4), ("control", None),
])
def test_every_family_evaluates(family, k):
    p = GridPoint("zz_x:beta=1,J=0.1", 0, family, k, None, None, 4, None, 1.0, None)
    row = evaluate_point(p)
    assert row["family"] == family and 0 <= row["error"] < 1
    assert row["dt"] == pytest.approx(0.25)


def test_random_preset_uses_seed():
    p = GridPoint("random:dim=4,rank=2", 3, "first_order", None, None, None, 2, None, 1.0, None)
    q = GridPoint("random:dim=4,rank=2", 4, "first_order", None, None, None, 2, None, 1.0, None)
    assert evaluate_point(p) == evaluate_point(p)
    assert evaluate_point(p)["error"] != evaluate_point(q)["error"]
    with pytest.raises(ValueError):
        evaluate_point(GridPoint("random:dim=4", 0, "first_order", None, 0.1, None, 2, None, 1.0, None))


def test_check_lines():
    assert Check("x", 4.05, 4, 0.15).line().startswith("PASS x: measured 4.05")
    assert not Check("x", math.nan, 4, 0.15).passed
    assert Check("v", 0, 0, 0, "max").passed and not Check("v", 1, 0, 0, "max").passed


def test_verify_bounds_report_is_reproducible():
    a, b = verify_bounds(9, 7), verify_bounds(9, 7)
    assert a.passed and a.text() == b.text()
    with pytest.raises(ValueError):
        verify_bounds(0, 7)


# --- CLI ----------------------------------------------------------------------

def test_cli_scan(tmp_path):
    runner = CliRunner()
    out = tmp_path / "scan.csv"
    res = runner.invoke(main, ["scan", "--config", str(DATA / "small_scan.cfg"), "--output", str(out)])
    assert res.exit_code == 0, res.output
    first = out.read_bytes()
    res = runner.invoke(main, ["scan", "--config", str(DATA / "small_scan.cfg"), "--output", str(out),
                               "--jobs", "2"])
    assert res.exit_code == 0 and out.read_bytes() == first


def test_cli_scan_errors(tmp_path):
    runner = CliRunner()
    cfg = tmp_path / "empty.cfg"
    cfg.write_text("family = udd\nk = [3]\ndt = []\n")
    assert runner.invoke(main, ["scan", "--config", str(cfg)]).exit_code != 0
    cfg.write_text("family = udd\nk = [3]\ndt = logspace(0.1, 1, 0)\n")
    assert runner.invoke(main, ["scan", "--config", str(cfg)]).exit_code != 0
    cfg.write_text("system = nowhere.txt\nfamily = first_order\nt = 1\n")
    res = runner.invoke(main, ["scan", "--config", str(cfg)])
    assert res.exit_code != 0 and "unknown system" in res.output
    res = runner.invoke(main, ["scan", "--config", str(DATA / "small_scan.cfg"),
                               "--output", str(tmp_path / "missing" / "x.csv")])
    assert res.exit_code != 0 and "cannot write" in res.output


def test_cli_reproduce(tmp_path):
    runner = CliRunner()
    out = tmp_path / "left.csv"
    res = runner.invoke(main, ["reproduce", "randomized_leftpanel", "--output", str(out)])
    assert res.exit_code == 0, res.output
    verdicts = [l for l in res.output.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(verdicts) == 4 and all(v.startswith("PASS") for v in verdicts)
    assert out.read_text().startswith(CSV_HEADER + "\n")
    assert runner.invoke(main, ["reproduce", "fig9"]).exit_code != 0


def test_cli_solve_coeffs():
    res = CliRunner().invoke(main, ["solve-coeffs", "3"])
    assert res.exit_code == 0
    assert "alpha = 0.675603595980" in res.output and "beta = -0.175603595980" in res.output
    res4 = CliRunner().invoke(main, ["solve-coeffs", "4"])
    assert res4.exit_code == 0 and res4.output == CliRunner().invoke(main, ["solve-coeffs", "4"]).output
    assert res4.output.count("residual") == 3
    assert CliRunner().invoke(main, ["solve-coeffs", "5"]).exit_code != 0


def test_cli_verify_bounds():
    runner = CliRunner()
    res = runner.invoke(main, ["verify-bounds", "--trials", "6", "--seed", "7"])
    assert res.exit_code == 0 and res.output.rstrip().endswith("PASS")
    assert runner.invoke(main, ["verify-bounds", "--trials", "6", "--seed", "7"]).output == res.output
    assert runner.invoke(main, ["verify-bounds", "--trials", "0"]).exit_code != 0
