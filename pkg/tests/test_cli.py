import json
import subprocess
import sys

import numpy as np
import pytest

from psqm import hermite_state, self_dual_phase_grid, serialize
from psqm.cli import main, parse_config, ConfigError


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "psqm.cli", *args],
                          capture_output=True, text=True)
    return proc


def test_config_parser(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\nseed = 7\nwindow = hermite:1\n"
                   "t = 0.1, 0.5\n# comment\ntol_isometry = 1e-9\n")
    params = parse_config(cfg)
    assert params["n_points"] == 64
    assert params["seed"] == 7
    assert params["window"] == "hermite:1"
    assert params["t"] == [0.1, 0.5]
    assert params["tol_isometry"] == 1e-9
    bad = tmp_path / "bad.cfg"
    bad.write_text("just words\n")
    with pytest.raises(ConfigError):
        parse_config(bad)


def test_verify_unknown_suite_usage_error():
    proc = run_cli("verify", "nonsense")
    assert proc.returncode == 2


def test_verify_isometry_small(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\nseed = 11\n")
    out = tmp_path / "rep.json"
    proc = run_cli("verify", "isometry", "--config", str(cfg), "--out", str(out))
    assert proc.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["passed"] and rep["seed"] == 11
    assert rep["suites"][0]["suite"] == "isometry"


def test_verify_determinism(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\nseed = 3\n")
    outs = []
    for k in range(2):
        out = tmp_path / f"rep{k}.json"
        proc = run_cli("verify", "isometry", "--config", str(cfg),
                       "--out", str(out))
        assert proc.returncode == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_wigner_command(tmp_path):
    pg = self_dual_phase_grid(64)
    psi = hermite_state(pg.x_grid, 0)
    chi = hermite_state(pg.x_grid, 0)
    p1, p2 = tmp_path / "psi.csv", tmp_path / "chi.csv"
    serialize.save_config_csv(psi, p1)
    serialize.save_config_csv(chi, p2)
    base = tmp_path / "wig"
    proc = run_cli("wigner", str(p1), str(p2), str(base))
    assert proc.returncode == 0
    W = serialize.load_phase_csv(str(base) + ".csv")
    peak = W.values.real.max()
    assert abs(peak - 1 / np.pi) < 1e-6
    assert (tmp_path / "wig.gp").exists()


def test_wigner_missing_file(tmp_path):
    proc = run_cli("wigner", str(tmp_path / "nope.csv"),
                   str(tmp_path / "nope2.csv"), str(tmp_path / "o"))
    assert proc.returncode == 2


def test_evolve_requires_time(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\n")
    proc = run_cli("evolve", "--config", str(cfg))
    assert proc.returncode == 2
    cfg2 = tmp_path / "c2.cfg"
    cfg2.write_text("n_points = 64\nt = 0.25\n")
    out = tmp_path / "rep.json"
    proc2 = run_cli("evolve", "--config", str(cfg2), "--out", str(out))
    assert proc2.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["passed"]


def test_spectrum_command(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\n")
    out = tmp_path / "rep.json"
    proc = run_cli("spectrum", "--config", str(cfg), "--out", str(out))
    assert proc.returncode == 0
    rep = json.loads(out.read_text())
    ladder = np.asarray(rep["spectrum"]["config"])
    assert np.abs(ladder - (np.arange(len(ladder)) + 0.5)).max() < 1e-5


def test_main_entry_returns_int(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\n")
    code = main(["verify", "isometry", "--config", str(cfg)])
    assert code == 0


def test_verify_all_with_tolerance_override(tmp_path):
    # full sweep on the 128 lattice; the U-composition margin is only
    # available at 256 (acceptance), so its tolerance is overridden here
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 128\ntol_ucomp = 1e-5\n")
    out = tmp_path / "rep.json"
    code = main(["verify", "all", "--config", str(cfg), "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["passed"] and rep["n_checks"] >= 20
    assert len(rep["suites"]) == 7


def test_verify_failure_exit_code(tmp_path):
    # impossible tolerance forces a check failure -> exit 1
    cfg = tmp_path / "c.cfg"
    cfg.write_text("n_points = 64\ntol_isometry = 1e-30\n")
    proc = run_cli("verify", "isometry", "--config", str(cfg))
    assert proc.returncode == 1
