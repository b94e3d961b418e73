import json

import numpy as np
import pytest

from psqm import (ConfigState, MixedState, hermite_state, gaussian_state,
                  cross_wigner, make_grid, self_dual_phase_grid,
                  grids_compatible, random_config_state, measurement_basis,
                  quantize_config, Symbol)
from psqm import serialize


def test_config_csv_roundtrip(tmp_path, rng):
    g = make_grid(64, 7.5)
    psi = random_config_state(g, rng)
    path = tmp_path / "psi.csv"
    serialize.save_config_csv(psi, path)
    back = serialize.load_config_csv(path)
    assert grids_compatible(back.grid, g)
    scale = np.abs(psi.values).max()
    assert np.abs(back.values - psi.values).max() < 1e-15 * scale + 1e-300


def test_phase_csv_roundtrip(tmp_path):
    pg = self_dual_phase_grid(32)
    W = cross_wigner(hermite_state(pg.x_grid, 1), hermite_state(pg.x_grid, 0))
    path = tmp_path / "w.csv"
    serialize.save_phase_csv(W, path)
    back = serialize.load_phase_csv(path)
    assert grids_compatible(back.grid.x_grid, W.grid.x_grid)
    assert grids_compatible(back.grid.p_grid, W.grid.p_grid)
    assert np.abs(back.values - W.values).max() < 1e-15


def test_gnuplot_matrix_layout(tmp_path):
    pg = self_dual_phase_grid(16)
    W = cross_wigner(hermite_state(pg.x_grid, 0), hermite_state(pg.x_grid, 0))
    path = tmp_path / "w.gp"
    serialize.save_gnuplot_matrix(W, path)
    lines = path.read_text().strip().splitlines()
    header = lines[0].split()
    assert int(header[0]) == 16 and len(header) == 17
    assert len(lines) == 17
    row = lines[1].split()
    assert len(row) == 17
    assert abs(float(row[0]) - pg.x_grid.points[0]) < 1e-12


def test_report_json_is_deterministic():
    rep = {"b": 1.0, "a": [1, 2], "c": {"y": 2.5e-11, "x": "s"}}
    assert serialize.report_json(rep) == serialize.report_json(json.loads(
        serialize.report_json(rep)))


def test_mixed_json_roundtrip(tmp_path):
    pg = self_dual_phase_grid(64)
    basis = measurement_basis(quantize_config(Symbol.oscillator(pg)), 3)
    chi0, chi1 = hermite_state(pg.p_grid, 0), hermite_state(pg.p_grid, 1)
    comps = [(basis[0][1], ConfigState(pg.p_grid, np.sqrt(0.25) * chi0.values)),
             (basis[2][1], ConfigState(pg.p_grid, np.sqrt(0.75) * chi1.values))]
    M = MixedState(comps)
    path = tmp_path / "mixed.json"
    serialize.save_mixed_json(M, path)
    back = serialize.load_mixed_json(path)
    assert np.abs(back.weights - M.weights).max() < 1e-12
    from psqm import mixed_to_phase
    A = mixed_to_phase(M)
    B = mixed_to_phase(back)
    assert np.abs(A.values - B.values).max() < 1e-12
