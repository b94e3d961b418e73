"""CSV / JSON / gnuplot serialization.

Layouts (documented in the README):

  config states:  columns  x, re, im
  phase states / symbols:  columns  x, p, re, im  (x-major row order)
  gnuplot:  nonuniform-matrix format (first row: n_p then the p values;
            following rows: x then Re of the row), one file per field
  mixed states:  JSON {"x_grid": {...}, "p_grid": {...},
                  "components": [{"weight": w, "psi": [[re, im], ...],
                                  "chi": [[re, im], ...]}]}
                 with unit-norm chi entries scaled by sqrt(weight).

Round trips are accurate to ~1e-16 relative (17 significant digits),
not bit-exact.
"""

from __future__ import annotations

import json

import numpy as np

from .grids import Grid1D, PhaseGrid
from .states import ConfigState, PhaseState, norm_config
from .mixed import MixedState

__all__ = [
    "save_config_csv", "load_config_csv",
    "save_phase_csv", "load_phase_csv",
    "save_gnuplot_matrix", "report_json",
    "save_mixed_json", "load_mixed_json",
]

_FMT = "%.17e"


def _grid_from_points(points: np.ndarray) -> Grid1D:
    n = len(points)
    dx = points[1] - points[0]
    half = 0.5 * n * dx
    return Grid1D(n, half, points[0] + half)


def save_config_csv(state: ConfigState, path) -> None:
    data = np.column_stack([state.grid.points, state.values.real, state.values.imag])
    np.savetxt(path, data, fmt=_FMT, delimiter=",", header="x,re,im")


def load_config_csv(path) -> ConfigState:
    data = np.loadtxt(path, delimiter=",", comments="#")
    grid = _grid_from_points(data[:, 0])
    return ConfigState(grid, data[:, 1] + 1j * data[:, 2])


def save_phase_csv(obj, path) -> None:
    """PhaseState or Symbol (anything with .grid: PhaseGrid and .values)."""
    X, P = obj.grid.meshes()
    data = np.column_stack([X.ravel(), P.ravel(),
                            obj.values.real.ravel(), obj.values.imag.ravel()])
    np.savetxt(path, data, fmt=_FMT, delimiter=",", header="x,p,re,im")


def load_phase_csv(path) -> PhaseState:
    data = np.loadtxt(path, delimiter=",", comments="#")
    x = np.unique(data[:, 0])
    p = np.unique(data[:, 1])
    grid = PhaseGrid(_grid_from_points(x), _grid_from_points(p))
    vals = (data[:, 2] + 1j * data[:, 3]).reshape(len(x), len(p))
    return PhaseState(grid, vals)


def save_gnuplot_matrix(obj, path) -> None:
    """Real part in gnuplot 'nonuniform matrix' layout
    (splot 'file' nonuniform matrix with pm3d)."""
    x = obj.grid.x_grid.points
    p = obj.grid.p_grid.points
    vals = obj.values.real
    with open(path, "w") as fh:
        fh.write(str(len(p)) + " " + " ".join(_FMT % v for v in p) + "\n")
        for i, xv in enumerate(x):
            fh.write(_FMT % xv + " " + " ".join(_FMT % v for v in vals[i]) + "\n")


def report_json(report: dict) -> str:
    """Deterministic JSON encoding (sorted keys, fixed separators)."""
    return json.dumps(report, sort_keys=True, indent=2, separators=(",", ": "))


def _grid_dict(g: Grid1D) -> dict:
    return {"n_points": g.n_points, "half_width": g.half_width, "center": g.center}


def _grid_from_dict(d: dict) -> Grid1D:
    return Grid1D(int(d["n_points"]), float(d["half_width"]), float(d.get("center", 0.0)))


def _pairs(values: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in values]


def save_mixed_json(state: MixedState, path) -> None:
    psi0, chi0 = state.components[0]
    payload = {
        "x_grid": _grid_dict(psi0.grid),
        "p_grid": _grid_dict(chi0.grid),
        "components": [
            {
                "weight": float(norm_config(chi) ** 2),
                "psi": _pairs(psi.values),
                "chi": _pairs(chi.values / norm_config(chi)),
            }
            for psi, chi in state.components
        ],
    }
    with open(path, "w") as fh:
        fh.write(report_json(payload))


def load_mixed_json(path) -> MixedState:
    with open(path) as fh:
        payload = json.load(fh)
    xg = _grid_from_dict(payload["x_grid"])
    pg = _grid_from_dict(payload["p_grid"])

    def _vals(pairs):
        arr = np.asarray(pairs, dtype=float)
        return arr[:, 0] + 1j * arr[:, 1]

    comps = []
    for item in payload["components"]:
        psi = ConfigState(xg, _vals(item["psi"]))
        chi = ConfigState(pg, np.sqrt(float(item["weight"])) * _vals(item["chi"]))
        comps.append((psi, chi))
    return MixedState(comps)
