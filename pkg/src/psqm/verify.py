"""Verification suites: each re-checks one family of unitary-equivalence
identities on a desk-scale lattice and reports residuals against fixed
tolerances.  The CLI `verify` command and the acceptance test suite both
run through :func:`run_verify`; reports are deterministic given the seed.
"""

from __future__ import annotations

import numpy as np

from .grids import PhaseGrid, self_dual_phase_grid
from .states import (ConfigState, PhaseState, gaussian_state,
                     gaussian_values, hermite_state, hermite_values,
                     inner_config, inner_phase, norm_config, norm_phase,
                     random_config_state, random_phase_state)
from .weyl import Symbol, quantize_config, moyal_product
from .isometry import WindowedIsometry
from .phase_weyl import quantize_phase, intertwining_report
from .moyal import (bopp_apply, cross_wigner, dilate, moyal_map,
                    quantize_moyal, rotate, star_apply,
                    stargen_residual)
from .mixed import MixedState, collapse, measure_probability, measurement_basis, mixed_to_phase
from .spectral import compare_representations, spectrum_report
from .fourier import forward_ft
from . import reference

__all__ = ["SUITE_NAMES", "default_params", "run_verify"]

SUITE_NAMES = ("isometry", "intertwining", "unitarity", "star", "spectrum",
               "dynamics", "mixed")


def default_params() -> dict:
    return {
        "n_points": 256,
        "seed": 1234,
        "window": "hermite:0",
        "symbol": "oscillator",
        "times": [0.1, 0.5, 1.0],
    }


def _check(name: str, value: float, tol: float) -> dict:
    return {"name": name, "value": float(value), "tolerance": float(tol),
            "passed": bool(value < tol)}


def _tol(params: dict, key: str, default: float) -> float:
    return float(params.get(key, default))


def _grid(params: dict) -> PhaseGrid:
    return self_dual_phase_grid(int(params["n_points"]))


def _window(params: dict, grid) -> ConfigState:
    spec = str(params.get("window", "hermite:0"))
    kind, _, rest = spec.partition(":")
    if kind == "hermite":
        return hermite_state(grid, int(rest or 0))
    if kind == "gaussian":
        x0, p0, w = (float(v) for v in rest.split(","))
        return gaussian_state(grid, x0, p0, w)
    raise ValueError(f"unknown window spec {spec!r}")


def _symbol(params: dict, grid: PhaseGrid, name=None) -> Symbol:
    name = str(name if name is not None else params.get("symbol", "oscillator"))
    table = {
        "oscillator": Symbol.oscillator,
        "x": Symbol.coordinate,
        "xi": Symbol.momentum,
        "free": Symbol.free_particle,
        "unit": Symbol.unit,
    }
    if name in table:
        return table[name](grid)
    if name == "xxi":
        return Symbol.polynomial(grid, {(1, 1): 1.0})
    raise ValueError(f"unknown symbol {name!r}")


def _sampled_corpus(grid: PhaseGrid) -> list:
    """Gaussian-damped polynomial symbols, sampled (no evaluator), for
    the spectral star-product and composition checks."""
    X, XI = grid.meshes()
    damp = np.exp(-(X ** 2 + XI ** 2) / 8.0)
    return [
        Symbol.from_samples(grid, damp),
        Symbol.from_samples(grid, (X + 0.3 * XI) * damp),
        Symbol.from_samples(grid, (X * XI + 0.2j * XI ** 2) * damp),
    ]


# ------------------------------------------------------------------ suites

def suite_isometry(params: dict) -> list:
    rng = np.random.default_rng(int(params["seed"]))
    grid = _grid(params)
    chi = _window(params, grid.p_grid)
    iso = WindowedIsometry(chi)
    tol = _tol(params, "tol_isometry", 1e-10)

    dev = 0.0
    for _ in range(50):
        psi = random_config_state(grid.x_grid, rng)
        phi = random_config_state(grid.x_grid, rng)
        lhs = inner_phase(iso.apply(psi), iso.apply(phi))
        dev = max(dev, abs(lhs - inner_config(psi, phi)))
    idem = 0.0
    sadj = 0.0
    for _ in range(10):
        Psi = random_phase_state(grid, rng)
        Phi = random_phase_state(grid, rng)
        P1 = iso.project(Psi)
        P2 = iso.project(P1)
        idem = max(idem, norm_phase(P2.with_values(P2.values - P1.values)))
        sadj = max(sadj, abs(inner_phase(Phi, P1) - inner_phase(iso.project(Phi), Psi)))
    return [
        _check("inner_product_preserved[50 pairs]", dev, tol),
        _check("projector_idempotent", idem, tol),
        _check("projector_self_adjoint", sadj, tol),
    ]


def suite_intertwining(params: dict) -> list:
    rng = np.random.default_rng(int(params["seed"]))
    grid = _grid(params)
    iso = WindowedIsometry(_window(params, grid.p_grid))
    tol = _tol(params, "tol_intertwining", 1e-8)
    checks = []
    for name in ("x", "xi", "xxi", "oscillator"):
        rep = intertwining_report(_symbol(params, grid, name), iso, 20, rng)
        checks.append(_check(f"forward[{name}]", rep["forward_residual"], tol))
        checks.append(_check(f"adjoint[{name}]", rep["adjoint_residual"], tol))
    return checks


def suite_unitarity(params: dict) -> list:
    rng = np.random.default_rng(int(params["seed"]))
    grid = _grid(params)
    tol_norm = _tol(params, "tol_unitarity", 1e-8)
    tol_wig = _tol(params, "tol_wigner", 1e-7)
    tol_comp = _tol(params, "tol_ucomp", 1e-7)

    drift = 0.0
    for _ in range(50):
        Psi = random_phase_state(grid, rng)
        drift = max(drift, abs(norm_phase(moyal_map(Psi)) - norm_phase(Psi)))

    # lifted pairs against the quadrature cross-Wigner oracle
    pairs = [("h", 0, "h", 0), ("h", 1, "h", 0), ("h", 2, "h", 1),
             ("h", 3, "h", 3), ("h", 5, "h", 2), ("h", 4, "h", 0),
             ("g", (0.8, -0.4, 1.0), "h", 0), ("g", (-1.2, 0.6, 1.3), "h", 1),
             ("g", (0.5, 0.5, 0.9), "g", (-0.5, 0.2, 1.1)),
             ("h", 6, "g", (0.3, -0.7, 1.0))]
    xg = grid.x_grid

    def make(kind, arg):
        if kind == "h":
            return hermite_state(xg, arg), (lambda t, k=arg: hermite_values(t, k))
        x0, p0, w = arg
        return (gaussian_state(xg, x0, p0, w),
                lambda t, a=x0, b=p0, c=w: gaussian_values(t, a, b, c))

    wig_err = 0.0
    xw_err = 0.0
    for kp, ap, kc, ac in pairs:
        psi, psi_fn = make(kp, ap)
        chi, chi_fn = make(kc, ac)
        lifted = WindowedIsometry(forward_ft(chi)).apply(psi)
        U_lift = moyal_map(lifted)
        Wq = reference.cross_wigner_quadrature(psi_fn, chi_fn, xg.points, xg.points)
        wig_err = max(wig_err, np.abs(U_lift.values - np.sqrt(2 * np.pi) * Wq).max())
        Wd = cross_wigner(psi, chi)
        xw_err = max(xw_err, np.abs(U_lift.values
                                    - np.sqrt(2 * np.pi) * Wd.values).max())

    comp = 0.0
    for _ in range(5):
        Psi = random_phase_state(grid, rng)
        via = dilate(rotate(Psi, -np.pi / 4), -np.log(np.sqrt(2.0)))
        comp = max(comp, np.abs(moyal_map(Psi).values - via.values).max())

    return [
        _check("norm_preserved[50 states]", drift, tol_norm),
        _check("lift_vs_wigner_quadrature[10 pairs]", wig_err, tol_wig),
        _check("lift_vs_cross_wigner", xw_err, tol_wig),
        _check("closed_form_vs_composition", comp, tol_comp),
    ]


def suite_star(params: dict) -> list:
    rng = np.random.default_rng(int(params["seed"]))
    grid = _grid(params)
    tol_star = _tol(params, "tol_star", 1e-6)
    tol_bopp = _tol(params, "tol_bopp", 1e-8)
    tol_gen = _tol(params, "tol_stargen", 1e-6)
    tol_cmp = _tol(params, "tol_compose", 1e-6)

    corpus = _sampled_corpus(grid) + [_symbol(params, grid, "oscillator")]
    act = 0.0
    for a in corpus:
        op = quantize_moyal(a)
        for _ in range(3):
            Psi = random_phase_state(grid, rng)
            lhs = star_apply(a, Psi)
            rhs = op.apply(Psi)
            act = max(act, norm_phase(lhs.with_values(lhs.values - rhs.values)))

    comm = 0.0
    zero = 0.0
    canonical = (("X", "Xi_x"), ("P", "Xi_p"))
    vanishing = (("X", "P"), ("X", "Xi_p"), ("P", "Xi_x"), ("Xi_x", "Xi_p"))
    for _ in range(5):
        Psi = random_phase_state(grid, rng)

        def commutator(a, b, Psi=Psi):
            lhs = bopp_apply(a, bopp_apply(b, Psi))
            rhs = bopp_apply(b, bopp_apply(a, Psi))
            return lhs.with_values(lhs.values - rhs.values)

        for a, b in canonical:
            c = commutator(a, b)
            comm = max(comm, norm_phase(c.with_values(c.values - 1j * Psi.values)))
        for a, b in vanishing:
            zero = max(zero, norm_phase(commutator(a, b)))

    X, P = grid.meshes()
    W0 = PhaseState(grid, np.exp(-(X ** 2 + P ** 2)))
    W0 = W0.with_values(W0.values / norm_phase(W0))
    gen = stargen_residual(_symbol(params, grid, "oscillator"), 0.5, W0)

    comp = 0.0
    sampled = _sampled_corpus(grid)
    for a, b in [(sampled[0], sampled[1]), (sampled[1], sampled[2])]:
        Mc = quantize_config(moyal_product(a, b)).matrix
        Mab = quantize_config(a).matrix @ quantize_config(b).matrix
        comp = max(comp, np.linalg.norm(Mc - Mab, ord=2))

    return [
        _check("star_apply_vs_quantize_moyal", act, tol_star),
        _check("bopp_canonical_commutators", comm, tol_bopp),
        _check("bopp_vanishing_commutators", zero, tol_bopp),
        _check("stargen_oscillator_ground", gen, tol_gen),
        _check("quantize_star_vs_compose", comp, tol_cmp),
    ]


def suite_spectrum(params: dict) -> list:
    grid = _grid(params)
    chi = _window(params, grid.p_grid)
    tol_pair = _tol(params, "tol_spectrum", 1e-6)
    tol_oracle = _tol(params, "tol_spectrum_oracle", 1e-5)
    rep = spectrum_report(_symbol(params, grid, "oscillator"), chi, n_levels=8)
    fd = reference.fd_oscillator_levels(8)
    oracle_dev = float(np.abs(np.asarray(rep["config"]) - fd).max())
    return [
        _check("ladders_pairwise[8 levels]", rep["max_deviation"], tol_pair),
        _check("config_vs_fd_oracle", oracle_dev, tol_oracle),
    ]


def suite_dynamics(params: dict) -> list:
    grid = _grid(params)
    chi = _window(params, grid.p_grid)
    tol_d = _tol(params, "tol_dynamics", 1e-6)
    tol_n = _tol(params, "tol_norm_drift", 1e-8)
    psi0 = gaussian_state(grid.x_grid, 1.0, 0.5, 1.0)
    checks = []
    for name in ("oscillator", "free"):
        a = _symbol(params, grid, name)
        for t in params.get("times", (0.1, 0.5, 1.0)):
            rep = compare_representations(a, chi, float(t), psi0)
            checks.append(_check(f"distance[{name}, t={t}]", rep["max_distance"], tol_d))
            checks.append(_check(f"norm_drift[{name}, t={t}]", rep["norm_drift"], tol_n))
    return checks


def suite_mixed(params: dict) -> list:
    grid = _grid(params)
    xg, pg = grid.x_grid, grid.p_grid
    tol = _tol(params, "tol_mixed", 1e-10)
    osc = _symbol(params, grid, "oscillator")
    cfg = quantize_config(osc)
    basis = measurement_basis(cfg, 8)
    phi0 = basis[0][1]

    # constructed 2-component example: psi_1 = phi_0, psi_2 orthogonal to it
    psi1 = phi0
    psi2 = basis[3][1]
    chi1 = hermite_state(pg, 0)
    chi2 = hermite_state(pg, 1)
    comps = [(psi1, ConfigState(pg, np.sqrt(0.3) * chi1.values)),
             (psi2, ConfigState(pg, np.sqrt(0.7) * chi2.values))]
    M = MixedState(comps)
    Psi = mixed_to_phase(M)

    p = measure_probability(M, phi0)
    exact_dev = abs(p - 0.3)

    # phase-space route: standard rules on the lifted eigenbasis
    p_phase = 0.0
    for _, chik in M.components:
        w = norm_config(chik)
        unit = ConfigState(pg, chik.values / w)
        Phi_ak = WindowedIsometry(unit).apply(phi0)
        p_phase += abs(inner_phase(Psi, Phi_ak)) ** 2
    route_dev = abs(p_phase - p)

    Upsilon = collapse(M, phi0)
    trans_dev = abs(abs(inner_phase(Psi, Upsilon)) ** 2 - p)

    total = sum(measure_probability(M, st) for _, st in basis)
    total_dev = max(0.0, total - 1.0)

    # expectation consistency through the per-component representation
    AP = np.zeros(grid.shape, complex)
    for (psik, chik), w in zip(M.components, M.weights):
        unit = ConfigState(pg, chik.values / np.sqrt(w))
        AP += WindowedIsometry(unit).represent_apply(cfg, Psi).values
    lhs = inner_phase(Psi, PhaseState(grid, AP))
    rhs = sum(w * inner_config(psik, cfg.apply(psik)).real
              for (psik, _), w in zip(M.components, M.weights))
    expect = abs(lhs - rhs)

    return [
        _check("convex_combination_exact", exact_dev, tol),
        _check("phase_route_equals_formula", route_dev, tol),
        _check("collapse_transition_probability", trans_dev, tol),
        _check("total_probability_bound", total_dev, _tol(params, "tol_total", 1e-8)),
        _check("expectation_consistency", expect, _tol(params, "tol_expect", 1e-8)),
    ]


_SUITES = {
    "isometry": suite_isometry,
    "intertwining": suite_intertwining,
    "unitarity": suite_unitarity,
    "star": suite_star,
    "spectrum": suite_spectrum,
    "dynamics": suite_dynamics,
    "mixed": suite_mixed,
}


def run_verify(suites, params: dict | None = None) -> dict:
    """Run named suites ('all' expands to every suite) and assemble the
    deterministic report."""
    merged = default_params()
    if params:
        merged.update(params)
    if isinstance(suites, str):
        suites = [suites]
    names = list(SUITE_NAMES) if "all" in suites else list(suites)
    unknown = [n for n in names if n not in _SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from "
                         f"{list(SUITE_NAMES) + ['all']}")
    out = {"seed": int(merged["seed"]),
           "params": {k: merged[k] for k in sorted(merged)},
           "suites": []}
    for name in names:
        checks = _SUITES[name](merged)
        out["suites"].append({
            "suite": name,
            "checks": checks,
            "passed": all(c["passed"] for c in checks),
        })
    out["n_checks"] = sum(len(s["checks"]) for s in out["suites"])
    out["passed"] = all(s["passed"] for s in out["suites"])
    return out
