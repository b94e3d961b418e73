"""Mixed states as finite sums of lifted product states.

A mixed state is sum_k psi_k (x) chi_k*, with mutually orthogonal
windows chi_k whose squared norms are the classical weights
(sum_k ||chi_k||^2 = 1, each psi_k normalized).  Measurement
probabilities for a nondegenerate config-space eigenvalue come out as
the convex combination of the per-component probabilities, and the
collapse onto the eigenspace reproduces the transition-probability
identity.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .grids import GridMismatchError, grids_compatible, PhaseGrid
from .states import (ConfigState, PhaseState, inner_config, inner_phase,
                     norm_config, norm_phase)
from .weyl import LinOp

__all__ = ["MixedState", "ZeroProjectionError", "mixed_to_phase",
           "measure_probability", "collapse", "measurement_basis"]

MAX_COMPONENTS = 8


class ZeroProjectionError(ValueError):
    """Measurement outcome has probability zero; no collapsed state exists."""


@dataclass(eq=False)
class MixedState:
    """components: list of (psi_k, chi_k) pairs.  psi_k are normalized;
    chi_k are mutually orthogonal with sum_k ||chi_k||^2 = 1 (weights).

    Windows are re-orthogonalized by Gram-Schmidt (norm-preserving) at
    construction; a warning reports adjustments above 1e-8.
    """

    components: list

    def __post_init__(self):
        comps = list(self.components)
        if not 1 <= len(comps) <= MAX_COMPONENTS:
            raise ValueError(f"need 1..{MAX_COMPONENTS} components, got {len(comps)}")
        xg = comps[0][0].grid
        pg = comps[0][1].grid
        for psi, chi in comps:
            if not (grids_compatible(psi.grid, xg) and grids_compatible(chi.grid, pg)):
                raise GridMismatchError("all components must share the two grids")
            if abs(norm_config(psi) - 1.0) > 1e-8:
                raise ValueError("component psi_k must be normalized")
        # norm-preserving Gram-Schmidt on the windows
        ortho = []
        adjusted = 0.0
        for _, chi in comps:
            v = chi.values.copy()
            nrm0 = norm_config(chi)
            for u in ortho:
                v = v - u.values * (inner_config(u, ConfigState(pg, v))
                                    / max(norm_config(u) ** 2, 1e-300))
            nrm1 = norm_config(ConfigState(pg, v))
            if nrm1 < 1e-12:
                raise ValueError("windows are linearly dependent")
            v = v * (nrm0 / nrm1)
            adjusted = max(adjusted, norm_config(ConfigState(pg, v - chi.values)))
            ortho.append(ConfigState(pg, v))
        if adjusted > 1e-8:
            warnings.warn(
                f"mixed-state windows adjusted by {adjusted:.2e} to restore "
                "orthogonality", stacklevel=2)
        self.components = [(psi, chi) for (psi, _), chi in zip(comps, ortho)]
        total = sum(norm_config(chi) ** 2 for _, chi in self.components)
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"window weights must sum to 1, got {total:.12f}")

    @property
    def weights(self) -> np.ndarray:
        return np.array([norm_config(chi) ** 2 for _, chi in self.components])


def mixed_to_phase(M: MixedState) -> PhaseState:
    """The phase-space wave function sum_k psi_k (x) chi_k*."""
    psi0, chi0 = M.components[0]
    grid = PhaseGrid(psi0.grid, chi0.grid)
    vals = np.zeros(grid.shape, complex)
    for psi, chi in M.components:
        vals += np.outer(psi.values, np.conj(chi.values))
    return PhaseState(grid, vals)


def measure_probability(M: MixedState, phi_alpha: ConfigState) -> float:
    """P = sum_k |(psi_k|phi_alpha)|^2 ||chi_k||^2 for a normalized,
    nondegenerate eigenstate phi_alpha (see measurement_basis)."""
    p = 0.0
    for (psi, chi), w in zip(M.components, M.weights):
        p += abs(inner_config(psi, phi_alpha)) ** 2 * w
    return float(p)


def collapse(M: MixedState, phi_alpha: ConfigState) -> PhaseState:
    """Normalized projection of the mixed state onto the eigenspace of
    phi_alpha; |((Psi | collapsed))|^2 reproduces the measurement
    probability."""
    psi0, chi0 = M.components[0]
    grid = PhaseGrid(psi0.grid, chi0.grid)
    vals = np.zeros(grid.shape, complex)
    for psi, chi in M.components:
        coef = inner_config(phi_alpha, psi)  # projection coefficient
        vals += coef * np.outer(phi_alpha.values, np.conj(chi.values))
    out = PhaseState(grid, vals)
    nrm = norm_phase(out)
    if nrm < 1e-12:
        raise ZeroProjectionError(
            "outcome has zero probability; the projected state vanishes")
    return out.with_values(out.values / nrm)


def measurement_basis(op: LinOp, n_levels: int, gap_tol: float = 1e-6) -> list:
    """Lowest eigenpairs of a config operator as (value, state) pairs,
    rejecting near-degenerate levels (the measurement formulas assume a
    nondegenerate eigenvalue)."""
    if op.rep != "config":
        raise ValueError("measurement basis requires a config operator")
    from .spectral import eig
    values, states = eig(op)
    scale = max(abs(values[0]), abs(values[-1]), 1.0)
    for k in range(min(n_levels, len(values) - 1)):
        if abs(values[k + 1] - values[k]) < gap_tol * scale:
            raise ValueError(
                f"eigenvalue {values[k]:.6g} is (numerically) degenerate; "
                "degenerate measurements are not supported")
    return [(float(values[k]), states[k]) for k in range(n_levels)]
