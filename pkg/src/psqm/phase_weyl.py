"""Weyl operators acting on phase-space wave functions.

The phase-space Weyl operator of a symbol a(x, xi_x) acts along the x
axis only: its kernel factorizes as K_a(x, x') delta(p - p'), so the
dense config-space kernel matrix applied row-wise realizes the operator
exactly on the lattice.  The operator intertwines the windowed lift
with the configuration-space Weyl operator for every window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import Grid1D, PhaseGrid, GridMismatchError, grids_compatible
from .states import ConfigState, PhaseState, norm_config, norm_phase, random_config_state, random_phase_state
from .weyl import Symbol, LinOp, quantize_config
from .isometry import WindowedIsometry
from . import fourier

__all__ = ["phase_heisenberg_weyl", "PhaseWeylOp", "quantize_phase",
           "intertwining_report"]

_DENSE_DIM_LIMIT = 4096


def phase_heisenberg_weyl(z0, Psi: PhaseState) -> PhaseState:
    """Displacement acting on the x axis only:
    Psi -> exp(i*(xi0*x - xi0*x0/2)) Psi(x - x0, p)."""
    x0, xi0 = float(z0[0]), float(z0[1])
    g = Psi.grid.x_grid
    steps = x0 / g.spacing
    if abs(steps - round(steps)) < 1e-9:
        shifted = np.roll(Psi.values, int(round(steps)), axis=0)
    else:
        shifted = fourier.fourier_shift(Psi.values, g, x0, axis=0)
    phase = np.exp(1j * (xi0 * g.points - 0.5 * xi0 * x0))
    return Psi.with_values(phase[:, None] * shifted)


@dataclass(eq=False)
class PhaseWeylOp:
    """Phase-space Weyl operator, stored through its config-space kernel
    matrix (the delta factor in p is implicit)."""

    symbol: Symbol
    config_op: LinOp

    @property
    def x_grid(self) -> Grid1D:
        return self.config_op.grid

    def apply(self, Psi: PhaseState) -> PhaseState:
        if not grids_compatible(Psi.grid.x_grid, self.x_grid):
            raise GridMismatchError("state x grid does not match operator grid")
        return Psi.with_values(self.config_op.matrix @ Psi.values)

    def evolve(self, Psi: PhaseState, t: float) -> PhaseState:
        """exp(-i t A) Psi through the spectral decomposition of the
        x-axis kernel (the operator exponential of the full phase-space
        operator, using its product structure)."""
        M = self.config_op.matrix
        w, V = np.linalg.eigh(0.5 * (M + M.conj().T))
        U = (V * np.exp(-1j * w * t)) @ V.conj().T
        return Psi.with_values(U @ Psi.values)

    def matrix(self, p_grid: Grid1D) -> LinOp:
        """Dense matrix on the full product lattice (size-guarded)."""
        n_x = self.x_grid.n_points
        n_p = p_grid.n_points
        if n_x * n_p > _DENSE_DIM_LIMIT:
            raise MemoryError(
                f"dense phase operator of dimension {n_x * n_p} refused; "
                "use apply() for matrix-free action"
            )
        pg = PhaseGrid(self.x_grid, p_grid)
        return LinOp("phase_schrodinger", pg,
                     np.kron(self.config_op.matrix, np.eye(n_p)),
                     note="weyl(phase)")

    def restrict(self, iso: WindowedIsometry) -> LinOp:
        """Config-sized matrix of the operator compressed to the range of
        the lift: T* A T, computed by lifting the sample basis, applying
        the operator and integrating against the window."""
        n = self.x_grid.n_points
        chi = iso.window.values
        dp = iso.p_grid.spacing
        # A (e_j (x) chi*) = (M e_j) (x) chi*; integrate against chi dp
        lifted_weight = np.sum(np.conj(chi) * chi).real * dp
        R = self.config_op.matrix * lifted_weight
        return LinOp("config", self.x_grid, R, note="phase|range(lift)")


def quantize_phase(a: Symbol) -> PhaseWeylOp:
    """Phase-space Weyl operator of a symbol (matrix-free on the full
    lattice; dense via .matrix() on small grids)."""
    return PhaseWeylOp(a, quantize_config(a))


def intertwining_report(a: Symbol, iso: WindowedIsometry, samples: int,
                        rng: np.random.Generator) -> dict:
    """Max residuals of the two intertwining relations over random
    normalized states:

      forward:  A (T psi) = T (a psi)
      adjoint:  T* (A Psi) = a (T* Psi)
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    op = quantize_phase(a)
    cfg = op.config_op
    fwd = 0.0
    adj = 0.0
    for _ in range(samples):
        psi = random_config_state(cfg.grid, rng)
        lhs = op.apply(iso.apply(psi))
        rhs = iso.apply(cfg.apply(psi))
        fwd = max(fwd, norm_phase(lhs.with_values(lhs.values - rhs.values)))
        Psi = random_phase_state(PhaseGrid(cfg.grid, iso.p_grid), rng)
        lhs2 = iso.adjoint(op.apply(Psi))
        rhs2 = cfg.apply(iso.adjoint(Psi))
        adj = max(adj, norm_config(lhs2.with_values(lhs2.values - rhs2.values)))
    return {
        "relation": "phase_weyl intertwining",
        "max_residual": max(fwd, adj),
        "forward_residual": fwd,
        "adjoint_residual": adj,
        "samples": samples,
    }
