"""Unitary discrete Fourier transforms and band-limited resampling.

The forward transform maps samples on a grid to samples of
f^(xi) = (2*pi)**(-1/2) * integral exp(-i*x*xi) f(x) dx on the dual
grid; it is exactly unitary between the two lattices.  All shifting,
shearing and rescaling helpers act on the band-limited trigonometric
interpolant through the samples (exact on that class, periodic wrap
outside the box).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .grids import Grid1D, GridMismatchError, grids_compatible
from .states import ConfigState, PhaseState
from .grids import PhaseGrid

__all__ = [
    "forward_ft",
    "inverse_ft",
    "partial_ft_p",
    "partial_ift_p",
    "BandLimitError",
]


class BandLimitError(ValueError):
    """Raised when an operation requires band-limited input and the
    sample spectrum has too much mass near the band edge."""


# ----------------------------------------------------------------- raw array
# Array-level transforms; the state-level API wraps these.

def _sign_alternation(n: int) -> np.ndarray:
    return (-1.0) ** np.arange(n)


def ft_array(values: np.ndarray, grid: Grid1D, axis: int = -1) -> np.ndarray:
    """Samples on ``grid`` -> samples of the transform on ``grid.dual``."""
    n = grid.n_points
    if values.shape[axis] != n:
        raise GridMismatchError("axis length does not match grid")
    xi = grid.dual.points
    shp = [1] * values.ndim
    shp[axis] = n
    sgn = _sign_alternation(n).reshape(shp)
    spec = np.fft.fft(values * sgn, axis=axis)
    phase = (grid.spacing / np.sqrt(2.0 * np.pi)) * np.exp(-1j * grid.points[0] * xi)
    return spec * phase.reshape(shp)


def ift_array(values: np.ndarray, dual_grid: Grid1D, out_grid: Grid1D,
              axis: int = -1) -> np.ndarray:
    """Inverse of :func:`ft_array`; ``out_grid`` fixes the sample lattice
    of the reconstruction (defaulting callers pass the dual of the dual)."""
    n = dual_grid.n_points
    if values.shape[axis] != n:
        raise GridMismatchError("axis length does not match grid")
    shp = [1] * values.ndim
    shp[axis] = n
    g = values * np.exp(1j * out_grid.points[0] * dual_grid.points).reshape(shp)
    sgn = _sign_alternation(n).reshape(shp)
    return (dual_grid.spacing / np.sqrt(2.0 * np.pi)) * sgn * np.fft.ifft(g, axis=axis) * n


def fourier_shift(values: np.ndarray, grid: Grid1D, shift, axis: int = -1) -> np.ndarray:
    """values(t) -> values(t - shift) via the band-limited interpolant.

    ``shift`` may be a scalar or an array broadcastable over the other
    axes (per-row/column shear shifts).
    """
    n = grid.n_points
    xif = np.fft.ifftshift(grid.dual.points)
    spec = np.fft.fft(values, axis=axis)
    shift = np.asarray(shift, dtype=float)
    if shift.ndim == 0:
        shp = [1] * values.ndim
        shp[axis] = n
        phase = np.exp(-1j * xif * shift).reshape(shp)
    else:
        # shear: shift amount depends on the complementary axis (2-D only)
        if values.ndim != 2:
            raise ValueError("array-valued shifts are only supported for 2-D fields")
        other = 1 - (axis % 2)
        if shift.shape != (values.shape[other],):
            raise ValueError("shift array must match the complementary axis length")
        if axis % 2 == 1:
            phase = np.exp(-1j * np.outer(shift, xif))
        else:
            phase = np.exp(-1j * np.outer(xif, shift))
    return np.fft.ifft(spec * phase, axis=axis)


def upsample2(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Evaluate the band-limited interpolant on the half-spacing lattice
    (2N points over the same box) by spectral zero padding.

    The Nyquist coefficient is split symmetrically between the two band
    edges so that real data interpolates to real values (and real
    symbols quantize to Hermitian matrices to machine precision).
    """
    n = values.shape[axis]
    spec = np.fft.fftshift(np.fft.fft(values, axis=axis), axes=axis)
    pad_shape = list(values.shape)
    pad_shape[axis] = 2 * n
    pad = np.zeros(pad_shape, complex)
    sl = [slice(None)] * values.ndim
    sl[axis] = slice(n - n // 2, n + n // 2)
    pad[tuple(sl)] = spec
    lo = [slice(None)] * values.ndim
    lo[axis] = slice(n - n // 2, n - n // 2 + 1)
    hi = [slice(None)] * values.ndim
    hi[axis] = slice(n + n // 2, n + n // 2 + 1)
    pad[tuple(lo)] *= 0.5
    pad[tuple(hi)] = pad[tuple(lo)]
    return np.fft.ifft(np.fft.ifftshift(pad, axes=axis), axis=axis) * 2


@lru_cache(maxsize=32)
def _ft_matrix(grid: Grid1D) -> np.ndarray:
    m = ft_array(np.eye(grid.n_points, dtype=complex), grid, axis=0)
    m.flags.writeable = False
    return m


@lru_cache(maxsize=32)
def _ift_matrix(grid: Grid1D) -> np.ndarray:
    m = ift_array(np.eye(grid.n_points, dtype=complex), grid.dual, grid, axis=0)
    m.flags.writeable = False
    return m


@lru_cache(maxsize=32)
def derivative_matrix(grid: Grid1D) -> np.ndarray:
    """Dense matrix of -i d/dx on the band-limited class (spectral)."""
    xi = grid.dual.points
    m = _ift_matrix(grid) @ (xi[:, None] * _ft_matrix(grid))
    m.flags.writeable = False
    return m


def spectral_derivative(values: np.ndarray, grid: Grid1D, axis: int = -1) -> np.ndarray:
    """d/dx along ``axis`` (note: plain derivative, not -i d/dx)."""
    n = grid.n_points
    xif = np.fft.ifftshift(grid.dual.points)
    shp = [1] * values.ndim
    shp[axis] = n
    return np.fft.ifft(np.fft.fft(values, axis=axis) * (1j * xif).reshape(shp), axis=axis)


@lru_cache(maxsize=32)
def _resample_matrix(grid: Grid1D, alpha: float) -> np.ndarray:
    """Matrix R with (R f)[k] = f(alpha * x_k) on the band-limited class."""
    xi = grid.dual.points
    E = (grid.dual.spacing / np.sqrt(2.0 * np.pi)) * np.exp(
        1j * np.outer(alpha * grid.points, xi)
    )
    m = E @ _ft_matrix(grid)
    m.flags.writeable = False
    return m


def resample_scaled(values: np.ndarray, grid: Grid1D, alpha: float,
                    axis: int = -1) -> np.ndarray:
    """values(x) -> values(alpha * x) along ``axis``."""
    R = _resample_matrix(grid, float(alpha))
    moved = np.moveaxis(values, axis, 0)
    out = np.tensordot(R, moved, axes=(1, 0))
    return np.moveaxis(out, 0, axis)


def band_edge_fraction(values: np.ndarray, octave: float = 0.25) -> float:
    """Relative spectral amplitude in the outer ``octave`` of the band,
    maximized over axes; the aliasing guards test this."""
    worst = 0.0
    for axis in range(values.ndim):
        n = values.shape[axis]
        spec = np.fft.fftshift(np.fft.fft(values, axis=axis), axes=axis)
        k = np.abs(np.arange(n) - n // 2)
        outer = k >= (1.0 - octave) * (n // 2)
        sl_out = np.compress(outer, spec, axis=axis)
        total = np.abs(spec).max()
        if total == 0:
            continue
        worst = max(worst, np.abs(sl_out).max() / total)
    return worst


def require_band_limited(values: np.ndarray, tol: float = 1e-7,
                         what: str = "input") -> None:
    frac = band_edge_fraction(values)
    if frac > tol:
        raise BandLimitError(
            f"{what} is not band-limited enough: relative band-edge "
            f"amplitude {frac:.2e} exceeds {tol:.0e}"
        )


# ----------------------------------------------------------------- states

def forward_ft(state: ConfigState) -> ConfigState:
    """Unitary Fourier transform onto the dual grid."""
    return ConfigState(state.grid.dual, ft_array(state.values, state.grid, axis=0))


def inverse_ft(state: ConfigState, out_grid: Grid1D | None = None) -> ConfigState:
    """Inverse transform; ``out_grid`` selects the reconstruction lattice
    (defaults to the dual of the input grid)."""
    grid = out_grid if out_grid is not None else state.grid.dual
    if not grids_compatible(grid.dual, state.grid):
        raise GridMismatchError("out_grid is not dual to the input grid")
    return ConfigState(grid, ift_array(state.values, state.grid, grid, axis=0))


def partial_ft_p(state: PhaseState) -> PhaseState:
    """Transform along the p axis only: Psi(x, p) -> Psi^(x, xi_p)."""
    g = state.grid
    vals = ft_array(state.values, g.p_grid, axis=1)
    return PhaseState(PhaseGrid(g.x_grid, g.p_grid.dual), vals)


def partial_ift_p(state: PhaseState, p_grid: Grid1D | None = None) -> PhaseState:
    """Inverse of :func:`partial_ft_p`."""
    g = state.grid
    out = p_grid if p_grid is not None else g.p_grid.dual
    if not grids_compatible(out.dual, g.p_grid):
        raise GridMismatchError("p_grid is not dual to the state's second axis")
    vals = ift_array(state.values, g.p_grid, out, axis=1)
    return PhaseState(PhaseGrid(g.x_grid, out), vals)
