"""The Moyal representation: dilations, rotations, the map onto
cross-Wigner functions, Bopp operators and the star-product action.

All operations here require a self-dual phase grid (x and p axes equal
and Fourier self-dual): the shear resampling of the map U then sends
lattice data to exactly representable data, and half-lattice shifts are
exact Fourier shifts.

The unitary map U acts as
    U Psi(x, p) = IFT_p[ Psihat(x - xi_p/2, x + xi_p/2) ],
implemented as a partial transform in p followed by two Fourier shears;
it carries lifted product states onto (2*pi)**(1/2) times the
cross-Wigner function of the factors, and conjugates the phase-space
Schrodinger operators x, -i d/dx into the Bopp operators
x + (i/2) d/dp and p - (i/2) d/dx.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .grids import Grid1D, PhaseGrid, GridMismatchError, grids_compatible
from .states import ConfigState, PhaseState, norm_phase
from .weyl import Symbol, LinOp, star_values
from .phase_weyl import PhaseWeylOp, quantize_phase
from .isometry import WindowedIsometry
from . import fourier
from .fourier import BandLimitError

__all__ = [
    "dilate", "rotate", "moyal_map", "moyal_map_inv", "cross_wigner",
    "bopp_apply", "bopp_operator", "moyal_heisenberg_weyl",
    "MoyalWeylOp", "quantize_moyal", "star_apply", "stargen_residual",
]

_DENSE_DIM_LIMIT = 4096
_UNITARITY_GUARD = 1e-6

BOPP_NAMES = ("X", "P", "Xi_x", "Xi_p")


def _require_self_dual(grid: PhaseGrid, what: str) -> None:
    if not grid.is_self_dual:
        raise GridMismatchError(
            f"{what} requires a self-dual phase grid "
            "(psqm.self_dual_phase_grid); x and p axes must coincide with "
            "their common Fourier dual"
        )


# ----------------------------------------------------------- one-parameter maps

def dilate(Psi: PhaseState, s: float) -> PhaseState:
    """Dilation group: Psi -> e^{-s} Psi(e^{-s} x, e^{-s} p).

    Band-limited rescaling along both axes; a unitarity check guards
    against mass leaving the box (states must decay inside the
    contraction region).
    """
    _require_self_dual(Psi.grid, "dilate")
    g = Psi.grid.x_grid
    alpha = float(np.exp(-s))
    vals = fourier.resample_scaled(Psi.values, g, alpha, axis=0)
    vals = fourier.resample_scaled(vals, g, alpha, axis=1)
    out = Psi.with_values(np.exp(-s) * vals)
    n_in, n_out = norm_phase(Psi), norm_phase(out)
    if n_in > 0 and abs(n_out - n_in) > _UNITARITY_GUARD * n_in:
        raise BandLimitError(
            f"dilation lost mass through the box boundary "
            f"(norm {n_in:.3e} -> {n_out:.3e}); state is not confined enough"
        )
    return out


def _rotate_plane(values: np.ndarray, grid: Grid1D, theta: float) -> np.ndarray:
    """F -> F o R(theta), R = [[cos, sin], [-sin, cos]], by the standard
    three-shear decomposition; angles beyond pi/2 are split recursively
    and full turns reduce away exactly."""
    theta = float(theta) % (2 * np.pi)
    if theta > np.pi:
        theta -= 2 * np.pi
    if abs(theta) < 1e-15:
        return values.copy()
    if abs(theta) > np.pi / 2:
        return _rotate_plane(_rotate_plane(values, grid, theta / 2), grid, theta / 2)
    t = np.tan(theta / 2)
    s = np.sin(theta)
    pts = grid.points
    # Sx(t): (a,b) -> (a + t*b, b); Sy(-s): (a,b) -> (a, b - s*a)
    out = fourier.fourier_shift(values, grid, -t * pts, axis=0)
    out = fourier.fourier_shift(out, grid, s * pts, axis=1)
    out = fourier.fourier_shift(out, grid, -t * pts, axis=0)
    return out


def rotate(Psi: PhaseState, theta: float) -> PhaseState:
    """Rotation group generated by -(d/dx)(d/dp) - x p: partial
    transform in p, rotation of the (x, xi_p) plane, inverse transform."""
    _require_self_dual(Psi.grid, "rotate")
    g = Psi.grid.x_grid
    hat = fourier.ft_array(Psi.values, g, axis=1)
    hat = _rotate_plane(hat, g, theta)
    vals = fourier.ift_array(hat, g.dual, g, axis=1)
    return Psi.with_values(vals)


def moyal_map(Psi: PhaseState) -> PhaseState:
    """The unitary U: closed-form shear route.

    Equals dilate(rotate(Psi, -pi/4), -ln sqrt 2) on confined states;
    the closed form is the primary path because it resamples once.
    """
    _require_self_dual(Psi.grid, "moyal_map")
    g = Psi.grid.x_grid
    pts = g.points
    hat = fourier.ft_array(Psi.values, g, axis=1)        # (x, xi_p)
    # g1(a, b) = hat(a, a + b): per-row shift by -a
    g1 = fourier.fourier_shift(hat, g, -pts, axis=1)
    # h(u, v) = g1(u - v/2, v): per-column shift by +v/2
    h = fourier.fourier_shift(g1, g, pts / 2, axis=0)
    return Psi.with_values(fourier.ift_array(h, g.dual, g, axis=1))


def moyal_map_inv(Psi: PhaseState) -> PhaseState:
    """Exact inverse of :func:`moyal_map` (the shears unwind)."""
    _require_self_dual(Psi.grid, "moyal_map_inv")
    g = Psi.grid.x_grid
    pts = g.points
    hat = fourier.ft_array(Psi.values, g, axis=1)
    h = fourier.fourier_shift(hat, g, -pts / 2, axis=0)
    g1 = fourier.fourier_shift(h, g, pts, axis=1)
    return Psi.with_values(fourier.ift_array(g1, g.dual, g, axis=1))


# ---------------------------------------------------------------- cross-Wigner

def cross_wigner(psi: ConfigState, phi: ConfigState) -> PhaseState:
    """W(psi, phi)(x, p) = (2*pi)**(-1) * integral exp(-i*p*y)
    psi(x + y/2) phi(x - y/2)* dy.

    Computed by doubling the sample lattice (band-limited) and a
    quadrature over y at the original spacing; independent of the
    shear implementation of U, against which it is cross-checked by
    moyal_map(lift(psi)) = sqrt(2*pi) * cross_wigner(psi, phi) for the
    window whose transform is the lift window.
    """
    if not grids_compatible(psi.grid, phi.grid):
        raise GridMismatchError("cross_wigner needs both states on one grid")
    g = psi.grid
    n = g.n_points
    fh = fourier.upsample2(psi.values, axis=0)
    gh = fourier.upsample2(phi.values, axis=0)
    t = np.arange(-n // 2, n // 2)
    i = np.arange(n)
    left = fh[(2 * i[:, None] + t[None, :]) % (2 * n)]
    right = np.conj(gh[(2 * i[:, None] - t[None, :]) % (2 * n)])
    prod = left * right                                   # (x, t)
    p = g.dual.points
    phase = np.exp(-1j * np.outer(t * g.spacing, p))
    vals = (g.spacing / (2 * np.pi)) * (prod @ phase)
    return PhaseState(PhaseGrid(g, g.dual), vals)


# ------------------------------------------------------------- Bopp operators

def _dd(values: np.ndarray, grid: PhaseGrid, axis: int) -> np.ndarray:
    g = grid.x_grid if axis == 0 else grid.p_grid
    return fourier.spectral_derivative(values, g, axis=axis)


def bopp_apply(name: str, Psi: PhaseState) -> PhaseState:
    """Action of a Bopp operator:

      X    = x + (i/2) d/dp        P    = p + (i/2) d/dx
      Xi_x = p - (i/2) d/dx        Xi_p = x - (i/2) d/dp
    """
    X, P = Psi.grid.meshes()
    v = Psi.values
    if name == "X":
        out = X * v + 0.5j * _dd(v, Psi.grid, 1)
    elif name == "P":
        out = P * v + 0.5j * _dd(v, Psi.grid, 0)
    elif name == "Xi_x":
        out = P * v - 0.5j * _dd(v, Psi.grid, 0)
    elif name == "Xi_p":
        out = X * v - 0.5j * _dd(v, Psi.grid, 1)
    else:
        raise ValueError(f"unknown Bopp operator {name!r}; choose from {BOPP_NAMES}")
    return Psi.with_values(out)


def bopp_operator(name: str, grid: PhaseGrid) -> LinOp:
    """Dense matrix of a Bopp operator on the product lattice
    (size-guarded; use :func:`bopp_apply` on large grids).  All four are
    Hermitian and realize the canonical commutators
    [X, Xi_x] = i, [P, Xi_p] = i, all other pairs commuting."""
    n_x, n_p = grid.shape
    if n_x * n_p > _DENSE_DIM_LIMIT:
        raise MemoryError(f"dense Bopp operator of dimension {n_x * n_p} refused")
    Dx = fourier.derivative_matrix(grid.x_grid)   # -i d/dx
    Dp = fourier.derivative_matrix(grid.p_grid)
    Ix = np.eye(n_x)
    Ip = np.eye(n_p)
    x = np.diag(grid.x_grid.points)
    p = np.diag(grid.p_grid.points)
    # (i/2) d/dp = (i/2)(i Dp) = -Dp/2
    if name == "X":
        M = np.kron(x, Ip) - 0.5 * np.kron(Ix, Dp)
    elif name == "P":
        M = np.kron(Ix, p) - 0.5 * np.kron(Dx, Ip)
    elif name == "Xi_x":
        M = np.kron(Ix, p) + 0.5 * np.kron(Dx, Ip)
    elif name == "Xi_p":
        M = np.kron(x, Ip) + 0.5 * np.kron(Ix, Dp)
    else:
        raise ValueError(f"unknown Bopp operator {name!r}; choose from {BOPP_NAMES}")
    return LinOp("moyal", grid, M, note=f"bopp({name})")


# --------------------------------------------------- displacement and operators

def moyal_heisenberg_weyl(z0, Psi: PhaseState) -> PhaseState:
    """Moyal-representation displacement:
    Psi -> exp(-i*(x0*p - xi0*x)) Psi(x - x0/2, p - xi0/2);
    equals the conjugation of the phase-space displacement by U."""
    _require_self_dual(Psi.grid, "moyal_heisenberg_weyl")
    x0, xi0 = float(z0[0]), float(z0[1])
    g = Psi.grid.x_grid
    vals = fourier.fourier_shift(Psi.values, g, x0 / 2, axis=0)
    vals = fourier.fourier_shift(vals, g, xi0 / 2, axis=1)
    X, P = Psi.grid.meshes()
    return Psi.with_values(np.exp(-1j * (x0 * P - xi0 * X)) * vals)


@dataclass(eq=False)
class MoyalWeylOp:
    """Moyal-representation Weyl operator U A U^{-1}, applied by
    conjugating the phase-space operator through the Moyal map."""

    symbol: Symbol
    phase_op: PhaseWeylOp

    def apply(self, Psi: PhaseState) -> PhaseState:
        _require_self_dual(Psi.grid, "MoyalWeylOp.apply")
        return moyal_map(self.phase_op.apply(moyal_map_inv(Psi)))

    def evolve(self, Psi: PhaseState, t: float) -> PhaseState:
        _require_self_dual(Psi.grid, "MoyalWeylOp.evolve")
        return moyal_map(self.phase_op.evolve(moyal_map_inv(Psi), t))

    def restrict(self, iso: WindowedIsometry) -> LinOp:
        """Config-sized matrix on the image U(range of lift): honest
        conjugation through the composed isometry U T."""
        xg = self.phase_op.x_grid
        n = xg.n_points
        pg = PhaseGrid(xg, iso.p_grid)
        _require_self_dual(pg, "MoyalWeylOp.restrict")
        basis = np.eye(n)
        cols = np.empty((n, n), complex)
        for j in range(n):
            psi = ConfigState(xg, basis[:, j])
            lifted = moyal_map(iso.apply(psi))
            image = self.apply(lifted)
            back = iso.adjoint(moyal_map_inv(image))
            cols[:, j] = back.values
        return LinOp("config", xg, cols, note="moyal|U(range(lift))")

    def matrix(self, p_grid: Grid1D) -> LinOp:
        """Dense matrix on the product lattice via basis application
        (size-guarded)."""
        xg = self.phase_op.x_grid
        n_x, n_p = xg.n_points, p_grid.n_points
        if n_x * n_p > _DENSE_DIM_LIMIT:
            raise MemoryError(f"dense Moyal operator of dimension {n_x * n_p} refused")
        pg = PhaseGrid(xg, p_grid)
        _require_self_dual(pg, "MoyalWeylOp.matrix")
        dim = n_x * n_p
        M = np.empty((dim, dim), complex)
        for j in range(dim):
            e = np.zeros(dim)
            e[j] = 1.0
            out = self.apply(PhaseState(pg, e.reshape(n_x, n_p)))
            M[:, j] = out.values.reshape(-1)
        return LinOp("moyal", pg, M, note="weyl(moyal)")


def quantize_moyal(a: Symbol) -> MoyalWeylOp:
    """Moyal-Weyl operator of a symbol; acts as the left star
    multiplication a * (.) on phase-space states."""
    return MoyalWeylOp(a, quantize_phase(a))


def star_apply(a: Symbol, Psi: PhaseState) -> PhaseState:
    """Left star-product action a * Psi, computed spectrally.

    Polynomial symbols act through the exact finite bidifferential
    expansion; sampled symbols through the Fourier-domain twisted
    product (aliasing-guarded).  Agrees with quantize_moyal(a).apply.
    """
    _require_self_dual(Psi.grid, "star_apply")
    if not (grids_compatible(a.grid.x_grid, Psi.grid.x_grid)
            and grids_compatible(a.grid.p_grid, Psi.grid.p_grid)):
        raise GridMismatchError("symbol and state live on different phase grids")
    first = a.poly if a.is_polynomial else a.values
    return Psi.with_values(star_values(first, Psi.values, Psi.grid))


def stargen_residual(a: Symbol, lam: float, Psi: PhaseState) -> float:
    """|| a * Psi - lam Psi ||; vanishes exactly when Psi solves the
    stargenvalue problem, equivalently when Psi is an eigenstate of the
    Moyal-Weyl operator of a."""
    out = star_apply(a, Psi)
    return norm_phase(out.with_values(out.values - lam * Psi.values))
