"""Slow, independent reference computations used by the verification
suites: a finite-difference oscillator eigensolver and a direct
quadrature of the cross-Wigner integral.  Neither touches the spectral
pipeline of the main modules."""

from __future__ import annotations

import numpy as np
from scipy.linalg import eig_banded

__all__ = ["fd_oscillator_levels", "cross_wigner_quadrature"]

# 8th-order central coefficients for f'': f''_i ~ (1/dx^2) sum c_k f_{i+k}
_FD8 = {0: -205.0 / 72.0, 1: 8.0 / 5.0, 2: -1.0 / 5.0, 3: 8.0 / 315.0,
        4: -1.0 / 560.0}


def fd_oscillator_levels(n_levels: int, n_points: int = 2048,
                         half_width: float = 10.0) -> np.ndarray:
    """Lowest eigenvalues of -(1/2) d^2/dx^2 + x^2/2 by a banded
    high-order finite-difference discretization (Dirichlet box)."""
    dx = 2.0 * half_width / n_points
    x = -half_width + dx * np.arange(n_points)
    bands = np.zeros((5, n_points))
    for k, c in _FD8.items():
        bands[k, :] = -0.5 * c / dx ** 2
    bands[0, :] += 0.5 * x ** 2
    w = eig_banded(bands, lower=True, eigvals_only=True,
                   select="i", select_range=(0, n_levels - 1))
    return w


def cross_wigner_quadrature(psi_fn, chi_fn, x_points: np.ndarray,
                            p_points: np.ndarray, n_y: int = 2048,
                            y_half: float = 40.0) -> np.ndarray:
    """Direct Riemann quadrature of

        W(psi, chi)(x, p) = (2*pi)**(-1) int exp(-i p y)
                            psi(x + y/2) chi(x - y/2)* dy

    with the states given as callables evaluated off-lattice (closed
    forms).  Used as the independent oracle for the Moyal map."""
    y = -y_half + (2.0 * y_half / n_y) * np.arange(n_y)
    dy = y[1] - y[0]
    phase = np.exp(-1j * np.outer(y, p_points))
    out = np.empty((len(x_points), len(p_points)), complex)
    for i, xv in enumerate(x_points):
        integrand = psi_fn(xv + y / 2) * np.conj(chi_fn(xv - y / 2))
        out[i] = (dy / (2.0 * np.pi)) * (integrand @ phase)
    return out
