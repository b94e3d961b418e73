"""Mixed states as single phase-space wave functions.

A statistical mixture rides in one phase-space wave function
sum_k psi_k (x) chi_k(p)* with orthogonal windows whose squared norms
are the classical weights.  Measurement probabilities come out as the
expected convex combinations, and the collapse behaves like textbook
projection.
"""

import numpy as np

from psqm import (MixedState, mixed_to_phase, measure_probability, collapse,
                  measurement_basis, quantize_config, Symbol, ConfigState,
                  hermite_state, self_dual_phase_grid, inner_phase, norm_phase)

grid = self_dual_phase_grid(256)
osc = quantize_config(Symbol.oscillator(grid))
basis = measurement_basis(osc, 6)

# 30% in the ground state, 70% in the third excited state
chi0 = hermite_state(grid.p_grid, 0)
chi1 = hermite_state(grid.p_grid, 1)
M = MixedState([
    (basis[0][1], ConfigState(grid.p_grid, np.sqrt(0.3) * chi0.values)),
    (basis[3][1], ConfigState(grid.p_grid, np.sqrt(0.7) * chi1.values)),
])
Psi = mixed_to_phase(M)
print(f"mixture weights: {M.weights}")
print(f"phase-space norm^2 of the mixture: {norm_phase(Psi) ** 2:.12f}")

print("\nmeasurement probabilities for oscillator levels:")
for val, phi in basis:
    p = measure_probability(M, phi)
    if p > 1e-12:
        print(f"  E = {val:.4f}: P = {p:.6f}")

# collapse onto the observed level reproduces the transition probability
phi0 = basis[0][1]
col = collapse(M, phi0)
p = measure_probability(M, phi0)
print(f"\ncollapse onto E=0.5: |((Psi|collapsed))|^2 = "
      f"{abs(inner_phase(Psi, col)) ** 2:.10f}  (P = {p:.10f})")
