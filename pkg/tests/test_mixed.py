import numpy as np
import pytest

from psqm import (MixedState, ZeroProjectionError, mixed_to_phase,
                  measure_probability, collapse, measurement_basis,
                  hermite_state, gaussian_state, ConfigState, inner_phase,
                  norm_phase, norm_config, quantize_config, Symbol,
                  WindowedIsometry, self_dual_phase_grid)


@pytest.fixture(scope="module")
def setting():
    pg = self_dual_phase_grid(128)
    osc = quantize_config(Symbol.oscillator(pg))
    basis = measurement_basis(osc, 6)
    return pg, osc, basis


def weighted(chi, w):
    return ConfigState(chi.grid, np.sqrt(w) * chi.values)


def test_single_component_reduces_to_lift(setting):
    pg, _, basis = setting
    psi = basis[2][1]
    chi = hermite_state(pg.p_grid, 0)
    M = MixedState([(psi, chi)])
    Psi = mixed_to_phase(M)
    lifted = WindowedIsometry(chi).apply(psi)
    assert np.abs(Psi.values - lifted.values).max() < 1e-12


def test_two_component_norm(setting):
    pg, _, basis = setting
    comps = [(basis[0][1], weighted(hermite_state(pg.p_grid, 0), 0.3)),
             (basis[1][1], weighted(hermite_state(pg.p_grid, 1), 0.7))]
    M = MixedState(comps)
    assert abs(norm_phase(mixed_to_phase(M)) ** 2 - 1.0) < 1e-10
    assert np.abs(M.weights - [0.3, 0.7]).max() < 1e-12


def test_component_order_irrelevant(setting):
    pg, _, basis = setting
    c1 = (basis[0][1], weighted(hermite_state(pg.p_grid, 0), 0.4))
    c2 = (basis[3][1], weighted(hermite_state(pg.p_grid, 2), 0.6))
    A = mixed_to_phase(MixedState([c1, c2]))
    B = mixed_to_phase(MixedState([c2, c1]))
    assert np.abs(A.values - B.values).max() < 1e-12


def test_measure_probability_formula(setting):
    pg, _, basis = setting
    phi = basis[0][1]
    other = basis[3][1]
    comps = [(phi, weighted(hermite_state(pg.p_grid, 0), 0.3)),
             (other, weighted(hermite_state(pg.p_grid, 1), 0.7))]
    M = MixedState(comps)
    assert abs(measure_probability(M, phi) - 0.3) < 1e-10
    # all components aligned -> 1; all orthogonal -> 0
    M1 = MixedState([(phi, weighted(hermite_state(pg.p_grid, 0), 0.5)),
                     (phi, weighted(hermite_state(pg.p_grid, 1), 0.5))])
    assert abs(measure_probability(M1, phi) - 1.0) < 1e-10
    assert measure_probability(M1, other) < 1e-10


def test_probability_in_unit_interval_and_sums(setting):
    pg, _, basis = setting
    comps = [(basis[1][1], weighted(hermite_state(pg.p_grid, 0), 0.45)),
             (basis[4][1], weighted(hermite_state(pg.p_grid, 3), 0.55))]
    M = MixedState(comps)
    total = 0.0
    for _, phi in basis:
        p = measure_probability(M, phi)
        assert -1e-12 <= p <= 1 + 1e-10
        total += p
    assert total <= 1 + 1e-8


def test_collapse_pure_case(setting):
    pg, _, basis = setting
    phi = basis[0][1]
    M = MixedState([(phi, hermite_state(pg.p_grid, 0))])
    Psi = mixed_to_phase(M)
    col = collapse(M, phi)
    assert abs(abs(inner_phase(Psi, col)) ** 2 - 1.0) < 1e-10


def test_collapse_transition_probability(setting):
    pg, _, basis = setting
    phi = basis[0][1]
    comps = [(phi, weighted(hermite_state(pg.p_grid, 0), 0.3)),
             (basis[3][1], weighted(hermite_state(pg.p_grid, 1), 0.7))]
    M = MixedState(comps)
    Psi = mixed_to_phase(M)
    col = collapse(M, phi)
    assert abs(norm_phase(col) - 1.0) < 1e-12
    p = measure_probability(M, phi)
    assert abs(abs(inner_phase(Psi, col)) ** 2 - p) < 1e-10


def test_collapse_zero_probability_raises(setting):
    pg, _, basis = setting
    comps = [(basis[1][1], weighted(hermite_state(pg.p_grid, 0), 0.5)),
             (basis[2][1], weighted(hermite_state(pg.p_grid, 1), 0.5))]
    M = MixedState(comps)
    with pytest.raises(ZeroProjectionError):
        collapse(M, basis[5][1])


def test_window_constraints(setting):
    pg, _, basis = setting
    psi = basis[0][1]
    # weights not summing to one
    with pytest.raises(ValueError):
        MixedState([(psi, weighted(hermite_state(pg.p_grid, 0), 0.3)),
                    (psi.with_values(basis[1][1].values),
                     weighted(hermite_state(pg.p_grid, 1), 0.4))])
    # non-normalized psi
    with pytest.raises(ValueError):
        MixedState([(psi.with_values(2 * psi.values),
                     hermite_state(pg.p_grid, 0))])
    # nearly parallel windows get re-orthogonalized with a warning
    chi0 = hermite_state(pg.p_grid, 0)
    chi1 = hermite_state(pg.p_grid, 1)
    tilted = ConfigState(pg.p_grid,
                         np.sqrt(0.5) * (chi1.values + 0.05 * chi0.values)
                         / np.sqrt(1 + 0.05 ** 2))
    with pytest.warns(UserWarning):
        M = MixedState([(basis[0][1], weighted(chi0, 0.5)), (basis[1][1], tilted)])
    w = M.weights
    assert abs(w.sum() - 1.0) < 1e-10


def test_degenerate_measurement_rejected(pg128):
    # multiplication by x^2 has doubly degenerate eigenvalues
    a = Symbol.polynomial(pg128, {(2, 0): 1.0})
    op = quantize_config(a)
    with pytest.raises(ValueError):
        measurement_basis(op, 4)


def test_too_many_components(setting):
    pg, _, basis = setting
    comps = [(basis[0][1], weighted(hermite_state(pg.p_grid, k), 1.0 / 9))
             for k in range(9)]
    with pytest.raises(ValueError):
        MixedState(comps)
