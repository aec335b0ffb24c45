import numpy as np
import pytest

from qecentropy.channel import apply_channel, pauli_channel, unitary_channel
from qecentropy.entropy import (
    check_lindblad_bounds,
    entropy_exchange,
    exchange_matrix,
    lindblad_omega,
    partial_trace_environment,
    partial_trace_system,
    purification_exchange_entropy,
    von_neumann_entropy,
)
from qecentropy.sampling import haar_unitary, random_channel, random_density


def test_von_neumann_entropy_values():
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    assert abs(von_neumann_entropy(np.eye(2) / 2) - 1.0) < 1e-14
    assert abs(von_neumann_entropy(np.eye(8) / 8) - 3.0) < 1e-14
    assert abs(von_neumann_entropy(np.diag([0.25, 0.75])) -
               (-0.25 * np.log2(0.25) - 0.75 * np.log2(0.75))) < 1e-14


def test_von_neumann_entropy_rejects_negative_spectrum():
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.5, -0.5]))


def test_exchange_entropy_zero_for_unitary_channel():
    rng = np.random.default_rng(0)
    c = unitary_channel(haar_unitary(3, rng))
    _, s = entropy_exchange(c, random_density(3, rng))
    assert s < 1e-12


def test_exchange_matrix_depolarizing_style():
    c = pauli_channel([(0.5, "I"), (0.5, "X")])
    sigma = exchange_matrix(c, np.eye(2) / 2)
    assert np.allclose(sigma, np.diag([0.5, 0.5]), atol=1e-14)
    _, s = entropy_exchange(c, np.eye(2) / 2)
    assert abs(s - 1.0) < 1e-12


def test_purification_route_agrees_with_exchange():
    rng = np.random.default_rng(1)
    for _ in range(25):
        n, m = int(rng.integers(2, 5)), int(rng.integers(1, 6))
        c = random_channel(n, m, rng)
        rho = random_density(n, rng)
        _, s_direct = entropy_exchange(c, rho)
        assert abs(s_direct - purification_exchange_entropy(c, rho)) < 1e-10


def test_lindblad_omega_marginals_and_entropy():
    rng = np.random.default_rng(2)
    for _ in range(25):
        n, m = int(rng.integers(2, 5)), int(rng.integers(1, 6))
        c = random_channel(n, m, rng)
        rho = random_density(n, rng)
        omega = lindblad_omega(c, rho)
        sigma = exchange_matrix(c, rho)
        assert np.max(np.abs(partial_trace_system(omega, n, m) - sigma)) < 1e-10
        assert np.max(np.abs(partial_trace_environment(omega, n, m) -
                             apply_channel(c, rho))) < 1e-10
        assert abs(von_neumann_entropy(omega) - von_neumann_entropy(rho)) < 1e-10


def test_lindblad_bounds_hold_and_tight_for_pure_input():
    rng = np.random.default_rng(3)
    c = random_channel(3, 4, rng)
    psi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, np.conj(psi))
    rep = check_lindblad_bounds(c, rho)
    assert rep.holds
    # Pure input: S(rho) = 0, so output and exchange entropies coincide.
    assert rep.S_rho < 1e-12
    assert abs(rep.S_rho_prime - rep.S_sigma) < 1e-10
    assert rep.to_json()["bounds_hold"] is True


def test_dimension_mismatch_raises():
    c = pauli_channel([(1.0, "I")])
    with pytest.raises(ValueError):
        exchange_matrix(c, np.eye(3) / 3)
    with pytest.raises(ValueError):
        lindblad_omega(c, np.eye(3) / 3)
