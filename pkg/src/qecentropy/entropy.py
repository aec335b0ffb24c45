"""Von Neumann entropy, entropy exchange, and the Lindblad entropy bounds.

All entropies are in bits (logarithm base two).
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .channel import QuantumChannel, apply_channel, validate_density
from .numerics import DEFAULT_TOL, ToleranceConfig, as_matrix, dag


def _entropy_of_spectrum(w: np.ndarray, tol: ToleranceConfig) -> float:
    w = np.asarray(w, dtype=float)
    lam_max = max(1.0, float(w.max(initial=0.0)))
    if w.min(initial=0.0) < -tol.eps_rank * lam_max:
        raise ValueError(f"spectrum has negative weight {w.min():.3e}")
    w = w[w > 0]
    return float(-(w * np.log2(w)).sum()) if len(w) else 0.0


def von_neumann_entropy(rho, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """-Tr(rho log2 rho) with the 0*log(0) := 0 convention."""
    rho = validate_density(rho, tol)
    return _entropy_of_spectrum(np.linalg.eigvalsh(rho), tol)


@dataclasses.dataclass(frozen=True)
class LindbladReport:
    """Entropies entering the Lindblad inequalities and whether they hold."""

    S_rho: float
    S_rho_prime: float
    S_sigma: float
    holds: bool

    def to_json(self) -> dict:
        return {
            "S_rho": self.S_rho,
            "S_rho_prime": self.S_rho_prime,
            "S_sigma": self.S_sigma,
            "bounds_hold": self.holds,
        }


def exchange_matrix(c: QuantumChannel, rho) -> np.ndarray:
    """The exchange state: sigma_ij = Tr(rho E_i^dag E_j)."""
    rho = as_matrix(rho)
    if rho.shape != (c.dim, c.dim):
        raise ValueError(f"state shape {rho.shape} does not match channel dim {c.dim}")
    m = c.num_kraus
    sigma = np.empty((m, m), dtype=complex)
    for i, ei in enumerate(c.kraus):
        for j, ej in enumerate(c.kraus):
            sigma[i, j] = np.trace(rho @ dag(ei) @ ej)
    return (sigma + dag(sigma)) / 2


def entropy_exchange(
    c: QuantumChannel, rho, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[np.ndarray, float]:
    """Exchange state and its entropy; zero for any unitary channel."""
    sigma = exchange_matrix(c, rho)
    return sigma, _entropy_of_spectrum(np.linalg.eigvalsh(sigma), tol)


def purification_exchange_entropy(
    c: QuantumChannel, rho, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """Entropy exchange via a purification of the input state.

    Purifies ``rho`` against a reference sized to its rank, applies the
    channel to the system factor only, and returns the output entropy.
    Agrees with :func:`entropy_exchange` for any purification; this route
    uses the eigendecomposition of ``rho``.
    """
    rho = validate_density(rho, tol)
    w, v = np.linalg.eigh(rho)
    keep = w > tol.eps_rank * max(1.0, float(w[-1]))
    w, v = w[keep], v[:, keep]
    r = len(w)
    n = c.dim
    psi = np.zeros(n * r, dtype=complex)
    for a in range(r):
        ref = np.zeros(r)
        ref[a] = 1.0
        psi += np.sqrt(w[a]) * np.kron(v[:, a], ref)
    pure = np.outer(psi, np.conj(psi))
    out = np.zeros_like(pure)
    for e in c.kraus:
        big = np.kron(e, np.eye(r))
        out += big @ pure @ dag(big)
    return _entropy_of_spectrum(np.linalg.eigvalsh((out + dag(out)) / 2), tol)


def lindblad_omega(c: QuantumChannel, rho, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """System-environment state of the dilated channel.

    The joint state of the system and an initially pure environment; its
    entropy equals S(rho), the environment trace gives the channel output
    and the system trace gives the exchange state.  Both partial-trace
    identities are verified before returning.

    Dilations are unique up to a unitary on the environment.  The raw
    block form with environment block (i, j) = E_i rho E_j^dag has system
    trace equal to the entrywise conjugate of the exchange state (the
    pairing that would give it entrywise is its partial transpose and is
    not positive semidefinite), so the environment factor is rotated by
    Q Q^T, with Q the eigenbasis of sigma, which carries conj(sigma) onto
    sigma without touching the other marginal or the spectrum.
    """
    rho = validate_density(rho, tol)
    if rho.shape != (c.dim, c.dim):
        raise ValueError(f"state shape {rho.shape} does not match channel dim {c.dim}")
    n, m = c.dim, c.num_kraus
    omega = np.zeros((n * m, n * m), dtype=complex)
    for i, ei in enumerate(c.kraus):
        for j, ej in enumerate(c.kraus):
            unit = np.zeros((m, m), dtype=complex)
            unit[i, j] = 1.0
            omega += np.kron(ei @ rho @ dag(ej), unit)
    sigma = exchange_matrix(c, rho)
    _, q = np.linalg.eigh(sigma)
    big = np.kron(np.eye(n), q @ q.T)
    omega = big @ omega @ dag(big)
    check = 1e-10 * max(1.0, float(np.abs(omega).max()))
    if np.max(np.abs(partial_trace_system(omega, n, m) - sigma)) > check:
        raise ArithmeticError("composite state partial trace does not match exchange state")
    if np.max(np.abs(partial_trace_environment(omega, n, m) - apply_channel(c, rho))) > check:
        raise ArithmeticError("composite state partial trace does not match channel output")
    return omega


def partial_trace_system(omega: np.ndarray, n: int, m: int) -> np.ndarray:
    """Trace out the n-dimensional system factor of an (n*m)-dim composite."""
    return np.einsum("aiaj->ij", omega.reshape(n, m, n, m))


def partial_trace_environment(omega: np.ndarray, n: int, m: int) -> np.ndarray:
    """Trace out the m-dimensional environment index of an (n*m)-dim composite."""
    return np.einsum("aibi->ab", omega.reshape(n, m, n, m))


def check_lindblad_bounds(
    c: QuantumChannel, rho, tol: ToleranceConfig = DEFAULT_TOL, slack: float = 1e-8
) -> LindbladReport:
    """|S(rho') - S(sigma)| <= S(rho) <= S(sigma) + S(rho') within ``slack``."""
    rho = validate_density(rho, tol)
    s_rho = von_neumann_entropy(rho, tol)
    s_out = von_neumann_entropy(apply_channel(c, rho), tol)
    _, s_sigma = entropy_exchange(c, rho, tol)
    holds = abs(s_out - s_sigma) <= s_rho + slack and s_rho <= s_sigma + s_out + slack
    return LindbladReport(s_rho, s_out, s_sigma, holds)
