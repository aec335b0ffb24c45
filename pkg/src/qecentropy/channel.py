"""Quantum channels in Kraus form and their Choi-Gram structure."""

from __future__ import annotations

import dataclasses

import numpy as np

from . import serialization
from .errors import NotTracePreserving
from .numerics import DEFAULT_TOL, ToleranceConfig, as_matrix, dag, frobenius, hermitian_eigen, is_unitary, numerical_rank

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclasses.dataclass(frozen=True)
class QuantumChannel:
    """A completely positive map given by square Kraus operators of equal size."""

    dim: int
    kraus: tuple[np.ndarray, ...]

    @property
    def num_kraus(self) -> int:
        return len(self.kraus)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "kraus": [serialization.matrix_to_json(e) for e in self.kraus],
        }


@dataclasses.dataclass(frozen=True)
class ChoiGram:
    """Gram matrix (Tr E_i^dag E_j) of a Kraus family, its eigenvalue weights
    and the channel's Choi rank."""

    matrix: np.ndarray
    weights: np.ndarray
    choi_rank: int


def channel(kraus_ops) -> QuantumChannel:
    """Build a channel from an iterable of square matrices of equal dimension."""
    ops = tuple(as_matrix(e) for e in kraus_ops)
    if not ops:
        raise ValueError("channel requires at least one Kraus operator")
    n = ops[0].shape[0]
    for e in ops:
        if e.shape != (n, n):
            raise ValueError(f"all Kraus operators must be {n}x{n}, got {e.shape}")
    return QuantumChannel(n, ops)


def channel_from_json(obj) -> QuantumChannel:
    try:
        dim, kraus = int(obj["dim"]), obj["kraus"]
    except (KeyError, TypeError) as exc:
        raise ValueError("channel JSON must have 'dim' and 'kraus'") from exc
    c = channel(serialization.matrix_from_json(m) for m in kraus)
    if c.dim != dim:
        raise ValueError(f"declared dim {dim} does not match Kraus operators ({c.dim})")
    return c


def validate_channel(c: QuantumChannel, tol: ToleranceConfig = DEFAULT_TOL) -> None:
    """Check trace preservation; raises NotTracePreserving on failure."""
    total = sum(dag(e) @ e for e in c.kraus)
    residual = frobenius(total - np.eye(c.dim))
    if residual > tol.eps_kl * c.dim:
        raise NotTracePreserving(residual)


def validate_density(rho, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Check Hermiticity, positivity and unit trace of a density matrix."""
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    herm = float(np.max(np.abs(rho - dag(rho))))
    if herm > 1e-10 * max(1.0, frobenius(rho)):
        raise ValueError(f"density matrix is not Hermitian (asymmetry {herm:.3e})")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > 1e-12:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    w = np.linalg.eigvalsh((rho + dag(rho)) / 2)
    if w[0] < -tol.eps_rank * max(1.0, float(w[-1])):
        raise ValueError(f"density matrix has negative eigenvalue {w[0]:.3e}")
    return rho


def choi_gram(c: QuantumChannel, tol: ToleranceConfig = DEFAULT_TOL) -> ChoiGram:
    """Gram matrix of the Kraus family; its rank is the Choi rank of the map."""
    m = c.num_kraus
    g = np.empty((m, m), dtype=complex)
    for i, ei in enumerate(c.kraus):
        for j, ej in enumerate(c.kraus):
            g[i, j] = np.trace(dag(ei) @ ej)
    g = (g + dag(g)) / 2
    weights = np.clip(np.linalg.eigvalsh(g), 0.0, None)
    return ChoiGram(g, weights, numerical_rank(g, tol))


def canonical_kraus(c: QuantumChannel, tol: ToleranceConfig = DEFAULT_TOL) -> QuantumChannel:
    """Remix the Kraus family into mutually orthogonal operators.

    The output implements the same map with exactly ``choi_rank`` nonzero
    operators; operators with Gram weight at the rank cutoff are dropped.
    """
    gram = choi_gram(c, tol)
    w, vecs = np.linalg.eigh(gram.matrix)
    order = np.argsort(w)[::-1]
    w, vecs = w[order], vecs[:, order]
    cutoff = tol.eps_rank * max(1.0, float(w[0]))
    ops = []
    for m in range(len(w)):
        if w[m] <= cutoff:
            break
        ops.append(sum(vecs[i, m] * c.kraus[i] for i in range(c.num_kraus)))
    return QuantumChannel(c.dim, tuple(ops))


def apply_channel(c: QuantumChannel, rho: np.ndarray) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape != (c.dim, c.dim):
        raise ValueError(f"state shape {rho.shape} does not match channel dim {c.dim}")
    # No Hermitization: the map must stay linear on arbitrary (e.g. matrix
    # unit) inputs for process-identity checks.
    return sum(e @ rho @ dag(e) for e in c.kraus)


def remix_kraus(c: QuantumChannel, v, tol: ToleranceConfig = DEFAULT_TOL) -> QuantumChannel:
    """New Kraus family E'_i = sum_j v_ij E_j; implements the same map."""
    v = as_matrix(v)
    m = c.num_kraus
    if v.shape != (m, m):
        raise ValueError(f"remix matrix must be {m}x{m}, got {v.shape}")
    if not is_unitary(v, tol):
        raise ValueError("remix matrix must be unitary")
    ops = tuple(sum(v[i, j] * c.kraus[j] for j in range(m)) for i in range(m))
    return QuantumChannel(c.dim, ops)


def unitary_channel(u, tol: ToleranceConfig = DEFAULT_TOL) -> QuantumChannel:
    u = as_matrix(u)
    if not is_unitary(u, tol):
        raise ValueError("unitary_channel requires a unitary matrix")
    return channel([u])


def binary_unitary_kraus(p: float, u, tol: ToleranceConfig = DEFAULT_TOL) -> QuantumChannel:
    """Kraus form {sqrt(1-p) I, sqrt(p) U} of the two-term mixing channel."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing probability must be in [0, 1], got {p}")
    u = as_matrix(u)
    if not is_unitary(u, tol):
        raise ValueError("binary unitary channel requires a unitary matrix")
    n = u.shape[0]
    return channel([np.sqrt(1 - p) * np.eye(n), np.sqrt(p) * u])


def pauli_word(word: str) -> np.ndarray:
    """Tensor product of single-qubit Pauli operators, e.g. ``'XIZ'``."""
    if not word or any(ch not in _PAULI for ch in word):
        raise ValueError(f"invalid Pauli word {word!r}")
    op = _PAULI[word[0]]
    for ch in word[1:]:
        op = np.kron(op, _PAULI[ch])
    return op


def pauli_channel(terms) -> QuantumChannel:
    """Channel from (weight, pauli-word) pairs; weights must sum to one."""
    terms = list(terms)
    if not terms:
        raise ValueError("pauli_channel requires at least one term")
    weights = [float(w) for w, _ in terms]
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    if abs(sum(weights) - 1.0) > 1e-12:
        raise ValueError(f"weights must sum to 1, got {sum(weights)}")
    nq = len(terms[0][1])
    if any(len(word) != nq for _, word in terms):
        raise ValueError("all Pauli words must have equal length")
    return channel([np.sqrt(w) * pauli_word(word) for w, word in terms])
