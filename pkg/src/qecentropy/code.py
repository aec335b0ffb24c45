"""Code subspaces: compression-condition verification, code entropy,
classification, and recovery construction."""

from __future__ import annotations

import dataclasses
import enum

import numpy as np

from . import serialization
from .channel import QuantumChannel, apply_channel, choi_gram, validate_channel
from .entropy import _entropy_of_spectrum, exchange_matrix
from .errors import NotCorrectable, RecoveryVerificationError
from .numerics import DEFAULT_TOL, ToleranceConfig, as_matrix, dag, frobenius, numerical_rank
from .sampling import random_density


@dataclasses.dataclass(frozen=True)
class CodeSubspace:
    """A k-dimensional subspace given by an orthonormal basis (columns)."""

    ambient_dim: int
    basis: np.ndarray

    @property
    def k(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ dag(self.basis)

    def to_json(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "basis": [serialization.vector_to_json(self.basis[:, i]) for i in range(self.k)],
        }


@dataclasses.dataclass(frozen=True)
class ErrorCorrectionMatrix:
    """The positive unit-trace matrix of compression coefficients, with spectrum."""

    matrix: np.ndarray
    spectrum: np.ndarray


class CodeClass(str, enum.Enum):
    UNITARILY_CORRECTABLE = "UnitarilyCorrectable"
    DECOHERENCE_FREE = "DecoherenceFree"
    NON_DEGENERATE = "NonDegenerate"
    PARTIALLY_DEGENERATE = "PartiallyDegenerate"


@dataclasses.dataclass(frozen=True)
class CodeReport:
    lam: ErrorCorrectionMatrix
    entropy_bits: float
    lambda_rank: int
    choi_rank: int
    classification: CodeClass
    unitarily_correctable: bool
    decoherence_free: bool
    max_kl_residual: float

    def to_json(self) -> dict:
        return {
            "lambda": serialization.matrix_to_json(self.lam.matrix),
            "lambda_spectrum": [float(x) for x in self.lam.spectrum],
            "entropy_bits": self.entropy_bits,
            "lambda_rank": self.lambda_rank,
            "choi_rank": self.choi_rank,
            "classification": self.classification.value,
            "unitarily_correctable": self.unitarily_correctable,
            "decoherence_free": self.decoherence_free,
            "max_kl_residual": self.max_kl_residual,
        }


@dataclasses.dataclass(frozen=True)
class RecoveryOperation:
    """A trace-preserving map undoing the channel on a code subspace."""

    channel: QuantumChannel
    residual: float


def code_subspace(vectors, tol: ToleranceConfig = DEFAULT_TOL) -> CodeSubspace:
    """Build a code from basis vectors; they must already be orthonormal."""
    basis = np.column_stack([np.asarray(v, dtype=complex).reshape(-1) for v in vectors])
    n, k = basis.shape
    if k > n:
        raise ValueError(f"code dimension {k} exceeds ambient dimension {n}")
    gram = dag(basis) @ basis
    if frobenius(gram - np.eye(k)) > tol.eps_eig * max(1, n):
        raise ValueError("code basis is not orthonormal")
    return CodeSubspace(n, basis)


def span_code(vectors, tol: ToleranceConfig = DEFAULT_TOL) -> CodeSubspace:
    """Build a code from a spanning set, orthonormalizing it first."""
    raw = np.column_stack([np.asarray(v, dtype=complex).reshape(-1) for v in vectors])
    q, r = np.linalg.qr(raw)
    if np.min(np.abs(np.diag(r))) <= tol.eps_rank * max(1.0, float(np.abs(r).max())):
        raise ValueError("spanning vectors are linearly dependent")
    return code_subspace(q.T, tol)


def code_from_json(obj, tol: ToleranceConfig = DEFAULT_TOL) -> CodeSubspace:
    try:
        dim, basis = int(obj["dim"]), obj["basis"]
    except (KeyError, TypeError) as exc:
        raise ValueError("code JSON must have 'dim' and 'basis'") from exc
    vectors = [serialization.vector_from_json(v) for v in basis]
    if any(len(v) != dim for v in vectors):
        raise ValueError("code basis vectors do not match the declared dimension")
    return code_subspace(vectors, tol)


def kl_check(
    c: QuantumChannel, code: CodeSubspace, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[ErrorCorrectionMatrix, float]:
    """Verify the compression conditions P E_i^dag E_j P = lambda_ij P.

    Coefficients come from the least-squares extraction
    lambda_ij = Tr(P E_i^dag E_j P)/k, and the acceptance threshold scales
    with the Kraus operator norms so verdicts are invariant under global
    rescaling.  Raises NotCorrectable when the residual exceeds it.
    """
    validate_channel(c, tol)
    if code.ambient_dim != c.dim:
        raise ValueError(
            f"code ambient dimension {code.ambient_dim} does not match channel dim {c.dim}"
        )
    b = code.basis
    k = code.k
    m = c.num_kraus
    lam = np.empty((m, m), dtype=complex)
    residual = 0.0
    compressed = [e @ b for e in c.kraus]
    eye_k = np.eye(k)
    for i in range(m):
        for j in range(m):
            block = dag(compressed[i]) @ compressed[j]
            lam[i, j] = np.trace(block) / k
            residual = max(residual, frobenius(block - lam[i, j] * eye_k))
    scale = max(frobenius(e) for e in c.kraus)
    threshold = tol.eps_kl * max(1.0, scale * scale)
    if residual > threshold:
        raise NotCorrectable(residual, threshold)
    lam = (lam + dag(lam)) / 2
    spectrum = np.clip(np.linalg.eigvalsh(lam), 0.0, None)
    return ErrorCorrectionMatrix(lam, spectrum), residual


def code_entropy(c: QuantumChannel, code: CodeSubspace, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Entropy (bits) of the error correction matrix; a property of the code."""
    lam, _ = kl_check(c, code, tol)
    return _entropy_of_spectrum(lam.spectrum, tol)


def _dfs_check(c: QuantumChannel, code: CodeSubspace, lam: ErrorCorrectionMatrix,
               tol: ToleranceConfig) -> bool:
    # Rank-one coefficients mean all restricted operators share one isometry;
    # the code is decoherence free iff that isometry is the identity on the
    # code up to a global phase.
    w, vecs = np.linalg.eigh(lam.matrix)
    top = vecs[:, -1]
    common = sum(top[i] * (c.kraus[i] @ code.basis) for i in range(c.num_kraus))
    phase = np.trace(dag(code.basis) @ common) / code.k
    scale = tol.eps_kl * max(1.0, np.sqrt(code.k))
    return abs(abs(phase) - 1.0) <= scale and frobenius(common - phase * code.basis) <= scale


def classify_code(
    c: QuantumChannel, code: CodeSubspace, tol: ToleranceConfig = DEFAULT_TOL
) -> CodeReport:
    """Full report: coefficients, entropy, rank data and extremal classification."""
    lam, residual = kl_check(c, code, tol)
    entropy = _entropy_of_spectrum(lam.spectrum, tol)
    lam_rank = numerical_rank(lam.matrix, tol)
    d = choi_gram(c, tol).choi_rank
    if lam_rank == 1:
        dfs = _dfs_check(c, code, lam, tol)
        cls = CodeClass.DECOHERENCE_FREE if dfs else CodeClass.UNITARILY_CORRECTABLE
        return CodeReport(lam, entropy, lam_rank, d, cls, True, dfs, residual)
    flat = bool(np.max(np.abs(lam.spectrum - 1.0 / d)) <= tol.eps_kl)
    cls = CodeClass.NON_DEGENERATE if (lam_rank == d and flat) else CodeClass.PARTIALLY_DEGENERATE
    return CodeReport(lam, entropy, lam_rank, d, cls, False, False, residual)


def sigma_equals_lambda_check(
    c: QuantumChannel,
    code: CodeSubspace,
    samples: int,
    seed: int = 0,
    tol: ToleranceConfig = DEFAULT_TOL,
    atol: float = 1e-8,
) -> bool:
    """Exchange state equals the correction matrix for states on the code."""
    lam, _ = kl_check(c, code, tol)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        rho_code = random_density(code.k, rng)
        rho = code.basis @ rho_code @ dag(code.basis)
        sigma = exchange_matrix(c, rho)
        if np.max(np.abs(sigma - lam.matrix)) > atol:
            return False
    return True


def rank_bound_check(c: QuantumChannel, code: CodeSubspace, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Rank of the correction matrix never exceeds the Choi rank."""
    lam, _ = kl_check(c, code, tol)
    return numerical_rank(lam.matrix, tol) <= choi_gram(c, tol).choi_rank


def build_recovery(
    c: QuantumChannel, code: CodeSubspace, tol: ToleranceConfig = DEFAULT_TOL,
    verify_atol: float = 1e-6,
) -> RecoveryOperation:
    """Construct a trace-preserving recovery map for a correctable code.

    Diagonalising the correction matrix yields restricted operators that are
    scaled isometries with mutually orthogonal ranges; the recovery maps each
    range back onto the code, completed by the projector onto the unused
    complement.  The process identity is verified on a matrix-unit basis of
    the code before returning.
    """
    lam, _ = kl_check(c, code, tol)
    b = code.basis
    n, k = code.ambient_dim, code.k
    w, vecs = np.linalg.eigh(lam.matrix)
    order = np.argsort(w)[::-1]
    w, vecs = w[order], vecs[:, order]
    cutoff = tol.eps_rank * max(1.0, float(w[0]))
    recovery_ops = []
    range_proj = np.zeros((n, n), dtype=complex)
    for idx in range(len(w)):
        if w[idx] <= cutoff:
            break
        canonical = sum(vecs[i, idx] * c.kraus[i] for i in range(c.num_kraus))
        isometry = (canonical @ b) / np.sqrt(w[idx])
        recovery_ops.append(b @ dag(isometry))
        range_proj += isometry @ dag(isometry)
    recovery_ops.append(np.eye(n) - range_proj)
    psi = QuantumChannel(n, tuple(recovery_ops))
    validate_channel(psi, tol)

    residual = 0.0
    for a in range(k):
        for bb in range(k):
            unit = np.outer(b[:, a], np.conj(b[:, bb]))
            roundtrip = apply_channel(psi, sum(
                e @ unit @ dag(e) for e in c.kraus
            ))
            residual = max(residual, frobenius(roundtrip - unit))
    if residual > verify_atol:
        raise RecoveryVerificationError(
            f"recovery verification residual {residual:.3e} exceeds {verify_atol:.1e}"
        )
    return RecoveryOperation(psi, residual)
