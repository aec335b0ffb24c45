"""Entropy of quantum error-correcting codes.

Channels in Kraus form, Knill-Laflamme verification, code entropy and
classification, and the convex-geometric treatment of binary unitary
channels (higher-rank numerical ranges, minimum-entropy code construction).
"""

from .binary_unitary import (
    BinaryUnitaryChannel,
    ExtremalLambdas,
    GroupingCode,
    NumRangeRegion,
    RegionKind,
    biunitary_code_entropy,
    constituent_hulls,
    dfs_exists,
    entropy_vs_p,
    extremal_lambda,
    grouping_code,
    lambda_spectrum,
    numerical_range,
)
from .channel import (
    ChoiGram,
    QuantumChannel,
    apply_channel,
    binary_unitary_kraus,
    canonical_kraus,
    channel,
    channel_from_json,
    choi_gram,
    pauli_channel,
    pauli_word,
    remix_kraus,
    unitary_channel,
    validate_channel,
    validate_density,
)
from .code import (
    CodeClass,
    CodeReport,
    CodeSubspace,
    ErrorCorrectionMatrix,
    RecoveryOperation,
    build_recovery,
    classify_code,
    code_entropy,
    code_from_json,
    code_subspace,
    kl_check,
    rank_bound_check,
    sigma_equals_lambda_check,
    span_code,
)
from .entropy import (
    LindbladReport,
    check_lindblad_bounds,
    entropy_exchange,
    exchange_matrix,
    lindblad_omega,
    partial_trace_environment,
    partial_trace_system,
    purification_exchange_entropy,
    von_neumann_entropy,
)
from .errors import (
    LambdaOutsideRegionError,
    NoCodeError,
    NoFeasiblePartitionError,
    NotCorrectable,
    NotTracePreserving,
    QecError,
    RecoveryVerificationError,
    UnsupportedCodeDimensionError,
)
from .numerics import DEFAULT_TOL, EigenDecomposition, ToleranceConfig, hermitian_eigen, unitary_eigen
from .sampling import haar_unitary, random_channel, random_density

__all__ = [
    "BinaryUnitaryChannel",
    "ChoiGram",
    "CodeClass",
    "CodeReport",
    "CodeSubspace",
    "DEFAULT_TOL",
    "EigenDecomposition",
    "ErrorCorrectionMatrix",
    "ExtremalLambdas",
    "GroupingCode",
    "LambdaOutsideRegionError",
    "LindbladReport",
    "NoCodeError",
    "NoFeasiblePartitionError",
    "NotCorrectable",
    "NotTracePreserving",
    "NumRangeRegion",
    "QecError",
    "QuantumChannel",
    "RecoveryOperation",
    "RecoveryVerificationError",
    "RegionKind",
    "ToleranceConfig",
    "UnsupportedCodeDimensionError",
    "apply_channel",
    "binary_unitary_kraus",
    "biunitary_code_entropy",
    "build_recovery",
    "canonical_kraus",
    "channel",
    "channel_from_json",
    "check_lindblad_bounds",
    "choi_gram",
    "classify_code",
    "code_entropy",
    "code_from_json",
    "code_subspace",
    "constituent_hulls",
    "dfs_exists",
    "entropy_exchange",
    "entropy_vs_p",
    "exchange_matrix",
    "extremal_lambda",
    "grouping_code",
    "haar_unitary",
    "hermitian_eigen",
    "kl_check",
    "lambda_spectrum",
    "lindblad_omega",
    "numerical_range",
    "partial_trace_environment",
    "partial_trace_system",
    "pauli_channel",
    "pauli_word",
    "purification_exchange_entropy",
    "random_channel",
    "random_density",
    "rank_bound_check",
    "remix_kraus",
    "sigma_equals_lambda_check",
    "span_code",
    "unitary_channel",
    "unitary_eigen",
    "validate_channel",
    "validate_density",
    "von_neumann_entropy",
]
