"""Compressed sensing over finite fields.

Exact GF(q) arithmetic, random signal/matrix ensembles, exhaustive
minimum-weight (L0) recovery, closed-form and combinatorial bounds on
the recovery error probability, measurement thresholds, and
phase-transition curve generation.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    EnumerationCapExceeded,
    InvalidGamma,
    UnsupportedOrder,
)
from .field import FiniteField, check_axioms, make_field, supported_orders
from .model import (
    ModelParams,
    SensingMatrix,
    Signal,
    SignalSetSize,
    candidate_matrix,
    dense_gamma,
    enumerate_signals,
    matrix_from_json,
    matrix_to_json,
    matvec,
    sample_matrix,
    sample_signal,
    signal_from_json,
    signal_set_size,
    signal_to_json,
    sparse_gamma,
)
from .decoder import DecodeResult, DecodeStatus, ErrorEvents, decode_l0, error_events
from .bounds import (
    BoundResult,
    LogProb,
    PairVariant,
    WeightEnumeration,
    binary_entropy,
    closed_dense_bound,
    convolution_oracle,
    evaluate_bounds,
    exponent_bound,
    fano_lower_bound,
    necessary_m,
    nh_count,
    nh_log_profile,
    nh_oracle,
    row_zero_prob_dense,
    row_zero_prob_sparse,
    sufficient_m,
    union_bound,
)
from .curves import (
    CurvePoint,
    GammaMode,
    MinMeasurements,
    curve,
    default_k_grid,
    min_measurements,
)
from .montecarlo import NullityReport, TrialReport, equal_weight_nullity_test, run_trials

__all__ = [
    "__version__",
    "UnsupportedOrder",
    "DivisionByZero",
    "InvalidGamma",
    "DimensionMismatch",
    "EnumerationCapExceeded",
    "FiniteField",
    "make_field",
    "check_axioms",
    "supported_orders",
    "ModelParams",
    "Signal",
    "SensingMatrix",
    "SignalSetSize",
    "signal_set_size",
    "sample_signal",
    "sample_matrix",
    "dense_gamma",
    "sparse_gamma",
    "matvec",
    "enumerate_signals",
    "candidate_matrix",
    "signal_to_json",
    "signal_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "DecodeResult",
    "DecodeStatus",
    "ErrorEvents",
    "decode_l0",
    "error_events",
    "LogProb",
    "PairVariant",
    "WeightEnumeration",
    "BoundResult",
    "row_zero_prob_dense",
    "row_zero_prob_sparse",
    "convolution_oracle",
    "nh_count",
    "nh_oracle",
    "nh_log_profile",
    "union_bound",
    "closed_dense_bound",
    "exponent_bound",
    "binary_entropy",
    "sufficient_m",
    "necessary_m",
    "fano_lower_bound",
    "evaluate_bounds",
    "GammaMode",
    "CurvePoint",
    "MinMeasurements",
    "min_measurements",
    "curve",
    "default_k_grid",
    "TrialReport",
    "NullityReport",
    "run_trials",
    "equal_weight_nullity_test",
]
