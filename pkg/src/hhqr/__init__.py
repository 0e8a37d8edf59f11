"""Householder QR with selectable sign policy and the wrong-sign delta sweep."""
from .core import Precision, RngState, euclidean_norm, rng_uniform, sgn
from .experiment import (
    ExperimentConfig,
    LeftBranchInapplicable,
    ProbeSummary,
    SweepRecord,
    build_sweep_matrix,
    probe_corpus,
    probe_matrices,
    run_sweep,
    verify_left_branch,
)
from .householder import (
    DimensionError,
    QrFactorization,
    Reflector,
    SignPolicy,
    apply_reflector_left,
    form_q,
    householder_vector,
    qr_factorize,
)
from .metrics import ErrorReport, evaluate, spectral_norm

__all__ = [
    "DimensionError", "ErrorReport", "ExperimentConfig", "LeftBranchInapplicable",
    "Precision", "ProbeSummary", "QrFactorization", "Reflector", "RngState", "SignPolicy",
    "SweepRecord", "apply_reflector_left", "build_sweep_matrix", "euclidean_norm",
    "evaluate", "form_q", "householder_vector", "probe_corpus", "probe_matrices",
    "qr_factorize", "rng_uniform", "run_sweep", "sgn", "spectral_norm", "verify_left_branch",
]
