"""The delta sweep over A = [[1, *], [delta, *], [0, *], ...] and related probes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Precision, RngState, euclidean_norm
from .householder import SignPolicy, form_q, qr_factorize
from .metrics import evaluate, matmul, spectral_norm


class LeftBranchInapplicable(ValueError):
    """Raised when fl(1 + delta**2) != 1, so the exact-cancellation argument does not apply."""


@dataclass(frozen=True)
class ExperimentConfig:
    m: int = 3
    n: int = 2
    p_min: int = 1
    p_max: int = 16
    seed: int = 1
    precision: Precision = Precision.BINARY64

    def __post_init__(self):
        object.__setattr__(self, "precision", Precision.parse(self.precision))
        if not self.m >= self.n >= 2:
            raise ValueError(f"need m >= n >= 2, got m={self.m}, n={self.n}")
        if self.p_min > self.p_max:
            raise ValueError(f"empty exponent range {self.p_min}..{self.p_max}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SweepRecord:
    p: int
    delta: float
    err_stable: float
    err_wrong: float
    orth_stable: float
    orth_wrong: float
    first_col_err_wrong: float


@dataclass(frozen=True)
class ProbeSummary:
    trials: int
    max_err_stable: float
    max_err_wrong: float
    median_err_wrong: float
    q90_err_wrong: float
    q99_err_wrong: float
    conjecture_margin: float


def delta_for(p: int, precision: Precision = Precision.BINARY64):
    """10**-p rounded once to the working precision."""
    return precision.dtype.type(float(f"1e-{p}"))


def build_sweep_matrix(delta, m: int, n: int, rng: RngState,
                       precision: Precision = Precision.BINARY64) -> np.ndarray:
    if not m >= n >= 2:
        raise ValueError(f"need m >= n >= 2, got m={m}, n={n}")
    a = np.zeros((m, n), dtype=precision.dtype)
    a[0, 0] = 1
    a[1, 0] = delta
    # column-major fill of columns 2..n
    a[:, 1:] = rng.uniform_array(m * (n - 1), precision).reshape(n - 1, m).T
    return a


def _factor_and_evaluate(a, policy):
    f = qr_factorize(a, policy)
    q = form_q(f)
    return f, q, evaluate(a, q, f.r)


def run_sweep(cfg: ExperimentConfig) -> list[SweepRecord]:
    records = []
    for p in range(cfg.p_min, cfg.p_max + 1):
        delta = delta_for(p, cfg.precision)
        # Fresh generator per point: every delta and both policies see the same random columns.
        a = build_sweep_matrix(delta, cfg.m, cfg.n, RngState(cfg.seed), cfg.precision)
        _, _, stable = _factor_and_evaluate(a, SignPolicy.STABLE)
        _, _, wrong = _factor_and_evaluate(a, SignPolicy.WRONG)
        records.append(SweepRecord(
            p=p,
            delta=float(delta),
            err_stable=stable.backward_error_2norm,
            err_wrong=wrong.backward_error_2norm,
            orth_stable=stable.orthogonality_loss,
            orth_wrong=wrong.orthogonality_loss,
            first_col_err_wrong=wrong.first_column_error,
        ))
    return records


def verify_left_branch(delta, cfg: ExperimentConfig = ExperimentConfig()) -> bool:
    """Check bit-for-bit that the wrong sign reduces column one to e1 when ||x|| rounds to 1.

    Three equalities must hold exactly: the first Householder vector is
    ``[0, delta, 0, ...]``, column one of ``Q @ R`` is e1, and the norm of
    column one of ``A - Q @ R`` is delta.
    """
    t = cfg.precision.dtype.type
    delta = t(delta)
    if t(1) + delta * delta != t(1):
        raise LeftBranchInapplicable(
            f"1 + delta**2 does not round to 1 for delta={delta} in {cfg.precision.name}"
        )
    a = build_sweep_matrix(delta, cfg.m, cfg.n, RngState(cfg.seed), cfg.precision)
    f, q, report = _factor_and_evaluate(a, SignPolicy.WRONG)

    expected_v = np.zeros(cfg.m, dtype=cfg.precision.dtype)
    expected_v[1] = delta
    e1 = np.zeros(cfg.m, dtype=cfg.precision.dtype)
    e1[0] = 1
    qr_col = matmul(q, f.r)[:, 0]

    return bool(
        np.array_equal(f.reflectors[0].v, expected_v)
        and np.array_equal(qr_col, e1)
        and report.first_column_error == float(delta)
    )


def peak(records: list[SweepRecord]) -> SweepRecord:
    return max(records, key=lambda r: r.err_wrong)


def loglog_slope(records: list[SweepRecord], p_lo: int, p_hi: int) -> float:
    """Least-squares slope of log10(err_wrong) against log10(delta) for p in [p_lo, p_hi]."""
    pts = [r for r in records if p_lo <= r.p <= p_hi]
    x = np.log10([r.delta for r in pts])
    y = np.log10([r.err_wrong for r in pts])
    return float(np.polyfit(x, y, 1)[0])


def _corpus(cfg: ExperimentConfig, trials: int):
    rng = RngState(cfg.seed)
    t = cfg.precision.dtype.type
    p_top = 16 if cfg.precision is Precision.BINARY64 else 7
    for i in range(trials):
        m = cfg.n + rng.next_u64() % (cfg.m - cfg.n + 1)
        a = rng.uniform_array(m * cfg.n, cfg.precision).reshape(cfg.n, m).T.copy()
        if i % 2:
            # Every other matrix gets the cancelling first column [1, delta, 0, ...].
            a[:, 0] = 0
            a[0, 0] = 1
            a[1, 0] = delta_for(1 + rng.next_u64() % p_top, cfg.precision)
        a *= t(1) / t(spectral_norm(a))
        yield a


def probe_matrices(matrices) -> ProbeSummary:
    err_stable, err_wrong = [], []
    eps = None
    for a in matrices:
        eps = Precision(np.finfo(a.dtype).bits).eps
        err_stable.append(_factor_and_evaluate(a, SignPolicy.STABLE)[2].backward_error_2norm)
        err_wrong.append(_factor_and_evaluate(a, SignPolicy.WRONG)[2].backward_error_2norm)
    if not err_wrong:
        raise ValueError("probe needs at least one matrix")
    q50, q90, q99 = np.quantile(err_wrong, [0.5, 0.9, 0.99])
    max_wrong = max(err_wrong)
    return ProbeSummary(
        trials=len(err_wrong),
        max_err_stable=max(err_stable),
        max_err_wrong=max_wrong,
        median_err_wrong=float(q50),
        q90_err_wrong=float(q90),
        q99_err_wrong=float(q99),
        conjecture_margin=max_wrong / float(np.sqrt(eps)),
    )


def probe_corpus(cfg: ExperimentConfig, trials: int) -> ProbeSummary:
    """Random unit-norm matrices, half with a cancelling first column, under both policies.

    The margin ``max_err_wrong / sqrt(eps)`` is reported, not checked.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return probe_matrices(_corpus(cfg, trials))
