"""Backward error and orthogonality measures for a computed QR pair."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import euclidean_norm
from .householder import DimensionError


class DegradedEstimate(RuntimeWarning):
    pass


@dataclass(frozen=True)
class ErrorReport:
    backward_error_2norm: float
    backward_error_frobenius: float
    orthogonality_loss: float
    first_column_error: float


def frobenius(b: np.ndarray) -> float:
    b = np.asarray(b, dtype=np.float64)
    return float(euclidean_norm(b.ravel())) if b.size else 0.0


def _pow2_scale(b: np.ndarray) -> float:
    """Power of two just above max|b|; dividing by it is exact and keeps b.T @ b in range."""
    biggest = float(np.max(np.abs(b)))
    return math.ldexp(1.0, math.frexp(biggest)[1]) if biggest else 0.0


def power_iteration(b: np.ndarray, x0: np.ndarray | None = None,
                    tol: float = 1e-12, max_iter: int = 10_000):
    """Largest singular value of ``b`` by power iteration on ``b.T @ b``.

    Starts from the normalized all-ones vector unless ``x0`` is given.
    Returns ``(sigma, converged)``.  Runs in binary64 whatever the input dtype;
    upcasting a binary32 matrix is exact.
    """
    b = np.asarray(b, dtype=np.float64)
    scale = _pow2_scale(b)
    if scale == 0:
        return 0.0, True
    b = b / scale
    n = b.shape[1]
    if x0 is None:
        x = np.full(n, 1.0 / np.sqrt(n))
    else:
        x = np.asarray(x0, dtype=np.float64) / euclidean_norm(x0)
    rq = 0.0
    converged = False
    for _ in range(max_iter):
        y = b.T @ (b @ x)
        new_rq = float(x @ y)
        ny = float(np.sqrt(y @ y))
        if ny == 0:
            # x lies in the null space of b; nothing more to learn from it.
            rq, converged = new_rq, True
            break
        x = y / ny
        if abs(new_rq - rq) <= tol * abs(new_rq):
            rq, converged = new_rq, True
            break
        rq = new_rq
    return scale * float(np.sqrt(max(rq, 0.0))), converged


def spectral_norm(b: np.ndarray) -> float:
    """2-norm of a matrix, bracketed by its largest column norm and its Frobenius norm."""
    b = np.asarray(b, dtype=np.float64)
    if b.ndim != 2 or b.size == 0:
        raise DimensionError(f"expected a non-empty matrix, got shape {b.shape}")
    scale = _pow2_scale(b)
    if scale == 0:
        return 0.0
    b = b / scale
    col_norms = np.sqrt(np.sum(b * b, axis=0))
    lo = float(np.max(col_norms))
    hi = frobenius(b)
    est, converged = power_iteration(b)
    if est < lo * (1 - 1e-12):
        # All-ones start was (nearly) orthogonal to the top singular vector.
        j = int(np.argmax(col_norms))
        start = np.zeros(b.shape[1])
        start[j] = 1.0
        est2, conv2 = power_iteration(b, start)
        if est2 > est:
            est, converged = est2, conv2
    if not converged:
        warnings.warn("power iteration hit max_iter; estimate is degraded", DegradedEstimate)
    slack = 1e-12 * hi
    assert est <= hi + slack, (est, hi)
    return scale * min(max(est, lo), hi)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Plain ``a @ b`` in the working dtype with a fixed summation order."""
    return np.sum(a[:, :, None] * b[None, :, :], axis=1)


def evaluate(a: np.ndarray, q: np.ndarray, r: np.ndarray) -> ErrorReport:
    m, n = a.shape
    if q.shape != (m, m) or r.shape != (m, n):
        raise DimensionError(f"shapes do not conform: a {a.shape}, q {q.shape}, r {r.shape}")
    e = a - matmul(q, r)
    g = matmul(q.T.copy(), q) - np.eye(m, dtype=q.dtype)
    return ErrorReport(
        backward_error_2norm=spectral_norm(e),
        backward_error_frobenius=frobenius(e),
        orthogonality_loss=spectral_norm(g),
        first_column_error=float(euclidean_norm(e[:, 0])),
    )
