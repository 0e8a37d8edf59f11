"""Householder QR with a selectable sign for the reflector vector."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import euclidean_norm, sgn


class DimensionError(ValueError):
    pass


class SignPolicy(enum.Enum):
    """Choice of sigma in ``v = x - sigma*||x||*e1``.

    STABLE uses ``sigma = -sgn(x1)`` so the first entry is a sum of like-signed
    terms; WRONG uses ``sigma = +sgn(x1)`` and cancels when x is close to e1.
    """

    STABLE = "stable"
    WRONG = "wrong"

    def sigma(self, x1):
        s = sgn(x1)
        return -s if self is SignPolicy.STABLE else s


@dataclass(frozen=True)
class Reflector:
    v: np.ndarray
    vtv: object  # scalar in the working dtype; 0 marks the identity
    offset: int

    @classmethod
    def from_vector(cls, v: np.ndarray, offset: int) -> "Reflector":
        v = np.array(v, copy=True)
        v.flags.writeable = False
        return cls(v=v, vtv=np.sum(v * v), offset=offset)

    @property
    def is_identity(self) -> bool:
        return self.vtv == 0

    def dense(self, m: int) -> np.ndarray:
        """The full m-by-m matrix ``I - (2/v'v) v v'`` embedded at ``offset``."""
        p = np.eye(m, dtype=self.v.dtype)
        if not self.is_identity:
            k = self.offset
            p[k:, k:] -= (2 / self.vtv) * np.outer(self.v, self.v)
        return p


@dataclass(frozen=True)
class QrFactorization:
    reflectors: tuple
    r: np.ndarray
    policy: SignPolicy

    @property
    def m(self) -> int:
        return self.r.shape[0]

    @property
    def n(self) -> int:
        return self.r.shape[1]


def householder_vector(x: np.ndarray, policy: SignPolicy):
    """Return ``(v, beta)`` with ``v = x - sigma*||x||*e1`` and ``beta = sigma*||x||``.

    The subtraction in the first entry is done as written.  Under
    ``SignPolicy.WRONG`` it is meant to cancel.
    """
    x = np.asarray(x)
    if x.ndim != 1 or x.size < 1:
        raise DimensionError("householder_vector needs a non-empty 1-D vector")
    s = euclidean_norm(x)
    beta = policy.sigma(x[0]) * s
    v = x.copy()
    v[0] = x[0] - beta
    return v, beta


def apply_reflector_left(refl: Reflector, b: np.ndarray, first_col: int = 0) -> None:
    """Overwrite ``b[offset:, first_col:]`` with ``P @ b[offset:, first_col:]`` in place."""
    k = refl.offset
    if refl.v.shape[0] != b.shape[0] - k:
        raise DimensionError(
            f"reflector of length {refl.v.shape[0]} does not fit {b.shape[0]} rows at offset {k}"
        )
    if not 0 <= first_col < b.shape[1]:
        raise DimensionError(f"first_col {first_col} out of range for {b.shape[1]} columns")
    if refl.is_identity:
        return
    v = refl.v
    block = b[k:, first_col:]
    # Row-major sum over axis 0 accumulates the rows in order, one column per lane.
    w = np.sum(v[:, None] * block, axis=0)
    block -= (2 / refl.vtv) * (v[:, None] * w[None, :])


def qr_factorize(a: np.ndarray, policy: SignPolicy = SignPolicy.STABLE) -> QrFactorization:
    a = np.asarray(a)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    m, n = a.shape
    if n < 1 or m < n:
        raise DimensionError(f"QR needs rows >= cols >= 1, got {m}x{n}")
    if a.dtype not in (np.float64, np.float32):
        a = a.astype(np.float64)
    work = a.copy()
    reflectors = []
    for k in range(n):
        v, beta = householder_vector(work[k:, k], policy)
        refl = Reflector.from_vector(v, k)
        apply_reflector_left(refl, work, k)
        work[k, k] = beta
        work[k + 1:, k] = 0
        reflectors.append(refl)
    work.flags.writeable = False
    return QrFactorization(reflectors=tuple(reflectors), r=work, policy=policy)


def form_q(f: QrFactorization) -> np.ndarray:
    """Explicit ``Q = P1 P2 ... Pn``, built by applying Pn first onto the identity."""
    q = np.eye(f.m, dtype=f.r.dtype)
    for refl in reversed(f.reflectors):
        apply_reflector_left(refl, q, 0)
    return q
