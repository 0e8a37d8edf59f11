"""Dense storage helpers, the sign function, a scaled 2-norm and a seeded RNG.

Matrices and vectors are plain ``numpy.ndarray`` objects of a single float
dtype (``float64`` by default, ``float32`` optionally).  Every routine in this
package keeps all arithmetic in that dtype; nothing is accumulated in a wider
format.
"""
from __future__ import annotations

import enum

import numpy as np


class Precision(enum.Enum):
    BINARY64 = 64
    BINARY32 = 32

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.float64 if self is Precision.BINARY64 else np.float32)

    @property
    def eps(self) -> float:
        """Machine epsilon: 2**-52 for binary64, 2**-23 for binary32."""
        return float(np.finfo(self.dtype).eps)

    @classmethod
    def parse(cls, value: "Precision | int | str") -> "Precision":
        if isinstance(value, Precision):
            return value
        return cls(int(value))


def zeros(m: int, n: int, precision: Precision = Precision.BINARY64) -> np.ndarray:
    return np.zeros((m, n), dtype=precision.dtype)


def identity(m: int, precision: Precision = Precision.BINARY64) -> np.ndarray:
    return np.eye(m, dtype=precision.dtype)


def as_matrix(a, precision: Precision = Precision.BINARY64) -> np.ndarray:
    """Copy ``a`` into a fresh 2-D array of the requested precision."""
    out = np.array(a, dtype=precision.dtype, copy=True)
    if out.ndim != 2 or out.shape[0] < 1 or out.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {out.shape}")
    return out


def sgn(x):
    # -0.0 >= 0 is True, so negative zero maps to +1 as well.
    one = np.ones((), dtype=np.result_type(x))[()]
    return one if x >= 0 else -one


def euclidean_norm(x: np.ndarray):
    """2-norm of a vector, scaled by max|x_i| so large entries cannot overflow.

    When the largest magnitude is exactly 1 the scaling is a no-op and the
    result is bitwise the same as ``sqrt(sum(x**2))``.
    """
    x = np.asarray(x)
    s = np.max(np.abs(x))
    if s == 0:
        return s
    y = x / s
    return s * np.sqrt(np.sum(y * y))


class RngState:
    """Seeded uniform generator on [0, 1).

    Backed by numpy's PCG64 bit generator, whose raw 64-bit stream is fixed
    for a given seed on every platform.  Doubles take the top 53 bits of each
    draw and singles the top 24, so both land exactly on a grid inside [0, 1).
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self._bits = np.random.PCG64(seed)

    def next_u64(self) -> int:
        return int(self._bits.random_raw())

    def uniform(self, precision: Precision = Precision.BINARY64):
        return self.uniform_array(1, precision)[0]

    def uniform_array(self, count: int, precision: Precision = Precision.BINARY64) -> np.ndarray:
        """``count`` consecutive draws; same values as ``count`` calls to ``uniform``."""
        raw = np.asarray(self._bits.random_raw(count), dtype=np.uint64)
        if precision is Precision.BINARY32:
            return ((raw >> np.uint64(40)).astype(np.float64) * 2.0**-24).astype(np.float32)
        return (raw >> np.uint64(11)).astype(np.float64) * 2.0**-53


def rng_uniform(state: RngState, precision: Precision = Precision.BINARY64):
    return state.uniform(precision)
