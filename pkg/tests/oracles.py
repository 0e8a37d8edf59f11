"""Reference computations kept apart from the library code paths they check."""
import math
from fractions import Fraction

import numpy as np


def sigma_max_closed_form(b):
    """Largest singular value of an m-by-2 matrix from the 2x2 characteristic polynomial of B'B."""
    b = np.asarray(b, dtype=np.float64)
    assert b.shape[1] == 2
    p = float(b[:, 0] @ b[:, 0])
    r = float(b[:, 1] @ b[:, 1])
    q = float(b[:, 0] @ b[:, 1])
    half_trace = (p + r) / 2
    disc = math.hypot((p - r) / 2, q)
    return math.sqrt(half_trace + disc)


def rounds_to_one(delta, mantissa_bits):
    """Exact check that 1 + delta**2 rounds to 1 with round-to-nearest-even.

    With ``mantissa_bits`` explicit bits the gap above 1 is 2**-mantissa_bits, so the
    sum rounds down iff delta**2 <= half that gap (ties go to the even value 1).
    """
    d = Fraction(float(delta))
    return d * d <= Fraction(1, 2 ** (mantissa_bits + 1))
