"""Whitespace text matrices: a header line "m n" followed by m rows of n numbers."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import Precision


class MatrixParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_scalar(x, precision: Precision = Precision.BINARY64) -> str:
    """Shortest decimal that reads back to the same value in ``precision``."""
    if precision is Precision.BINARY32:
        return str(np.float32(x))
    return repr(float(x))


def parse_matrix(text: str, precision: Precision = Precision.BINARY64) -> np.ndarray:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise MatrixParseError(1, "empty file")
    lineno, header = lines[0]
    if len(header) != 2:
        raise MatrixParseError(lineno, "header must be 'm n'")
    try:
        m, n = (int(t) for t in header)
    except ValueError:
        raise MatrixParseError(lineno, f"bad dimensions {' '.join(header)!r}") from None
    if m < 1 or n < 1:
        raise MatrixParseError(lineno, f"dimensions must be positive, got {m} {n}")
    rows = lines[1:]
    if len(rows) != m:
        where = rows[-1][0] + 1 if rows else lineno + 1
        raise MatrixParseError(where, f"expected {m} rows, found {len(rows)}")
    a = np.empty((m, n), dtype=precision.dtype)
    for r, (lineno, toks) in enumerate(rows):
        if len(toks) != n:
            raise MatrixParseError(lineno, f"expected {n} values, found {len(toks)}")
        for c, tok in enumerate(toks):
            try:
                v = float(tok)
            except ValueError:
                raise MatrixParseError(lineno, f"not a number: {tok!r}") from None
            if not np.isfinite(v):
                raise MatrixParseError(lineno, f"non-finite value {tok!r}")
            a[r, c] = v
    return a


def read_matrix(path, precision: Precision = Precision.BINARY64) -> np.ndarray:
    return parse_matrix(Path(path).read_text(encoding="utf-8"), precision)


def format_matrix(a: np.ndarray, precision: Precision = Precision.BINARY64) -> str:
    m, n = a.shape
    body = [" ".join(format_scalar(x, precision) for x in row) for row in a]
    return "\n".join([f"{m} {n}", *body]) + "\n"


def write_matrix(path, a: np.ndarray, precision: Precision = Precision.BINARY64) -> None:
    Path(path).write_text(format_matrix(a, precision), encoding="utf-8", newline="\n")
