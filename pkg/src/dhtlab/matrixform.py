"""Explicit N-by-N matrix form of the finite discrete Hilbert transform.

Serves two roles: a production operator, and a brute-force oracle for the
direct summation in :mod:`dhtlab.core`.  The two modules never share kernel
code; their agreement is a tested property, not a construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_samples

__all__ = [
    "DhtMatrix",
    "build_forward_matrix",
    "build_inverse_matrix",
    "apply",
    "round_trip_operator",
    "matrix_to_csv",
]


@dataclass(frozen=True)
class DhtMatrix:
    """Immutable N x N transform matrix.

    entries[k][n] = +-(2/pi)/(k-n) where (k-n) is odd, 0 elsewhere.
    Antisymmetric with a checkerboard sparsity pattern: an entry is
    nonzero exactly when row and column indices have opposite parity.
    """

    n: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.n, self.n):
            raise ValueError("entries shape does not match n")


def _build(n: int, scale: float) -> np.ndarray:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"matrix size must be a positive integer, got {n!r}")
    idx = np.arange(n)
    diff = idx[:, None] - idx[None, :]
    odd = diff % 2 != 0
    denom = np.where(odd, diff, 1)
    entries = np.where(odd, scale / (np.pi * denom), 0.0)
    entries.setflags(write=False)
    return entries


def build_forward_matrix(n: int) -> DhtMatrix:
    """Forward matrix H with H[k][n] = (2/pi)/(k-n) for odd (k-n)."""
    return DhtMatrix(int(n), _build(n, 2.0))


def build_inverse_matrix(n: int) -> DhtMatrix:
    """Inverse matrix with entries -(2/pi)/(n-k) for odd (n-k).

    Built from its own defining formula, not by transposing the forward
    matrix; equality with the transpose is a tested consequence.
    """
    return DhtMatrix(int(n), _build(n, -2.0))


def apply(m: DhtMatrix, f) -> np.ndarray:
    """Matrix-vector product with ascending-column accumulation.

    Row dot products accumulate left to right, mirroring the ascending
    index order of the direct summation, so repeated runs are
    bit-identical.
    """
    x = as_samples(f)
    if x.size != m.n:
        raise ValueError(f"signal length {x.size} does not match matrix size {m.n}")
    terms = m.entries * x[None, :]
    return np.cumsum(terms, axis=1)[:, -1]


def round_trip_operator(n: int) -> np.ndarray:
    """R = inverse_matrix @ forward_matrix; approximates identity.

    Deviation from identity concentrates in the first and last rows and
    shrinks toward the middle of the index range as n grows.
    """
    return build_inverse_matrix(n).entries @ build_forward_matrix(n).entries


def matrix_to_csv(m: DhtMatrix, out) -> None:
    """Dump entries row-major as CSV, 17 significant digits."""
    own = isinstance(out, (str, bytes)) or hasattr(out, "__fspath__")
    fh = open(out, "w", encoding="ascii") if own else out
    try:
        for row in m.entries:
            fh.write(",".join(format(v, ".16e") for v in row))
            fh.write("\n")
    finally:
        if own:
            fh.close()
