"""Batched Kunz-coordinate arithmetic over a whole family at once.

Rows are full coordinate vectors ``(0, x_1, ..., x_{m-1})`` so that residue
``r`` sits in column ``r``.
"""

from __future__ import annotations

import numpy as np


def _shift_tables(m: int) -> tuple[np.ndarray, np.ndarray]:
    # perm[a, t] = (t - a) mod m ; carry[a, t] = 1 when a + perm[a, t] wraps past m
    a = np.arange(m)[:, None]
    t = np.arange(m)[None, :]
    perm = (t - a) % m
    carry = (a + perm >= m).astype(np.int64)
    return perm, carry


def batch_sum(x: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Coordinates of ``x + y`` for every row ``y`` of ``Y``."""
    m = Y.shape[1]
    perm, carry = _shift_tables(m)
    Z = Y.copy()
    for a in range(1, m):
        np.minimum(Z, x[a] + Y[:, perm[a]] + carry[a], out=Z)
    return Z


def batch_residual(x: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Residue minima of ``y - x`` for every row ``y`` of ``Y``.

    Entry ``r`` is ``max_j (y_{(r+j) mod m} - x_j - [r + j >= m])``; the row is
    the Kunz vector of the residual whenever ``x ⊆ y``.
    """
    m = Y.shape[1]
    r = np.arange(m)
    R = Y.copy()
    for j in range(1, m):
        idx = (r + j) % m
        wrap = (r + j >= m).astype(np.int64)
        np.maximum(R, Y[:, idx] - (x[j] + wrap), out=R)
    return R


def full_rows(kunz_vectors: list[tuple[int, ...]], m: int) -> np.ndarray:
    X = np.zeros((len(kunz_vectors), m), dtype=np.int64)
    if m > 1 and kunz_vectors:
        X[:, 1:] = np.asarray(kunz_vectors, dtype=np.int64).reshape(len(kunz_vectors), m - 1)
    return X


def bool_rows_to_bitsets(M: np.ndarray) -> list[int]:
    """Row ``i`` of a boolean matrix as an int whose bit ``j`` is ``M[i, j]``."""
    packed = np.packbits(M, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]
