"""Dense matrices over F_q.

A matrix is a 2-d ``numpy.int64`` array with entries in ``0..q-1``; every
function takes the :class:`~pspread.ffcore.fields.BaseField` (or just ``q``)
as its first argument.  Purely structural operations (stacking, slicing,
transposing) need no field and are plain numpy.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .fields import BaseField, as_base_field


class RREF(NamedTuple):
    matrix: np.ndarray
    rank: int
    pivots: list[int]


def as_matrix(F: int | BaseField, rows, cols: int | None = None) -> np.ndarray:
    """Validate and copy ``rows`` into an int64 matrix over F_q."""
    F = as_base_field(F)
    M = np.array(rows, dtype=np.int64)
    if M.ndim == 1 and M.size == 0:
        M = M.reshape(0, 0 if cols is None else cols)
    if M.ndim != 2:
        raise ValueError("a matrix must be 2-dimensional")
    if cols is not None and M.shape[1] != cols:
        raise ValueError(f"expected {cols} columns, got {M.shape[1]}")
    if M.size and (M.min() < 0 or M.max() >= F.q):
        raise ValueError(f"matrix entries must lie in 0..{F.q - 1}")
    return M


def identity(k: int) -> np.ndarray:
    return np.eye(k, dtype=np.int64)


def zeros(r: int, c: int | None = None) -> np.ndarray:
    return np.zeros((r, r if c is None else c), dtype=np.int64)


def matadd(F: int | BaseField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    F = as_base_field(F)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    return F.add[A, B]


def matsub(F: int | BaseField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    F = as_base_field(F)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    return F.sub[A, B]


def scalar_mul(F: int | BaseField, c: int, A: np.ndarray) -> np.ndarray:
    F = as_base_field(F)
    return F.mul[c, A]


def matmul(F: int | BaseField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    F = as_base_field(F)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    if F.e == 1:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for l in range(A.shape[1]):
        out = F.add[out, F.mul[A[:, l, None], B[None, l, :]]]
    return out


def matpow(F: int | BaseField, A: np.ndarray, n: int) -> np.ndarray:
    F = as_base_field(F)
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix power needs a square matrix")
    out = identity(A.shape[0])
    while n:
        if n & 1:
            out = matmul(F, out, A)
        A = matmul(F, A, A)
        n >>= 1
    return out


def last_rows(A: np.ndarray, k: int) -> np.ndarray:
    """The last ``k`` rows of ``A`` (the tail block A_(k) of a codeword)."""
    if not 0 <= k <= A.shape[0]:
        raise ValueError(f"cannot take {k} rows of a {A.shape[0]}-row matrix")
    return A[A.shape[0] - k:].copy()


def submatrix(A: np.ndarray, rows: Sequence[int] | slice, cols: Sequence[int] | slice) -> np.ndarray:
    if isinstance(rows, slice) and isinstance(cols, slice):
        return A[rows, cols].copy()
    return A[np.ix_(np.arange(A.shape[0])[rows], np.arange(A.shape[1])[cols])].copy()


def rref(F: int | BaseField, M: np.ndarray) -> RREF:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    F = as_base_field(F)
    R = np.array(M, dtype=np.int64, copy=True)
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = R[r, c]
        if lead != 1:
            R[r] = F.mul[F.inv[lead], R[r]]
        col = R[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            R[others] = F.sub[R[others], F.mul[col[others, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return RREF(R, r, pivots)


def rank(F: int | BaseField, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return rref(F, M).rank


def nullspace(F: int | BaseField, M: np.ndarray) -> np.ndarray:
    """Rows spanning ``{x : M @ x.T == 0}``, as an RREF-free basis (one row per free column)."""
    F = as_base_field(F)
    ncols = M.shape[1]
    R, rk, pivots = rref(F, M) if M.shape[0] else RREF(M, 0, [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = F.neg[R[i, f]]
    return basis


def is_invertible(F: int | BaseField, A: np.ndarray) -> bool:
    return A.shape[0] == A.shape[1] and rank(F, A) == A.shape[0]
