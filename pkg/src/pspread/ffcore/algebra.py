"""Companion matrices and the matrix algebra F_q[P] ~ F_{q^m}.

For the companion matrix P of the modulus, ``phi(x) @ P == phi(lambda * x)``,
so the algebra element attached to ``a`` has rows ``phi(lambda^i * a)``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import poly
from .fields import BaseField, FieldCtx, as_base_field
from .matrix import identity, matadd, matmul, scalar_mul


def companion_matrix(modulus: Sequence[int], q: int | BaseField) -> np.ndarray:
    """Superdiagonal ones with last row ``(-c_0, ..., -c_{m-1})``."""
    F = as_base_field(q)
    modulus = [int(c) for c in modulus]
    if not poly.is_irreducible_over(F, modulus):
        raise ValueError(f"{modulus} is reducible over F_{F.q}")
    m = len(modulus) - 1
    P = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        P[i, i + 1] = 1
    P[m - 1] = F.neg[np.array(modulus[:m], dtype=np.int64)]
    return P


def algebra_element(F: int | BaseField, P: np.ndarray, c: Sequence[int]) -> np.ndarray:
    """``sum_i c_i P^i``; its first row is ``c`` when P is a companion matrix."""
    F = as_base_field(F)
    m = P.shape[0]
    if P.shape != (m, m) or len(c) != m:
        raise ValueError(f"coefficient vector of length {len(c)} does not fit a {P.shape} matrix")
    out = np.zeros((m, m), dtype=np.int64)
    power = identity(m)
    for ci in c:
        if ci:
            out = matadd(F, out, scalar_mul(F, int(ci), power))
        power = matmul(F, power, P)
    return out


def is_algebra_element(F: int | BaseField, P: np.ndarray, A: np.ndarray) -> bool:
    """A square matrix lies in F_q[P] iff it is rebuilt exactly from its first row."""
    if A.shape != P.shape:
        return False
    return bool(np.array_equal(algebra_element(F, P, A[0]), A))


def ext_to_algebra(ctx: FieldCtx, a: int) -> np.ndarray:
    rows = []
    x = a
    for _ in range(ctx.m):
        rows.append(ctx.phi(x))
        x = ctx.mul(x, ctx.lam)
    return np.array(rows, dtype=np.int64)


def algebra_to_ext(ctx: FieldCtx, A: np.ndarray) -> int:
    if A.shape != (ctx.m, ctx.m):
        raise ValueError(f"expected a {ctx.m}x{ctx.m} matrix, got {A.shape}")
    a = ctx.phi_inv(A[0])
    if not np.array_equal(ext_to_algebra(ctx, a), A):
        raise ValueError("matrix is not an element of the companion algebra")
    return a


def lift_last_rows(ctx: FieldCtx, L: np.ndarray, r: int) -> np.ndarray:
    """Recover the unique ``A`` in F_q[P'] whose last ``k`` rows are ``L``.

    Row ``r+1`` of ``A`` is ``phi(lambda^r a)``, so ``a`` comes from the first
    row of ``L``; the rebuilt matrix is then checked against all of ``L``.
    """
    k = ctx.m - r
    if r < 0 or k < 1 or L.shape != (k, ctx.m):
        raise ValueError(f"a {L.shape} block cannot be the last rows of a {ctx.m}x{ctx.m} algebra element with r={r}")
    a = ctx.mul(ctx.pow(ctx.lam, -r), ctx.phi_inv(L[0])) if r else ctx.phi_inv(L[0])
    A = ext_to_algebra(ctx, a)
    if not np.array_equal(A[r:], L):
        raise ValueError("block is not the last rows of any companion-algebra element")
    return A
