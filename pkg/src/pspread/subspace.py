"""Subspaces of F_q^n in canonical (RREF) form, the subspace distance, and
Grassmannian enumeration and sampling."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .ffcore import as_base_field, matmul, nullspace, rank, rref

ENUM_LIMIT_ENV = "PSPREAD_ENUM_LIMIT"


def enum_limit(default: int) -> int:
    """Enumeration cap, overridable through ``PSPREAD_ENUM_LIMIT``."""
    value = os.environ.get(ENUM_LIMIT_ENV)
    return int(value) if value else default


def make_rng(seed: int | Sequence[int] | None = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def _is_rref(B: np.ndarray) -> bool:
    if not B.shape[0]:
        return True
    nz = B != 0
    if not nz.any(axis=1).all():
        return False
    lead = nz.argmax(axis=1)
    if (np.diff(lead) <= 0).any():
        return False
    cols = B[:, lead]
    return bool((cols == np.eye(len(lead), dtype=np.int64)).all())


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_q^n held as its RREF basis (``dim x n``, no zero rows)."""

    q: int
    n: int
    basis: np.ndarray

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=np.int64)
        if B.ndim != 2 or B.shape[1] != self.n:
            raise ValueError(f"basis must have {self.n} columns, got shape {B.shape}")
        if not _is_rref(B):
            raise ValueError("basis must be in reduced row echelon form without zero rows")
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def field(self):
        return as_base_field(self.q)

    def _key(self):
        return (self.q, self.n, self.basis.shape, self.basis.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(map(str, r)) for r in self.basis)
        return f"Subspace(q={self.q}, n={self.n}, dim={self.dim}, basis=[{rows}])"

    def vectors(self) -> Iterator[np.ndarray]:
        """Every vector of the subspace (q^dim of them), zero first."""
        F = self.field
        for coeffs in itertools.product(range(self.q), repeat=self.dim):
            v = np.zeros(self.n, dtype=np.int64)
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = F.add[v, F.mul[c, row]]
            yield v

    def __contains__(self, v) -> bool:
        return contains(self, v)


def span(q: int, M, n: int | None = None) -> Subspace:
    """Row space of ``M`` in canonical form."""
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else np.zeros((0, n or 0), dtype=np.int64)
    if n is not None and M.shape[1] != n:
        raise ValueError(f"matrix has {M.shape[1]} columns, ambient dimension is {n}")
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return Subspace(q, ncols, np.zeros((0, ncols), dtype=np.int64))
    R, rk, _ = rref(q, M)
    return Subspace(q, ncols, R[:rk].copy())


def zero_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, np.zeros((0, n), dtype=np.int64))


def full_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, np.eye(n, dtype=np.int64))


def _same_ambient(U: Subspace, V: Subspace) -> None:
    if U.q != V.q or U.n != V.n:
        raise ValueError(f"ambient mismatch: F_{U.q}^{U.n} vs F_{V.q}^{V.n}")


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _same_ambient(U, V)
    return span(U.q, np.vstack([U.basis, V.basis]), U.n)


def intersection(U: Subspace, V: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[U, U], [V, 0]]``; rows with zero left half span U ∩ V."""
    _same_ambient(U, V)
    n = U.n
    if U.dim == 0 or V.dim == 0:
        return zero_space(U.q, n)
    Z = np.vstack([np.hstack([U.basis, U.basis]), np.hstack([V.basis, np.zeros_like(V.basis)])])
    R, rk, _ = rref(U.q, Z)
    rows = [row[n:] for row in R[:rk] if not row[:n].any()]
    return span(U.q, np.array(rows, dtype=np.int64).reshape(len(rows), n), n)


def distance(U: Subspace, V: Subspace) -> int:
    """Subspace distance dim U + dim V - 2 dim(U ∩ V)."""
    _same_ambient(U, V)
    joint = rank(U.q, np.vstack([U.basis, V.basis]))
    return 2 * joint - U.dim - V.dim


def contains(U: Subspace, v) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if v.shape[1] != U.n:
        raise ValueError(f"vector of length {v.shape[1]} is not in F_{U.q}^{U.n}")
    if not v.any():
        return True
    return rank(U.q, np.vstack([U.basis, v])) == U.dim


def orthogonal_complement(V: Subspace) -> Subspace:
    """``{x : <x, v> = 0 for all v in V}`` under the standard dot product."""
    if V.dim == 0:
        return full_space(V.q, V.n)
    return span(V.q, nullspace(V.q, V.basis), V.n)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def enumerate_grassmannian(q: int, k: int, n: int, limit: int | None = None) -> Iterator[Subspace]:
    """Yield every k-dimensional subspace of F_q^n exactly once.

    Order: pivot column sets lexicographically, then the free RREF entries
    counted in base q (first free position most significant).
    """
    limit = enum_limit(10**6) if limit is None else limit
    total = gaussian_binomial(n, k, q)
    if total > limit:
        raise ValueError(f"G_{q}({k},{n}) has {total} elements, above the limit {limit}")
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            B = np.zeros((k, n), dtype=np.int64)
            for i, pc in enumerate(pivots):
                B[i, pc] = 1
            for (i, j), val in zip(free, values):
                B[i, j] = val
            yield Subspace(q, n, B)


def random_subspace_of(V: Subspace, e: int, rng: np.random.Generator) -> Subspace:
    """An e-dimensional subspace of V from a random full-rank coordinate matrix."""
    if not 0 <= e <= V.dim:
        raise ValueError(f"cannot pick a {e}-dimensional subspace of a {V.dim}-dimensional space")
    if e == V.dim:
        return V
    if e == 0:
        return zero_space(V.q, V.n)
    F = V.field
    while True:
        C = rng.integers(0, V.q, size=(e, V.dim))
        if rank(F, C) == e:
            break
    return span(V.q, matmul(F, C, V.basis), V.n)


def random_disjoint_extension(H: Subspace, t: int, rng: np.random.Generator) -> Subspace:
    """``H ⊕ E`` for a random t-dimensional E with E ∩ H = {0}."""
    if not 0 <= t <= H.n - H.dim:
        raise ValueError(f"cannot add {t} dimensions to a {H.dim}-dimensional subspace of F_{H.q}^{H.n}")
    if t == 0:
        return H
    while True:
        E = rng.integers(0, H.q, size=(t, H.n))
        stacked = np.vstack([H.basis, E])
        if rank(H.q, stacked) == H.dim + t:
            return span(H.q, stacked, H.n)
