"""Decoding partial spread codes.

The pipeline locates the pivot block from the ranks of the received k x k
blocks, splits the problem into independent two-block spread problems (one
per later block, plus the tail) and solves each in a spread code of
length 2k or, for the tail with r >= 1, 2(k+r) after zero-padding.

Spread subproblems ``[M1 | M2] ~ [I | A]`` are solved by an exhaustive scan
over the companion algebra (always correct) or by linearized-polynomial
interpolation, which is verified and falls back to the scan.
"""

from __future__ import annotations

import functools
from concurrent.futures import Executor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import Code, Codeword, cardinality, encode, index_of, matrix_key
from .ffcore import FieldCtx, ext_to_algebra, matmul, matsub, rank, rref
from .subspace import Subspace, distance, enum_limit, span

DECODED = "decoded"
NOT_DECODABLE = "not_decodable"
INVALID_INPUT = "invalid_input"

SPREAD_METHODS = ("oracle", "interpolation")


class NotDecodable(Exception):
    """No codeword lies within distance < k of the received space."""


@dataclass(frozen=True, eq=False)
class Received:
    """A received word: an m x n matrix (m >= 1) whose rows span the received space.

    The wire format fixes m = k with zero rows for padding; larger spanning
    sets arise when the whole of a space of dimension above k is kept.
    """

    code: Code
    matrix: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] != self.code.n:
            raise ValueError(f"received word must have {self.code.n} columns, got shape {M.shape}")
        if M.size and (M.min() < 0 or M.max() >= self.code.q):
            raise ValueError(f"entries must lie in 0..{self.code.q - 1}")
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)

    @classmethod
    def from_subspace(cls, code: Code, X: Subspace) -> Received:
        """Basis rows of ``X``, zero-padded to at least k rows."""
        if X.n != code.n or X.q != code.q:
            raise ValueError("subspace does not live in the code's ambient space")
        M = np.zeros((max(code.k, X.dim), code.n), dtype=np.int64)
        M[: X.dim] = X.basis
        return cls(code, M)

    @functools.cached_property
    def subspace(self) -> Subspace:
        return span(self.code.q, self.matrix, self.code.n)

    @property
    def t(self) -> int:
        return self.subspace.dim

    def block(self, i: int) -> np.ndarray:
        return self.matrix[:, self.code.block_cols(i)]

    @property
    def tail(self) -> np.ndarray:
        return self.matrix[:, self.code.tail_cols]


@dataclass(frozen=True)
class DecodeOutcome:
    status: str
    codeword: Codeword | None = None
    distance: int | None = None
    pivot: int | None = None
    ranks: tuple[int, ...] = ()
    ties: tuple[int, ...] = ()
    message: str = ""

    @property
    def index(self) -> int | None:
        return None if self.codeword is None else self.codeword.index

    @property
    def ok(self) -> bool:
        return self.status == DECODED

    def to_lines(self) -> list[str]:
        lines = [f"status {self.status}"]
        if self.status == DECODED:
            lines.append(f"index {self.index}")
        if self.distance is not None:
            lines.append(f"distance {self.distance}")
        lines.append(f"pivot {'none' if self.pivot is None else self.pivot}")
        lines.append("ranks " + " ".join(map(str, self.ranks)) if self.ranks else "ranks")
        return lines


def _as_received(code: Code, x) -> Received:
    return x if isinstance(x, Received) else Received(code, np.asarray(x))


def _left_is_pivot(left_rank: int, t: int) -> bool:
    """``rk > (t-1)/2`` without fractions."""
    return 2 * left_rank > t - 1


def block_ranks(x: Received) -> tuple[int, ...]:
    return tuple(rank(x.code.q, x.block(i)) for i in range(1, x.code.h))


def locate_pivot_block(x: Received, code: Code | None = None) -> int | None:
    """Smallest block i with rk(M_i) > (t-1)/2, or None (then the special codeword)."""
    t = x.t
    if t == 0:
        raise ValueError("the zero space cannot be decoded")
    for i, rk in enumerate(block_ranks(x), start=1):
        if _left_is_pivot(rk, t):
            return i
    return None


def project_two_blocks(x: Received, i: int, j: int) -> np.ndarray:
    """Columns of blocks i and j side by side (k x 2k)."""
    if not 1 <= i < j <= x.code.h - 1:
        raise ValueError(f"need 1 <= i < j <= {x.code.h - 1}, got i={i}, j={j}")
    return np.hstack([x.block(i), x.block(j)])


def project_tail(x: Received, i: int) -> np.ndarray:
    """Block i followed by the final k+r columns (k x (2k+r))."""
    if not 1 <= i <= x.code.h - 1:
        raise ValueError(f"need 1 <= i <= {x.code.h - 1}, got i={i}")
    return np.hstack([x.block(i), x.tail])


def embed_tail(Mi: np.ndarray, M: np.ndarray, r: int) -> np.ndarray:
    """``[[0_r, 0], [0, M_i]] | [[0_{r x (k+r)}], [M]]``: an (m+r) x 2(k+r) spread problem."""
    if r < 1:
        raise ValueError("embedding needs r >= 1; use the 2k decoder for r = 0")
    m, k = Mi.shape
    if M.shape != (m, k + r):
        raise ValueError(f"expected blocks mxk and mx(k+r), got {Mi.shape} and {M.shape}")
    out = np.zeros((m + r, 2 * (k + r)), dtype=np.int64)
    out[r:, r:k + r] = Mi
    out[r:, k + r:] = M
    return out


@functools.lru_cache(maxsize=32)
def _algebra_table(ctx: FieldCtx) -> tuple[tuple[int, np.ndarray], ...]:
    table = []
    for a in range(ctx.order):
        A = ext_to_algebra(ctx, a)
        A.setflags(write=False)
        table.append((a, A))
    return tuple(table)


def _spread_distance(ctx: FieldCtx, x2: np.ndarray, t: int, A: np.ndarray) -> int:
    """d(rowsp[I | A], rowsp[M1 | M2]) = k - t + 2 rk(M2 - M1 A)."""
    k = ctx.m
    M1, M2 = x2[:, :k], x2[:, k:]
    return k - t + 2 * rank(ctx.base, matsub(ctx.base, M2, matmul(ctx.base, M1, A)))


def _check_spread_input(x2: np.ndarray, ctx: FieldCtx) -> int:
    k = ctx.m
    if x2.ndim != 2 or x2.shape[1] != 2 * k:
        raise ValueError(f"spread problem needs {2 * k} columns, got shape {x2.shape}")
    t = rank(ctx.base, x2)
    if t == 0:
        raise ValueError("the zero space cannot be decoded")
    if not _left_is_pivot(rank(ctx.base, x2[:, :k]), t):
        raise ValueError("left block rank is at most (t-1)/2; the special codeword applies")
    return t


def decode_spread_oracle(x2: np.ndarray, ctx: FieldCtx) -> np.ndarray | None:
    """Scan all q^k algebra elements for the A with d([I | A], x2) < k."""
    x2 = np.asarray(x2, dtype=np.int64)
    t = _check_spread_input(x2, ctx)
    for _, A in _algebra_table(ctx):
        if _spread_distance(ctx, x2, t, A) < ctx.m:
            return A
    return None


def _kernel_vector(ctx: FieldCtx, rows: list[list[int]], ncols: int) -> list[int] | None:
    """A nonzero solution of ``rows @ x = 0`` over F_{q^m}, or None."""
    R = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = ctx.inv(R[r][c])
        R[r] = [ctx.mul(inv, v) for v in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    x = [0] * ncols
    x[free] = 1
    for i, pc in enumerate(pivots):
        x[pc] = ctx.neg(R[i][free])
    return x


def _interpolate(x2: np.ndarray, ctx: FieldCtx) -> int | None:
    """Candidate ``a`` with rowsp[I | A(a)] close to rowsp(x2), or None.

    Rows (u, v) of x2 become field pairs.  A nonzero pair of linearized
    polynomials V, W of q-degree < tau = floor(t/2) + 1 with V(u) + W(v) = 0
    on every row gives v_j + w_j a^(q^j) = 0 for the sent a whenever the
    codeword meets the received space in dimension >= tau.
    """
    k = ctx.m
    R, t, _ = rref(ctx.base, x2)
    pairs = [(ctx.phi_inv(row[:k]), ctx.phi_inv(row[k:])) for row in R[:t]]
    tau = t // 2 + 1
    eqs = []
    for u, v in pairs:
        eqs.append([ctx.frobenius(u, j) for j in range(tau)] + [ctx.frobenius(v, j) for j in range(tau)])
    sol = _kernel_vector(ctx, eqs, 2 * tau)
    if sol is None:
        return None
    vs, ws = sol[:tau], sol[tau:]
    candidate = None
    for j in range(tau):
        if ws[j] == 0:
            if vs[j] != 0:
                return None
            continue
        a = ctx.frobenius(ctx.neg(ctx.div(vs[j], ws[j])), -j)
        if candidate is not None and a != candidate:
            return None
        candidate = a
    return candidate


def decode_spread_interpolation(x2: np.ndarray, ctx: FieldCtx) -> np.ndarray | None:
    """Interpolation fast path; any failed check falls back to :func:`decode_spread_oracle`."""
    x2 = np.asarray(x2, dtype=np.int64)
    t = _check_spread_input(x2, ctx)
    a = _interpolate(x2, ctx)
    if a is not None:
        A = ext_to_algebra(ctx, a)
        if _spread_distance(ctx, x2, t, A) < ctx.m:
            return A
    return decode_spread_oracle(x2, ctx)


def _spread_solver(method: str):
    if method == "oracle":
        return decode_spread_oracle
    if method == "interpolation":
        return decode_spread_interpolation
    raise ValueError(f"unknown spread method {method!r}; choose from {SPREAD_METHODS}")


def decode_2k(x2: np.ndarray, ctx: FieldCtx, method: str = "oracle") -> np.ndarray:
    """Decode in the spread code of length 2k' given by ``ctx``.

    Returns the RREF generator ``[0 | I]`` or ``[I | A]`` of the codeword.
    """
    x2 = np.asarray(x2, dtype=np.int64)
    k = ctx.m
    if x2.ndim != 2 or x2.shape[1] != 2 * k:
        raise ValueError(f"expected {2 * k} columns, got shape {x2.shape}")
    t = rank(ctx.base, x2)
    if t == 0:
        raise ValueError("the zero space cannot be decoded")
    eye = np.eye(k, dtype=np.int64)
    if not _left_is_pivot(rank(ctx.base, x2[:, :k]), t):
        return np.hstack([np.zeros((k, k), dtype=np.int64), eye])
    A = _spread_solver(method)(x2, ctx)
    if A is None:
        raise NotDecodable("no spread codeword within distance < k")
    return np.hstack([eye, A])


def _decode_tail_matrix(Mi: np.ndarray, M: np.ndarray, code: Code, method: str) -> np.ndarray:
    """The A in F_q[P'] of the tail subproblem ``[M_i | M] ~ [I_k | A_(k)]``."""
    k, r = code.k, code.r
    x2 = np.hstack([Mi, M]) if r == 0 else embed_tail(Mi, M, r)
    gen = decode_2k(x2, code.ctx_tail, method)
    if not gen[:, : k + r].any():
        raise NotDecodable("tail subproblem decoded to the special codeword")
    return gen[:, k + r:]


def decode_2kr(x, code: Code, method: str = "oracle") -> np.ndarray:
    """Decode a k x (2k+r) received matrix in C_q(k, 2k+r; p'), 1 <= r <= k-1.

    Returns the RREF generator of the codeword: ``[0_k 0_{k x r} I_k]`` or
    ``[I_k | A_(k)]``.
    """
    k, r = code.k, code.r
    M_all = np.asarray(x.matrix if isinstance(x, Received) else x, dtype=np.int64)
    if not 1 <= r <= k - 1 or M_all.ndim != 2 or M_all.shape[1] != 2 * k + r:
        raise ValueError(f"decode_2kr needs 1 <= r <= k-1 and {2 * k + r} columns")
    t = rank(code.q, M_all)
    if t == 0:
        raise ValueError("the zero space cannot be decoded")
    Mi, M = M_all[:, :k], M_all[:, k:]
    out = np.zeros((k, 2 * k + r), dtype=np.int64)
    if not _left_is_pivot(rank(code.q, Mi), t):
        out[:, k + r:] = np.eye(k, dtype=np.int64)
        return out
    A = _decode_tail_matrix(Mi, M, code, method)
    out[:, :k] = np.eye(k, dtype=np.int64)
    out[:, k:] = A[r:]
    return out


def _solve_block(code: Code, x2: np.ndarray, method: str) -> np.ndarray:
    gen = decode_2k(x2, code.ctx, method)
    if not gen[:, : code.k].any():
        raise NotDecodable("block subproblem decoded to the special codeword")
    return gen[:, code.k:]


def decode(code: Code, x, method: str = "oracle", executor: Executor | None = None) -> DecodeOutcome:
    """Decode a received k x n word with the block pipeline.

    The per-block subproblems are independent; pass an ``executor`` to run
    them concurrently (results do not depend on scheduling).  A candidate
    is reported only after checking d(V, X) < k.
    """
    try:
        x = _as_received(code, x)
    except ValueError as exc:
        return DecodeOutcome(INVALID_INPUT, message=str(exc))
    ranks = block_ranks(x)
    t = x.t
    if t == 0:
        return DecodeOutcome(INVALID_INPUT, ranks=ranks, message="received space is zero")
    X = x.subspace
    pivot = locate_pivot_block(x)
    if pivot is None:
        cw = encode(code, 0)
    else:
        jobs = [(_solve_block, code, project_two_blocks(x, pivot, j), method) for j in range(pivot + 1, code.h)]
        jobs.append((_decode_tail_matrix, x.block(pivot), x.tail, code, method))
        try:
            if executor is None:
                results = [fn(*args) for fn, *args in jobs]
            else:
                futures = [executor.submit(fn, *args) for fn, *args in jobs]
                results = [f.result() for f in futures]
        except NotDecodable as exc:
            return DecodeOutcome(NOT_DECODABLE, pivot=pivot, ranks=ranks, message=str(exc))
        keys = [matrix_key(A[0], code.q) for A in results[:-1]]
        tail_key = matrix_key(results[-1][0], code.q)
        cw = encode(code, index_of(code, pivot, keys, tail_key))
    d = distance(cw.subspace, X)
    if d >= code.k:
        return DecodeOutcome(NOT_DECODABLE, distance=d, pivot=pivot, ranks=ranks,
                             message="candidate fails the distance check")
    return DecodeOutcome(DECODED, cw, d, pivot, ranks)


def decode_mindist_oracle(code: Code, x, limit: int | None = None) -> DecodeOutcome:
    """Brute-force minimum-distance decoding over every codeword."""
    limit = enum_limit(10**4) if limit is None else limit
    total = cardinality(code)
    if total > limit:
        raise ValueError(f"code has {total} codewords, above the limit {limit}")
    try:
        x = _as_received(code, x)
    except ValueError as exc:
        return DecodeOutcome(INVALID_INPUT, message=str(exc))
    ranks = block_ranks(x)
    X = x.subspace
    if X.dim == 0:
        return DecodeOutcome(INVALID_INPUT, ranks=ranks, message="received space is zero")
    dists = [distance(V, X) for V in code.subspaces]
    best = min(dists)
    ties = tuple(i for i, d in enumerate(dists) if d == best)
    cw = code.codewords[ties[0]]
    pivot = cw.block
    if best >= code.k:
        return DecodeOutcome(NOT_DECODABLE, cw, best, pivot, ranks, ties,
                             message="no codeword within the unique-decoding radius")
    return DecodeOutcome(DECODED, cw, best, pivot, ranks, ties)
