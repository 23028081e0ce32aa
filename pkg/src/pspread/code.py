"""Partial spread codes C_q(k, n; p, p') built from companion-matrix algebras.

A codeword is the row space of a k x n generator in block form.  Writing
n = h*k + r, the block-``i`` codewords are

    [0_k ... 0_k  I_k  A_{i+1} ... A_{h-1}  A_(k)]      (I_k in block i)

with A_j in F_q[P], A in F_q[P'] and A_(k) the last k rows of A; the single
special codeword is ``[0_k ... 0_k  0_{k x r}  I_k]``.

Message indices: 0 is the special codeword, then blocks i = 1, ..., h-1 in
turn.  Within block i the matrices (A_{i+1}, ..., A_{h-1}, A) form a
mixed-radix counter, A_{i+1} most significant and A least significant.
Each matrix is keyed by its first row c read as the integer sum c_l q^l.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .ffcore import (
    BaseField,
    FieldCtx,
    algebra_element,
    as_base_field,
    companion_matrix,
    field_for,
    is_algebra_element,
    is_irreducible,
    lift_last_rows,
    rank,
    smallest_irreducible,
)
from .subspace import Subspace, distance, enum_limit, enumerate_grassmannian, gaussian_binomial, span


def _digits(x: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        x, d = divmod(x, q)
        out.append(d)
    return out


def matrix_key(row: Sequence[int], q: int) -> int:
    """Integer key of an algebra element from its first row ``c``: sum c_l q^l."""
    return sum(int(c) * q**l for l, c in enumerate(row))


@dataclass(eq=False)
class Code:
    """Parameters and derived data of C_q(k, n; p, p').  Build with :func:`build_code`."""

    q: int
    k: int
    n: int
    p: tuple[int, ...]
    pp: tuple[int, ...]
    h: int = field(init=False)
    r: int = field(init=False)
    P: np.ndarray = field(init=False, repr=False)
    PP: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        q, k, n = self.q, self.k, self.n
        if k < 1 or 2 * k > n:
            raise ValueError(
                f"need 1 <= k <= n/2, got k={k}, n={n}; for k > n/2 build the code for n-k "
                "and take orthogonal complements"
            )
        self.h, self.r = divmod(n, k)
        self.p, self.pp = tuple(int(c) for c in self.p), tuple(int(c) for c in self.pp)
        for name, f, deg in (("p", self.p, k), ("pp", self.pp, k + self.r)):
            if len(f) != deg + 1:
                raise ValueError(f"{name} must have degree {deg}, got coefficients {list(f)}")
            if any(not 0 <= c < q for c in f):
                raise ValueError(f"{name} coefficients must lie in 0..{q - 1}")
            if not is_irreducible(f, q):
                raise ValueError(f"{name} = {list(f)} is reducible over F_{q}")
        self.P = companion_matrix(self.p, q)
        self.PP = companion_matrix(self.pp, q)
        self.P.setflags(write=False)
        self.PP.setflags(write=False)

    @property
    def field(self) -> BaseField:
        return as_base_field(self.q)

    @property
    def ctx(self) -> FieldCtx:
        """F_{q^k} with modulus p (the algebra F_q[P])."""
        return field_for(self.q, self.p)

    @property
    def ctx_tail(self) -> FieldCtx:
        """F_{q^(k+r)} with modulus p' (the algebra F_q[P'])."""
        return field_for(self.q, self.pp)

    @property
    def max_dim(self) -> int:
        return self.k

    @property
    def min_dist(self) -> int:
        return 2 * self.k

    def block_size(self, i: int) -> int:
        return self.q ** (self.k * (self.h - 1 - i)) * self.q ** (self.k + self.r)

    def __len__(self) -> int:
        return cardinality(self)

    @functools.cached_property
    def codewords(self) -> list[Codeword]:
        return list(enumerate_codewords(self))

    @functools.cached_property
    def subspaces(self) -> list[Subspace]:
        return [cw.subspace for cw in self.codewords]

    def block_cols(self, i: int) -> slice:
        """Columns of the k x k block ``i`` (1-based, ``1 <= i <= h-1``)."""
        return slice(self.k * (i - 1), self.k * i)

    @property
    def tail_cols(self) -> slice:
        return slice(self.k * (self.h - 1), self.n)


@dataclass(frozen=True, eq=False)
class Codeword:
    """One codeword: ``kind`` is ``"special"`` or ``"block"`` (then ``block`` is i).

    ``coeffs`` holds the first rows of A_{i+1}, ..., A_{h-1} and ``tail`` the
    first row of A; the generator is already in RREF.
    """

    q: int
    kind: str
    block: int | None
    coeffs: tuple[tuple[int, ...], ...]
    tail: tuple[int, ...] | None
    generator: np.ndarray = field(repr=False)
    index: int

    @property
    def subspace(self) -> Subspace:
        return Subspace(self.q, self.generator.shape[1], self.generator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codeword):
            return NotImplemented
        return self.index == other.index and np.array_equal(self.generator, other.generator)

    def __hash__(self) -> int:
        return hash((self.index, self.generator.tobytes()))


def build_code(q: int, k: int, n: int, p: Sequence[int] | None = None, pp: Sequence[int] | None = None) -> Code:
    """Construct C_q(k, n; p, p').

    Omitted polynomials are auto-selected; for r = 0 an omitted ``pp``
    defaults to ``p`` (the spread case).
    """
    if k < 1 or 2 * k > n:
        raise ValueError(
            f"need 1 <= k <= n/2, got k={k}, n={n}; for k > n/2 build the code for n-k "
            "and take orthogonal complements"
        )
    F = as_base_field(q)
    r = n % k
    if p is None:
        p = smallest_irreducible(F, k)
    if pp is None:
        pp = p if r == 0 else smallest_irreducible(F, k + r)
    return Code(q, k, n, tuple(p), tuple(pp))


def cardinality(code: Code) -> int:
    q, k, n, r = code.q, code.k, code.n, code.r
    return (q**n - q**r) // (q**k - 1) - q**r + 1


def _make_codeword(code: Code, block: int | None, keys: Sequence[int], tail_key: int | None, index: int) -> Codeword:
    q, k, F = code.q, code.k, code.field
    G = np.zeros((k, code.n), dtype=np.int64)
    if block is None:
        G[:, code.n - k:] = np.eye(k, dtype=np.int64)
        cw = Codeword(q, "special", None, (), None, G, index)
    else:
        G[:, code.block_cols(block)] = np.eye(k, dtype=np.int64)
        coeffs = []
        for j, key in zip(range(block + 1, code.h), keys):
            c = _digits(key, q, k)
            G[:, code.block_cols(j)] = algebra_element(F, code.P, c)
            coeffs.append(tuple(c))
        tail = _digits(tail_key, q, k + code.r)
        G[:, code.tail_cols] = algebra_element(F, code.PP, tail)[code.r:]
        cw = Codeword(q, "block", block, tuple(coeffs), tuple(tail), G, index)
    G.setflags(write=False)
    return cw


def encode(code: Code, index: int) -> Codeword:
    """Codeword for message ``index`` (0 <= index < cardinality)."""
    total = cardinality(code)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range [0, {total})")
    if index == 0:
        return _make_codeword(code, None, (), None, 0)
    offset = index - 1
    for i in range(1, code.h):
        size = code.block_size(i)
        if offset < size:
            break
        offset -= size
    tail_radix = code.q ** (code.k + code.r)
    offset, tail_key = divmod(offset, tail_radix)
    keys = []
    for _ in range(code.h - 1 - i):
        offset, key = divmod(offset, code.q**code.k)
        keys.append(key)
    return _make_codeword(code, i, keys[::-1], tail_key, index)


def index_of(code: Code, block: int, keys: Sequence[int], tail_key: int) -> int:
    index = 1 + sum(code.block_size(i) for i in range(1, block))
    offset = 0
    for key in keys:
        offset = offset * code.q**code.k + key
    return index + offset * code.q ** (code.k + code.r) + tail_key


def enumerate_codewords(code: Code) -> Iterator[Codeword]:
    for index in range(cardinality(code)):
        yield encode(code, index)


def membership(code: Code, S: Subspace) -> int | None:
    """Index of the codeword equal to ``S``, or None if ``S`` is not a codeword."""
    if S.q != code.q or S.n != code.n or S.dim != code.k:
        return None
    k, B = code.k, S.basis
    pivots = [int(np.flatnonzero(row)[0]) for row in B]
    if pivots == list(range(code.n - k, code.n)):
        return 0
    if pivots[0] % k or pivots != list(range(pivots[0], pivots[0] + k)) or pivots[0] >= k * (code.h - 1):
        return None
    block = pivots[0] // k + 1
    keys = []
    for j in range(block + 1, code.h):
        A = B[:, code.block_cols(j)]
        if not is_algebra_element(code.field, code.P, A):
            return None
        keys.append(matrix_key(A[0], code.q))
    try:
        A = lift_last_rows(code.ctx_tail, B[:, code.tail_cols], code.r)
    except ValueError:
        return None
    return index_of(code, block, keys, matrix_key(A[0], code.q))


def decode_index(code: Code, generator: np.ndarray) -> int:
    """Message index of the codeword spanned by ``generator``; raises if it is not a codeword."""
    S = span(code.q, generator, code.n)
    index = membership(code, S)
    if index is None:
        raise ValueError("matrix does not span a codeword")
    return index


def min_distance(subspaces: Sequence[Subspace]) -> tuple[int, int]:
    """``(minimum pairwise distance, number of pairs checked)``."""
    best, pairs = None, 0
    for U, V in itertools.combinations(subspaces, 2):
        d = distance(U, V)
        pairs += 1
        best = d if best is None else min(best, d)
    if best is None:
        raise ValueError("minimum distance needs at least two subspaces")
    return best, pairs


def min_distance_exhaustive(code: Code, limit: int | None = None) -> int:
    limit = enum_limit(10**4) if limit is None else limit
    total = cardinality(code)
    if total > limit:
        raise ValueError(f"code has {total} codewords, above the limit {limit}")
    return min_distance(code.subspaces)[0]


def singleton_bound(q: int, k: int, n: int, d: int) -> int:
    if not 1 <= k < n or d < 2 or d % 2:
        raise ValueError(f"invalid parameters q={q}, k={k}, n={n}, d={d}")
    top, bottom = n - (d - 2) // 2, max(k, n - k)
    if bottom > top:
        raise ValueError(f"distance {d} is impossible for k={k}, n={n}")
    return gaussian_binomial(top, bottom, q)


def partial_spread_upper_bound(q: int, k: int, n: int) -> int:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    r = n % k
    return (q**n - q**r) // (q**k - 1)


def beutelspacher_lower_bound(q: int, k: int, n: int) -> int:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    r = n % k
    return (q**n - q**r) // (q**k - 1) - q**r + 1


def _check_uniform(subspaces: Sequence[Subspace]) -> None:
    if len({(S.q, S.n, S.dim) for S in subspaces}) > 1:
        raise ValueError("subspaces differ in field, ambient dimension or dimension")


def is_partial_spread(subspaces: Iterable[Subspace]) -> bool:
    """True iff distinct members pairwise intersect trivially (duplicates count once)."""
    distinct = list(dict.fromkeys(subspaces))
    _check_uniform(distinct)
    for U, V in itertools.combinations(distinct, 2):
        if rank(U.q, np.vstack([U.basis, V.basis])) != U.dim + V.dim:
            return False
    return True


def vector_cover(subspaces: Iterable[Subspace]) -> dict[bytes, int]:
    """How many of the given subspaces contain each nonzero vector."""
    counts: dict[bytes, int] = {}
    for S in subspaces:
        for v in S.vectors():
            if v.any():
                key = v.tobytes()
                counts[key] = counts.get(key, 0) + 1
    return counts


def is_spread(subspaces: Sequence[Subspace]) -> bool:
    """Nonzero vectors of the members partition F_q^n minus the origin."""
    _check_uniform(subspaces)
    S0 = subspaces[0]
    counts = vector_cover(subspaces)
    return len(counts) == S0.q**S0.n - 1 and all(c == 1 for c in counts.values())


def is_maximal_partial_spread(subspaces: Sequence[Subspace], limit: int | None = None) -> bool:
    """No k-subspace outside the family meets every member trivially.

    A candidate W is disjoint from every member exactly when none of its
    nonzero vectors is covered, so each W costs q^k - 1 lookups.
    """
    _check_uniform(subspaces)
    S0 = subspaces[0]
    limit = enum_limit(10**5) if limit is None else limit
    members = set(subspaces)
    covered = vector_cover(subspaces)
    for W in enumerate_grassmannian(S0.q, S0.dim, S0.n, limit=limit):
        if W in members:
            continue
        if not any(v.tobytes() in covered for v in W.vectors() if v.any()):
            return False
    return True


def is_maximal_exhaustive(code: Code, limit: int | None = None) -> bool:
    return is_maximal_partial_spread(code.subspaces, limit)
