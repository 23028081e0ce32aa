"""Finite fields F_q (q = p^e) and extensions F_{q^m} given by a modulus.

Elements are plain integers.  An element of F_{p^e} is encoded by its base-p
digits (digit i is the coefficient of alpha^i), and an element of F_{q^m} by
its base-q digits (digit i is the coordinate on lambda^i).  Multiplication in
the extension uses exp/log tables.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import poly

MAX_BASE_ORDER = 1024
MAX_EXT_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"q={q} is not a prime power")
    return p, e


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(x: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        x, d = divmod(x, base)
        out.append(d)
    return out


def _undigits(ds: Sequence[int], base: int) -> int:
    x = 0
    for d in reversed(list(ds)):
        x = x * base + int(d)
    return x


class BaseField:
    """F_q with full addition/multiplication tables.

    ``add``, ``sub`` and ``mul`` are ``q x q`` integer arrays, ``neg`` and
    ``inv`` length-``q`` arrays (``inv[0]`` is a 0 placeholder).  Indexing the
    tables with numpy arrays gives vectorised arithmetic.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("base degree e must be >= 1")
        self.p, self.e, self.q = p, e, p**e
        if self.q > MAX_BASE_ORDER:
            raise ValueError(f"base field order {self.q} exceeds {MAX_BASE_ORDER}")
        idx = np.arange(self.q, dtype=np.int64)
        if e == 1:
            self.modulus: tuple[int, ...] = (0, 1)
            self.add = (idx[:, None] + idx[None, :]) % p
            self.mul = (idx[:, None] * idx[None, :]) % p
        else:
            prime = BaseField(p)
            if modulus is None:
                modulus = poly.smallest_irreducible(prime, e)
            modulus = list(modulus)
            if len(modulus) != e + 1 or not poly.is_irreducible_over(prime, modulus):
                raise ValueError(f"modulus {modulus} is not a monic irreducible of degree {e} over F_{p}")
            self.modulus = tuple(modulus)
            dig = np.array([_digits(x, p, e) for x in range(self.q)], dtype=np.int64)
            self.add = _undigits_array((dig[:, None, :] + dig[None, :, :]) % p, p)
            self.mul = np.zeros((self.q, self.q), dtype=np.int64)
            for a in range(self.q):
                for b in range(a, self.q):
                    r = poly.poly_mod(prime, poly.poly_mul(prime, dig[a], dig[b]), modulus)
                    self.mul[a, b] = self.mul[b, a] = _undigits(r + [0] * (e - len(r)), p)
        self.neg = np.array([int(np.flatnonzero(self.add[a] == 0)[0]) for a in range(self.q)], dtype=np.int64)
        self.sub = self.add[:, self.neg]
        self.inv = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            self.inv[a] = int(np.flatnonzero(self.mul[a] == 1)[0])
        for table in (self.add, self.sub, self.mul, self.neg, self.inv):
            table.setflags(write=False)

    def __repr__(self) -> str:
        return f"BaseField(q={self.q})"


def _undigits_array(dig: np.ndarray, base: int) -> np.ndarray:
    out = np.zeros(dig.shape[:-1], dtype=np.int64)
    for i in range(dig.shape[-1] - 1, -1, -1):
        out = out * base + dig[..., i]
    return out


@functools.lru_cache(maxsize=None)
def base_field(q: int) -> BaseField:
    """Cached F_q for a prime power ``q`` (auto-selected modulus when q is not prime)."""
    p, e = prime_power(q)
    return BaseField(p, e)


def as_base_field(q: int | BaseField) -> BaseField:
    return q if isinstance(q, BaseField) else base_field(q)


def is_irreducible(modulus: Sequence[int], q: int | BaseField) -> bool:
    """True iff the monic ``modulus`` (c_0 first) has no nontrivial factorisation over F_q."""
    return poly.is_irreducible_over(as_base_field(q), modulus)


class FieldCtx:
    """The extension F_{q^m} = F_q[x]/(modulus), with lambda the class of x.

    Immutable after construction.  Arithmetic methods take and return
    integers; wrap with :meth:`elem` to get operator overloading.
    """

    def __init__(self, base: BaseField, m: int, modulus: Sequence[int] | None = None):
        if m < 1:
            raise ValueError("extension degree m must be >= 1")
        q = base.q
        if q**m > MAX_EXT_ORDER:
            raise ValueError(f"field order {q}^{m} exceeds the table limit {MAX_EXT_ORDER}")
        if modulus is None:
            modulus = poly.smallest_irreducible(base, m)
        modulus = [int(c) for c in modulus]
        if len(poly.trim(modulus)) - 1 != m or len(modulus) != m + 1:
            raise ValueError(f"modulus {modulus} does not have degree {m}")
        if any(not 0 <= c < q for c in modulus):
            raise ValueError(f"modulus coefficients must lie in 0..{q - 1}")
        if not poly.is_irreducible_over(base, modulus):
            raise ValueError(f"modulus {modulus} is reducible over F_{q}")
        self.base = base
        self.q = q
        self.p = base.p
        self.m = m
        self.modulus = tuple(modulus)
        self.order = q**m
        self.lam = int(base.neg[modulus[0]]) if m == 1 else q
        self._build_tables()

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={list(self.modulus)})"

    # -- coordinates -------------------------------------------------------

    def coords(self, a: int) -> list[int]:
        return _digits(a, self.q, self.m)

    def from_coords(self, v: Sequence[int]) -> int:
        if len(v) != self.m:
            raise ValueError(f"coordinate vector has length {len(v)}, expected {self.m}")
        return _undigits(v, self.q)

    def _slow_mul(self, a: int, b: int) -> int:
        F = self.base
        r = poly.poly_mod(F, poly.poly_mul(F, self.coords(a), self.coords(b)), self.modulus)
        return self.from_coords(r + [0] * (self.m - len(r)))

    def _slow_pow(self, a: int, n: int) -> int:
        out = 1
        while n:
            if n & 1:
                out = self._slow_mul(out, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return out

    def _build_tables(self) -> None:
        N = self.order - 1
        factors = _prime_factors(N) if N > 1 else []
        candidates = [self.lam] + [g for g in range(1, self.order) if g != self.lam]
        gen = next(
            g for g in candidates
            if g != 0 and all(self._slow_pow(g, N // f) != 1 for f in factors)
        )
        exp = np.zeros(N, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        self.generator = gen
        self._exp, self._log = exp, log
        self._exp.setflags(write=False)
        self._log.setflags(write=False)

    # -- arithmetic on integer encodings --------------------------------------

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.order:
                raise ValueError(f"{x} is not an element of F_{self.q}^{self.m}")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.p == 2:
            return a ^ b
        out, scale, p = 0, 1, self.p
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.p == 2:
            return a
        out, scale, p = 0, 1, self.p
        while a:
            a, d = divmod(a, p)
            out += ((p - d) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._exp[(-self._log[a]) % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self._check(a)
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        return int(self._exp[(int(self._log[a]) * n) % (self.order - 1)])

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the base-field scalar ``c``."""
        return self.from_coords([int(self.base.mul[c, d]) for d in self.coords(a)])

    def frobenius(self, a: int, j: int) -> int:
        """``a ** (q ** j)``; j is taken mod m."""
        self._check(a)
        if a == 0:
            return 0
        N = self.order - 1
        return int(self._exp[(int(self._log[a]) * pow(self.q, j % self.m, N)) % N]) if N > 1 else a

    # -- coordinate isomorphism --------------------------------------------

    def phi(self, a: int) -> np.ndarray:
        """Coordinate vector of ``a`` in the basis 1, lambda, ..., lambda^(m-1)."""
        self._check(a)
        return np.array(self.coords(a), dtype=np.int64)

    def phi_inv(self, v: Sequence[int]) -> int:
        v = [int(x) for x in v]
        if any(not 0 <= x < self.q for x in v):
            raise ValueError("coordinates must lie in F_q")
        return self.from_coords(v)

    def elem(self, a: int | Sequence[int]) -> ExtElem:
        if not isinstance(a, (int, np.integer)):
            a = self.phi_inv(a)
        self._check(int(a))
        return ExtElem(self, int(a))

    def elements(self):
        return (ExtElem(self, a) for a in range(self.order))

    @property
    def zero(self) -> ExtElem:
        return ExtElem(self, 0)

    @property
    def one(self) -> ExtElem:
        return ExtElem(self, 1)

    @property
    def root(self) -> ExtElem:
        return ExtElem(self, self.lam)


@dataclass(frozen=True, eq=False)
class ExtElem:
    """An element of a :class:`FieldCtx` with arithmetic operators."""

    ctx: FieldCtx = field(repr=False, compare=False)
    value: int

    def _other(self, other: ExtElem) -> int:
        if not isinstance(other, ExtElem):
            raise TypeError(f"cannot combine ExtElem with {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ValueError("operands belong to different field contexts")
        return other.value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtElem):
            return NotImplemented
        return self.ctx is other.ctx and self.value == other.value

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.value))

    def __add__(self, other: ExtElem) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.add(self.value, self._other(other)))

    def __sub__(self, other: ExtElem) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other: ExtElem) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    def __truediv__(self, other: ExtElem) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, n: int) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.pow(self.value, n))

    def inverse(self) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.inv(self.value))

    def frobenius(self, j: int = 1) -> ExtElem:
        return ExtElem(self.ctx, self.ctx.frobenius(self.value, j))

    @property
    def coords(self) -> np.ndarray:
        return self.ctx.phi(self.value)

    def __bool__(self) -> bool:
        return self.value != 0


def make_field(p: int, e: int = 1, m: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build F_{q^m} over F_q, q = p^e.

    Without ``modulus`` the first monic irreducible of degree ``m`` in the
    order of :func:`~pspread.ffcore.poly.monic_polys` is used, which is
    deterministic across runs.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    base = base_field(p**e) if e >= 1 else BaseField(p, e)
    return FieldCtx(base, m, modulus)


@functools.lru_cache(maxsize=None)
def _cached_ctx(q: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(base_field(q), len(modulus) - 1, modulus)


def field_for(q: int, modulus: Sequence[int]) -> FieldCtx:
    """Shared context for F_q[x]/(modulus); contexts are immutable so caching is safe."""
    return _cached_ctx(q, tuple(int(c) for c in modulus))
