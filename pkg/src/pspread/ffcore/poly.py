"""Dense univariate polynomials over a base field F_q.

Polynomials are coefficient lists ``[c_0, c_1, ..., c_d]`` (constant term
first) of integers in ``0..q-1``; arithmetic goes through the lookup tables
of a :class:`~pspread.ffcore.fields.BaseField`.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:
    from .fields import BaseField


def trim(a: Sequence[int]) -> list[int]:
    """Drop trailing zero coefficients; the zero polynomial is ``[]``."""
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(a: Sequence[int]) -> int:
    return len(trim(a)) - 1


def is_monic(a: Sequence[int]) -> bool:
    a = trim(a)
    return bool(a) and a[-1] == 1


def poly_add(F: BaseField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(int(F.add[x, y]) for x, y in zip(a, b))


def poly_sub(F: BaseField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_add(F, a, [int(F.neg[y]) for y in b])


def poly_mul(F: BaseField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = int(F.add[out[i + j], F.mul[x, y]])
    return trim(out)


def poly_divmod(F: BaseField, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [0] * (len(rem) - db)
    lead_inv = int(F.inv[b[-1]])
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        coef = int(F.mul[rem[-1], lead_inv])
        quot[shift] = coef
        for i, y in enumerate(b):
            rem[i + shift] = int(F.sub[rem[i + shift], F.mul[coef, y]])
        rem = trim(rem)
    return trim(quot), rem


def poly_mod(F: BaseField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_divmod(F, a, b)[1]


def monic_polys(q: int, d: int) -> Iterator[list[int]]:
    """All monic polynomials of degree ``d``, ordered by the integer ``sum c_i q^i``.

    That is lexicographic on ``(c_{d-1}, ..., c_0)``, so x^3+x+1 precedes
    x^3+x^2+1 over F_2.
    """
    for high_first in itertools.product(range(q), repeat=d):
        yield list(reversed(high_first)) + [1]


def is_irreducible_over(F: BaseField, f: Sequence[int]) -> bool:
    """Exhaustive divisor search up to degree ``deg f // 2``."""
    f = list(f)
    if not is_monic(f) or len(f) != len(trim(f)):
        raise ValueError(f"polynomial {f} is not monic")
    d = len(f) - 1
    if d < 1:
        raise ValueError("irreducibility needs degree >= 1")
    for dd in range(1, d // 2 + 1):
        for g in monic_polys(F.q, dd):
            if not poly_mod(F, f, g):
                return False
    return True


def smallest_irreducible(F: BaseField, d: int) -> list[int]:
    for f in monic_polys(F.q, d):
        if is_irreducible_over(F, f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{F.q}")  # pragma: no cover


def eval_poly_matrix(F: BaseField, f: Sequence[int], P):
    """Evaluate ``f`` at the square matrix ``P`` by Horner's rule."""
    import numpy as np

    from .matrix import matadd, matmul

    size = P.shape[0]
    acc = np.zeros((size, size), dtype=np.int64)
    eye = np.eye(size, dtype=np.int64)
    for c in reversed(list(f)):
        acc = matadd(F, matmul(F, acc, P), (c * eye) if c else np.zeros_like(eye))
    return acc
