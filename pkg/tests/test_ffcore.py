import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pspread.ffcore import (
    BaseField,
    ExtElem,
    algebra_element,
    algebra_to_ext,
    base_field,
    companion_matrix,
    eval_poly_matrix,
    ext_to_algebra,
    identity,
    is_algebra_element,
    is_invertible,
    is_irreducible,
    lift_last_rows,
    make_field,
    matmul,
    matpow,
    nullspace,
    prime_power,
    rank,
    rref,
    smallest_irreducible,
)

SMALL_FIELDS = [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 1, 4), (5, 1, 2), (2, 2, 2), (3, 1, 3)]


def tables(ctx):
    els = range(ctx.order)
    add = np.array([[ctx.add(a, b) for b in els] for a in els])
    mul = np.array([[ctx.mul(a, b) for b in els] for a in els])
    return add, mul


# -- base fields ------------------------------------------------------------

def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (0, 1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_f4_tables():
    F = base_field(4)
    # elements 0, 1, x, x+1 with x^2 = x + 1
    assert F.mul[2, 2] == 3
    assert F.mul[2, 3] == 1
    assert F.add[2, 3] == 1
    assert list(F.inv[1:]) == [1, 3, 2]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_base_field_axioms(q):
    F = base_field(q)
    a, b, c = np.meshgrid(range(q), range(q), range(q), indexing="ij")
    assert (F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]).all()
    assert (F.mul[F.mul[a, b], c] == F.mul[a, F.mul[b, c]]).all()
    assert (F.add == F.add.T).all() and (F.mul == F.mul.T).all()
    nz = np.arange(1, q)
    assert (F.mul[nz, F.inv[nz]] == 1).all()
    assert (F.add[np.arange(q), F.neg] == 0).all()


def test_tables_read_only():
    F = base_field(3)
    with pytest.raises(ValueError):
        F.mul[1, 1] = 0


# -- extension fields -------------------------------------------------------

@pytest.mark.parametrize("p,e,m", SMALL_FIELDS)
def test_extension_axioms(p, e, m):
    ctx = make_field(p, e, m)
    add, mul = tables(ctx)
    N = ctx.order
    a, b, c = np.meshgrid(range(N), range(N), range(N), indexing="ij")
    assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
    assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
    assert (add[add[a, b], c] == add[a, add[b, c]]).all()
    assert (mul == mul.T).all()
    for x in range(1, N):
        assert ctx.mul(x, ctx.inv(x)) == 1
    # the multiplicative group is cyclic and generated by ctx.generator
    assert len({ctx.pow(ctx.generator, i) for i in range(N - 1)}) == N - 1


def test_extension_zero_inverse():
    ctx = make_field(2, 1, 3)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        make_field(2, 1, 2, modulus=[1, 0, 1])  # (x+1)^2


def test_auto_modulus_is_smallest():
    assert list(make_field(2, 1, 2).modulus) == [1, 1, 1]
    assert list(make_field(2, 1, 3).modulus) == [1, 1, 0, 1]
    assert list(smallest_irreducible(base_field(3), 2)) == [1, 0, 1]


@pytest.mark.parametrize("p,e,m", SMALL_FIELDS)
def test_frobenius(p, e, m):
    ctx = make_field(p, e, m)
    for a in range(ctx.order):
        assert ctx.frobenius(a, 1) == ctx.pow(a, ctx.q)
        assert ctx.frobenius(a, m) == a
        assert ctx.frobenius(ctx.frobenius(a, 1), -1) == a


def test_ext_elem_operators():
    F8 = make_field(2, 1, 3)
    x = F8.root
    assert (x ** 3 + x + F8.one) == F8.zero
    assert x * x.inverse() == F8.one
    assert (x / x) == F8.one
    assert -x == x
    assert x ** -1 == x.inverse()
    with pytest.raises(TypeError):
        x + 1
    with pytest.raises(ValueError):
        x + make_field(2, 1, 2).root


@given(st.integers(0, 1023), st.integers(0, 1023), st.integers(0, 1023))
def test_f1024_ring_laws(a, b, c):
    ctx = make_field(2, 1, 10)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    if a:
        assert ctx.mul(a, ctx.div(b, a)) == b


# -- phi and the companion algebra -----------------------------------------

@pytest.mark.parametrize("modulus,q", [([1, 1, 1], 2), ([1, 1, 0, 1], 2), ([2, 2, 1], 3), ([1, 1, 0, 0, 1], 2)])
def test_companion_annihilated(modulus, q):
    P = companion_matrix(modulus, q)
    k = len(modulus) - 1
    assert P.shape == (k, k)
    assert not eval_poly_matrix(base_field(q), modulus, P).any()
    assert (P[np.arange(k - 1), np.arange(1, k)] == 1).all()


def test_companion_requires_irreducible():
    with pytest.raises(ValueError):
        companion_matrix([1, 0, 1], 2)


def test_companion_f4_example():
    P = companion_matrix([1, 1, 1], 2)
    assert P.tolist() == [[0, 1], [1, 1]]
    assert (matmul(2, P, P) == (P + identity(2)) % 2).all()


@pytest.mark.parametrize("p,e,m", SMALL_FIELDS)
def test_phi_isomorphism(p, e, m):
    ctx = make_field(p, e, m)
    P = companion_matrix(ctx.modulus, ctx.base)
    for a in range(ctx.order):
        v = ctx.phi(a)
        assert ctx.phi_inv(v) == a
        assert (matmul(ctx.base, v[None, :], P)[0] == ctx.phi(ctx.mul(ctx.lam, a))).all()
        A = ext_to_algebra(ctx, a)
        assert is_algebra_element(ctx.base, P, A)
        assert algebra_to_ext(ctx, A) == a


@pytest.mark.parametrize("p,e,m", [(2, 1, 2), (2, 1, 3), (3, 1, 2)])
def test_algebra_homomorphism(p, e, m):
    ctx = make_field(p, e, m)
    F = ctx.base
    mats = [ext_to_algebra(ctx, a) for a in range(ctx.order)]
    for a, b in itertools.product(range(ctx.order), repeat=2):
        assert (matmul(F, mats[a], mats[b]) == mats[ctx.mul(a, b)]).all()
        assert (F.add[mats[a], mats[b]] == mats[ctx.add(a, b)]).all()
    assert all(is_invertible(F, M) for M in mats[1:])


def test_algebra_element_polynomial():
    P = companion_matrix([1, 1, 0, 1], 2)
    A = algebra_element(2, P, [1, 0, 1])
    assert (A == (identity(3) + matpow(2, P, 2)) % 2).all()
    assert not is_algebra_element(2, P, np.array([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))


def test_lift_last_rows_roundtrip():
    ctx = make_field(2, 1, 3)
    for a in range(8):
        A = ext_to_algebra(ctx, a)
        assert (lift_last_rows(ctx, A[1:], 1) == A).all()


def test_lift_last_rows_rejects():
    ctx = make_field(2, 1, 3)
    with pytest.raises(ValueError):
        lift_last_rows(ctx, np.array([[1, 0, 0], [1, 0, 0]]), 1)


# -- linear algebra ---------------------------------------------------------

def mats(q, max_rows=5, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c))))


@pytest.mark.parametrize("q", [2, 3, 4])
@given(data=st.data())
def test_rref_properties(q, data):
    M = data.draw(mats(q))
    R = rref(q, M)
    assert (rref(q, R.matrix).matrix == R.matrix).all()
    assert R.rank == rank(q, M.T)
    for i, c in enumerate(R.pivots):
        col = R.matrix[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert not R.matrix[R.rank:].any()
    N = nullspace(q, M)
    assert N.shape[0] == M.shape[1] - R.rank
    if N.size:
        assert not matmul(q, M, N.T).any()
