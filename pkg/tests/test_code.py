import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pspread.code import (
    beutelspacher_lower_bound,
    build_code,
    cardinality,
    decode_index,
    encode,
    enumerate_codewords,
    is_maximal_exhaustive,
    is_maximal_partial_spread,
    is_partial_spread,
    is_spread,
    membership,
    min_distance,
    min_distance_exhaustive,
    partial_spread_upper_bound,
    singleton_bound,
    vector_cover,
)
from pspread.ffcore import algebra_element, companion_matrix, rank, rref
from pspread.subspace import distance, orthogonal_complement, span

SWEEP = [(2, 2, 4), (2, 2, 5), (2, 2, 6), (2, 2, 7), (3, 2, 5), (2, 3, 7), (2, 3, 8)]


def test_example_parameters(example_code):
    c = example_code
    assert (c.h, c.r, c.max_dim, c.min_dist) == (3, 1, 2, 4)
    assert c.P.tolist() == [[0, 1], [1, 1]]
    assert c.PP.tolist() == [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    assert cardinality(c) == len(c) == 41


def test_build_rejects():
    with pytest.raises(ValueError, match="n/2"):
        build_code(2, 3, 5)
    with pytest.raises(ValueError):
        build_code(2, 2, 7, [1, 0, 1], [1, 1, 0, 1])  # x^2+1 = (x+1)^2
    with pytest.raises(ValueError):
        build_code(2, 2, 7, [1, 1, 1], [1, 1, 1])  # p' has degree k, needs k+r
    with pytest.raises(ValueError):
        build_code(2, 0, 4)


def test_auto_polynomials():
    c = build_code(2, 2, 7)
    assert list(c.p) == [1, 1, 1] and list(c.pp) == [1, 1, 0, 1]
    s = build_code(2, 2, 4)
    assert list(s.pp) == list(s.p)


@pytest.mark.parametrize("q,k,n", SWEEP)
def test_cardinality_and_bounds(q, k, n):
    c = build_code(q, k, n)
    subs = c.subspaces
    assert len(set(subs)) == cardinality(c)
    assert beutelspacher_lower_bound(q, k, n) == cardinality(c)
    assert cardinality(c) <= partial_spread_upper_bound(q, k, n) <= singleton_bound(q, k, n, 2 * k)
    assert is_partial_spread(subs)
    for cw in c.codewords:
        R = rref(q, cw.generator)
        assert R.rank == k and (R.matrix == cw.generator).all()


def test_bound_values():
    assert singleton_bound(2, 2, 7, 4) == 63
    assert partial_spread_upper_bound(2, 2, 7) == 42
    assert beutelspacher_lower_bound(2, 2, 7) == 41
    assert cardinality(build_code(2, 2, 5)) == 9
    assert cardinality(build_code(2, 2, 4)) == 5


def test_min_distance(example_code):
    assert min_distance(example_code.subspaces) == (4, 820)
    assert min_distance_exhaustive(example_code) == 4
    assert min_distance_exhaustive(build_code(2, 3, 8)) == 6
    with pytest.raises(ValueError):
        min_distance_exhaustive(example_code, limit=10)


def test_generator_templates(example_code):
    c = example_code
    special = encode(c, 0)
    assert special.kind == "special"
    assert special.generator.tolist() == [[0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 1]]
    for cw in c.codewords[1:]:
        G = cw.generator
        i = cw.block
        cols = c.block_cols(i)
        assert (G[:, cols] == np.eye(2, dtype=np.int64)).all()
        assert not G[:, : cols.start].any()
        for j in range(i + 1, c.h):
            Aj = G[:, c.block_cols(j)]
            _coeffs(c, Aj)


def _coeffs(c, A):
    # coefficients of A in the basis I, P, ... found by brute force

    for coeffs in itertools.product(range(c.q), repeat=c.k):
        if (algebra_element(c.q, c.P, coeffs) == A).all():
            return coeffs
    raise AssertionError("not an algebra element")


def test_index_roundtrip(example_code):
    for i in range(41):
        cw = encode(example_code, i)
        assert cw.index == i
        assert decode_index(example_code, cw.generator) == i
        assert membership(example_code, cw.subspace) == i
    assert decode_index(example_code, encode(example_code, 17).generator) == 17
    with pytest.raises(IndexError):
        encode(example_code, 41)
    with pytest.raises(IndexError):
        encode(example_code, -1)


def test_index_order(example_code):
    idx = [cw.index for cw in enumerate_codewords(example_code)]
    assert idx == list(range(41))
    blocks = [cw.block for cw in example_code.codewords[1:]]
    assert blocks == sorted(blocks)
    assert blocks.count(1) == 32 and blocks.count(2) == 8


@pytest.mark.parametrize("q,k,n", [(3, 2, 5), (2, 3, 8), (2, 2, 6)])
def test_index_roundtrip_sweep(q, k, n):
    c = build_code(q, k, n)
    for cw in c.codewords:
        assert decode_index(c, cw.generator) == cw.index


def test_membership_negative(example_code):
    assert membership(example_code, span(2, [[1, 0, 0, 0, 0, 0, 0]])) is None
    S = span(2, [[1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0]])
    assert membership(example_code, S) is None
    # right template, but the second block is not in F_2[P]
    S = span(2, [[1, 0, 1, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0]])
    assert membership(example_code, S) is None
    with pytest.raises(ValueError):
        decode_index(example_code, S.basis)


@given(st.lists(st.integers(0, 1), min_size=14, max_size=14))
def test_membership_agrees_with_enumeration(example_code, bits):
    S = span(2, np.array(bits).reshape(2, 7), 7)
    found = membership(example_code, S)
    expected = example_code.subspaces.index(S) if S in example_code.subspaces else None
    assert found == expected


def test_spread_partition(spread_code):
    subs = spread_code.subspaces
    cover = vector_cover(subs)
    assert len(cover) == 15 and set(cover.values()) == {1}
    assert is_spread(subs)
    assert not is_spread(build_code(2, 2, 5).subspaces)
    assert is_spread(build_code(2, 2, 6).subspaces)


def test_partial_spread_checks(example_code):
    V = example_code.subspaces[3]
    assert is_partial_spread([V, V])
    U = span(2, [[1, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0]])
    W = span(2, [[1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0]])
    assert not is_partial_spread([U, W])
    with pytest.raises(ValueError):
        is_partial_spread([U, span(2, [[1, 0, 0, 0, 0, 0, 0]])])


def test_maximality(example_code, spread_code):
    assert is_maximal_exhaustive(build_code(2, 2, 5))
    assert is_maximal_exhaustive(spread_code)
    assert not is_maximal_partial_spread(example_code.subspaces[1:])
    assert is_maximal_partial_spread(example_code.subspaces)


def test_complement_preserves_distance():
    c = build_code(2, 2, 5)
    subs = c.subspaces
    duals = [orthogonal_complement(V) for V in subs]
    assert all(D.dim == 3 for D in duals)
    for a in range(len(subs)):
        for b in range(len(subs)):
            assert distance(duals[a], duals[b]) == distance(subs[a], subs[b])
