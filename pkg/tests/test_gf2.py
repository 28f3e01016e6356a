from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rank_lists
from racg_lcs import gf2
from racg_lcs.complexes import Complex1Skeleton
from racg_lcs.lcs import magnus_image


def test_vectorize_two_words():
    mat = gf2.vectorize([{(1, 2)}, {(2, 1)}])
    assert mat.basis == ((1, 2), (2, 1))
    assert mat.to_lists() == [[1, 0], [0, 1]]
    assert gf2.rank(mat) == 2


def test_vectorize_empty_set():
    mat = gf2.vectorize([set()])
    assert mat.shape == (1, 0) and gf2.rank(mat) == 0


def test_vectorize_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        gf2.vectorize([{(1,)}, {(1, 2)}])


def test_vectorize_with_basis():
    mat = gf2.vectorize([{(2,)}], basis=[(1,), (2,), (3,)])
    assert mat.to_lists() == [[0, 1, 0]]
    with pytest.raises(ValueError):
        gf2.vectorize([{(4,)}], basis=[(1,)])


def test_matrix_validation():
    with pytest.raises(ValueError):
        gf2.Gf2Matrix(((2,), (1,)), ())
    with pytest.raises(ValueError):
        gf2.Gf2Matrix(((1,),), (0b10,))


def test_rank_examples():
    assert gf2.rank(gf2.vectorize([set(), set()])) == 0
    singles = gf2.vectorize([{(i,)} for i in range(1, 6)])
    assert gf2.rank(singles) == 5
    assert gf2.rank(gf2.vectorize([{(1,), (2,)}, {(1,), (2,)}])) == 1


def test_in_span_examples():
    mat = gf2.vectorize([{(1,), (2,)}, {(2,), (3,)}, {(4,)}])
    assert gf2.in_span(mat, mat.vector([(1,), (3,)]))
    assert gf2.in_span(mat, 0)
    partial = gf2.vectorize([{(1,)}, {(2,)}], basis=[(1,), (2,), (3,)])
    assert not gf2.in_span(partial, partial.vector([(3,)]))
    with pytest.raises(ValueError):
        gf2.in_span(partial, 1 << 5)


def test_degree_four_images_on_pair_complex():
    K = Complex1Skeleton(4, ((1, 4), (3, 4)))
    images = [magnus_image(K, c, 4) for c in [(2, 4, 3, 1), (2, 4, 1, 3), (3, 1, 2, 1)]]
    mat = gf2.vectorize(images)
    assert gf2.rank(mat) == rank_lists(mat.to_lists())


def test_same_span_aligns_bases():
    a = gf2.vectorize([{(1, 2), (2, 1)}])
    b = gf2.vectorize([{(1, 2), (2, 1)}, set()], basis=[(1, 2), (1, 3), (2, 1)])
    assert gf2.same_span(a, b)
    assert not gf2.same_span(a, gf2.vectorize([{(1, 2)}]))


matrices = st.integers(1, 12).flatmap(
    lambda cols: st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), max_size=10))


@settings(max_examples=200)
@given(matrices)
def test_rank_dense_matches_oracle(rows):
    assert gf2.rank_dense(rows) == rank_lists(rows)
    if rows:
        assert gf2.rank_dense(rows) <= min(len(rows), len(rows[0]))


@settings(max_examples=200)
@given(matrices, st.data())
def test_rank_invariant_under_row_addition(rows, data):
    if len(rows) < 2:
        return
    i = data.draw(st.integers(0, len(rows) - 1))
    j = data.draw(st.integers(0, len(rows) - 1).filter(lambda x: x != i))
    changed = [list(r) for r in rows]
    changed[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[j])]
    assert gf2.rank_dense(changed) == gf2.rank_dense(rows)


@settings(max_examples=200)
@given(st.lists(st.sets(st.integers(1, 8), max_size=8), min_size=1, max_size=8),
       st.sets(st.integers(1, 8)), st.sets(st.integers(1, 8)))
def test_in_span_monotone(sets, extra, target):
    basis = [(i,) for i in range(1, 9)]
    small = gf2.vectorize([{(i,) for i in s} for s in sets], basis=basis)
    big = gf2.vectorize([{(i,) for i in s} for s in sets] + [{(i,) for i in extra}], basis=basis)
    v = small.vector([(i,) for i in target])
    if gf2.in_span(small, v):
        assert gf2.in_span(big, v)
    # membership agrees with a rank test
    with_v = gf2.vectorize([{(i,) for i in s} for s in sets] + [{(i,) for i in target}],
                           basis=basis)
    assert gf2.in_span(small, v) == (gf2.rank(with_v) == gf2.rank(small))
