from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import complex_and_words, complexes, monomial_or_zero, mu_by_subsequences
from racg_lcs.acceptance import normal_forms_up_to
from racg_lcs.complexes import Complex1Skeleton
from racg_lcs.magnus import (Certificate, TruncatedSeries, TruncationError, algebra, generator,
                             graded_component, lie_bracket, mu, normalize_monomial, not_in_gamma,
                             render_series, series_add, series_inverse, series_mul,
                             series_to_json)
from racg_lcs.words import build_nested, multiply, nested

D2, D3 = Complex1Skeleton(2), Complex1Skeleton(3)
E12 = Complex1Skeleton(2, ((1, 2),))


def S(K, terms, top=6):
    return TruncatedSeries.from_monomials(K, terms, top)


def test_normalize_monomial_examples():
    assert normalize_monomial(D2, (1, 1)) is None
    assert normalize_monomial(E12, (2, 1, 2)) is None
    assert normalize_monomial(E12, (2, 1)) == (1, 2)
    with pytest.raises(ValueError):
        normalize_monomial(D2, (0,))


def test_series_validation():
    with pytest.raises(ValueError):
        TruncatedSeries(2, (frozenset(), frozenset({(1, 2, 3)})))
    with pytest.raises(ValueError):
        TruncatedSeries(1, (frozenset(), frozenset(), frozenset()))
    with pytest.raises(ValueError):
        series_add(TruncatedSeries.one(2), TruncatedSeries.one(3))


def test_series_add_examples():
    a = S(D3, [(), (1, 2), (3,)])
    assert series_add(a, a).is_zero()
    assert series_add(a, TruncatedSeries.zero(6)) == a
    assert series_add(S(D2, [(), (1,)]), S(D2, [(), (2,)])) == S(D2, [(1,), (2,)])


def test_series_mul_examples():
    one_plus_v1 = S(D2, [(), (1,)])
    for K in (D2, E12):
        assert series_mul(K, S(K, [(), (1,)]), S(K, [(), (1,)])) == TruncatedSeries.one(6)
    assert series_mul(D2, one_plus_v1, S(D2, [(), (2,)])) == S(D2, [(), (1,), (2,), (1, 2)])
    lhs = series_mul(D2, S(D2, [(1, 2), (2, 1)]), S(D2, [(1,), (2,)]))
    assert lhs == S(D2, [(1, 2, 1), (2, 1, 2)])


def test_series_mul_truncates():
    assert series_mul(D2, S(D2, [(1, 2)], 3), S(D2, [(1, 2)], 3)).is_zero()


def test_series_inverse_examples():
    assert series_inverse(D2, S(D2, [(), (1,)])) == S(D2, [(), (1,)])
    assert series_inverse(D2, TruncatedSeries.one(6)) == TruncatedSeries.one(6)
    c = mu(D2, build_nested(D2, (1, 2)), 6)
    assert series_mul(D2, series_inverse(D2, c), c) == TruncatedSeries.one(6)
    with pytest.raises(ValueError):
        series_inverse(D2, S(D2, [(1,)]))


def test_mu_examples():
    for i in (1, 2, 3):
        assert mu(D3, (i,)) == S(D3, [(), (i,)])
    i, j = 1, 2
    expected = series_add(TruncatedSeries.one(6),
                          series_mul(D2, S(D2, [(i, j), (j, i)]),
                                     S(D2, [(), (i,), (j,), (i, j)])))
    assert mu(D2, build_nested(D2, (i, j))) == expected


def test_graded_component_examples():
    assert graded_component(mu(D3, (2,)), 1) == {(2,)}
    with pytest.raises(TruncationError):
        graded_component(mu(D3, (2,), 3), 4)
    with pytest.raises(ValueError):
        graded_component(mu(D3, (2,), 3), -1)


def test_lie_bracket_examples():
    a = S(D3, [(1, 2), (3,)])
    assert lie_bracket(D3, a, a).is_zero()
    assert lie_bracket(E12, generator(E12, 1, 4), generator(E12, 2, 4)).is_zero()
    v1, v2 = generator(D2, 1, 4), generator(D2, 2, 4)
    assert lie_bracket(D2, lie_bracket(D2, v2, v1), v1).is_zero()


def test_not_in_gamma_examples():
    K = Complex1Skeleton(4, ((1, 4), (3, 4)))
    w = nested(K, build_nested(K, (2, 4)), build_nested(K, (1, 3)))
    assert not_in_gamma(K, w, 4) is Certificate.CERTIFIED_NOT_IN
    assert not_in_gamma(D3, (2,), 1) is Certificate.CERTIFIED_NOT_IN
    assert not_in_gamma(D2, build_nested(D2, (2, 1, 1, 1)), 4) is Certificate.UNKNOWN
    with pytest.raises(TruncationError):
        not_in_gamma(D3, (2,), 3, max_degree=2)
    with pytest.raises(ValueError):
        not_in_gamma(D3, (2,), 0)


def test_rendering():
    s = mu(D2, (1, 2), 3)
    assert render_series(s) == "1 + v1 + v2 + v1*v2"
    assert render_series(TruncatedSeries.zero(2)) == "0"
    assert series_to_json(s) == {"0": [[]], "1": [[1], [2]], "2": [[1, 2]]}


@settings(max_examples=300, deadline=None)
@given(complex_and_words(max_len=8))
def test_normalize_monomial_matches_class_search(case):
    K, w = case
    assert normalize_monomial(K, w) == monomial_or_zero(K, w)


@settings(max_examples=300, deadline=None)
@given(complex_and_words(count=2, max_len=5))
def test_product_is_concatenation(case):
    K, x, y = case
    x, y = normalize_monomial(K, x), normalize_monomial(K, y)
    if x is None or y is None:
        return
    assert algebra(K).product(x, y) == monomial_or_zero(K, x + y)


@settings(max_examples=150, deadline=None)
@given(complex_and_words(max_len=8))
def test_mu_is_sum_over_subsequences(case):
    K, w = case
    assert list(mu(K, w, 5).components) == mu_by_subsequences(K, w, 5)


@settings(max_examples=150, deadline=None)
@given(complex_and_words(count=2, max_len=8))
def test_mu_homomorphism(case):
    K, u, v = case
    assert mu(K, multiply(K, u, v)) == series_mul(K, mu(K, u), mu(K, v))


@settings(max_examples=100, deadline=None)
@given(complexes(max_m=4), st.data())
def test_jacobi_and_alternating(K, data):
    words = st.lists(st.integers(1, K.m), max_size=3)
    a, b, c = (S(K, data.draw(st.lists(words, max_size=3))) for _ in range(3))
    jac = series_add(series_add(lie_bracket(K, lie_bracket(K, a, b), c),
                                lie_bracket(K, lie_bracket(K, b, c), a)),
                     lie_bracket(K, lie_bracket(K, c, a), b))
    assert jac.is_zero()
    assert lie_bracket(K, a, a).is_zero()


@settings(max_examples=100, deadline=None)
@given(complex_and_words(max_len=8))
def test_square_shift(case):
    K, w = case
    k = mu(K, w).weight()
    if k is None or 2 * k - 1 > 6:
        return
    sq = mu(K, w + w)
    assert all(not sq.components[d] for d in range(1, 2 * k))


@pytest.mark.parametrize("K", [Complex1Skeleton(4), Complex1Skeleton(4, ((1, 4), (3, 4))),
                               Complex1Skeleton(4, ((1, 3), (2, 4))), Complex1Skeleton(3)])
def test_injective_on_short_normal_forms(K):
    words = normal_forms_up_to(K, 5)
    images = {mu(K, w, 5) for w in words}
    assert len(images) == len(words)
    for w in words:
        assert w in graded_component(mu(K, w, 5), len(w))


def test_vanishing_below_weight_and_additivity():
    for K in [Complex1Skeleton(4), Complex1Skeleton(4, ((1, 2), (2, 3), (3, 4)))]:
        by_len = {}
        for k in range(1, 6):
            for c in itertools.product(K.vertices, repeat=k):
                word = nested(K, *[(i,) for i in c])
                by_len.setdefault(k, []).append(word)
                s = mu(K, word, k)
                assert all(not s.components[d] for d in range(1, k))
        for k in (2, 3, 4):
            ws = by_len[k]
            for c, d in zip(ws[::7], ws[3::11]):
                lhs = graded_component(mu(K, multiply(K, c, d), k), k)
                assert lhs == graded_component(mu(K, c, k), k) ^ graded_component(mu(K, d, k), k)


def test_swapped_leading_pair_has_same_degree4_image():
    # (k,i,i,i) and (i,k,i,i) agree as Lie elements over GF(2)
    for K in [Complex1Skeleton(4), Complex1Skeleton(4, ((1, 2), (3, 4)))]:
        for a, b in itertools.permutations(K.vertices, 2):
            for rest in itertools.product(K.vertices, repeat=2):
                x = graded_component(mu(K, build_nested(K, (a, b, *rest)), 4), 4)
                y = graded_component(mu(K, build_nested(K, (b, a, *rest)), 4), 4)
                assert x == y
