from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from oracles import complexes, rank_lists
from racg_lcs.complexes import (Complex1Skeleton, ComplexError, MAX_SUBSET_ENUMERATION,
                                all_graphs, betti_gf2, complex_to_dict, connected_components,
                                full_subcomplex, parse_complex, reduced_betti0,
                                rk_homology_gf2, simplices)


def test_parse_two_edges():
    K = parse_complex('{"m":4,"edges":[[1,2],[3,4]]}')
    assert K.m == 4 and K.edges == ((1, 2), (3, 4))


def test_parse_discrete():
    K = parse_complex('{"m":3,"edges":[]}')
    assert K.m == 3 and K.edges == ()
    assert K.flag_mode


def test_parse_canonicalizes_edge_order():
    K = parse_complex('{"m":3,"edges":[[3,1],[2,1]]}')
    assert K.edges == ((1, 2), (1, 3))


@pytest.mark.parametrize("text", [
    '{"m":2,"edges":[[2,2]]}',
    '{"m":2,"edges":[[1,3]]}',
    '{"m":2,"edges":[[1,2],[2,1]]}',
    '{"m":0}',
    '{"m":true}',
    '{"edges":[]}',
    '{"m":3,"edges":[[1,2,3]]}',
    '{"m":3,"edges":[[1,2]],"flag":"yes"}',
    '{"m":3,"bogus":1}',
    '[1,2]',
    '{"m":3,',
    '{"m":3,"edges":[[1,2]],"facets":[[1,2]],"flag":true}',
    '{"m":3,"edges":[[1,2]],"facets":[[1,2,3]],"flag":false}',
    '{"m":3,"edges":[[1,2],[2,3]],"facets":[[1,2]],"flag":false}',
])
def test_parse_rejects(text):
    with pytest.raises(ComplexError):
        parse_complex(text)


def test_facets_default_flag_false_and_roundtrip():
    K = parse_complex('{"m":3,"edges":[[1,2],[1,3],[2,3]],"facets":[[1,2],[2,3],[1,3]]}')
    assert not K.flag_mode and K.facets == ((1, 2), (1, 3), (2, 3))
    assert parse_complex(__import__("json").dumps(complex_to_dict(K))) == K


def test_full_subcomplex_examples():
    K = Complex1Skeleton(4, ((1, 2), (3, 4)))
    sub, labels = full_subcomplex(K, [1, 2, 3])
    assert sub.m == 3 and sub.edges == ((1, 2),) and labels == (1, 2, 3)
    empty, labels = full_subcomplex(K, [])
    assert empty.m == 0 and labels == ()
    path = Complex1Skeleton(4, ((1, 2), (2, 3), (3, 4)))
    sub, labels = full_subcomplex(path, [1, 4])
    assert sub.m == 2 and sub.edges == () and labels == (1, 4)
    with pytest.raises(ComplexError):
        full_subcomplex(K, [5])


def test_full_subcomplex_relabels():
    K = Complex1Skeleton(5, ((2, 5), (4, 5)))
    sub, labels = full_subcomplex(K, [2, 4, 5])
    assert labels == (2, 4, 5) and sub.edges == ((1, 3), (2, 3))


def test_components_examples():
    assert connected_components(Complex1Skeleton(3)) == [[1], [2], [3]]
    assert connected_components(Complex1Skeleton(4, ((1, 2), (3, 4)))) == [[1, 2], [3, 4]]
    complete = Complex1Skeleton(4, tuple(itertools.combinations(range(1, 5), 2)))
    assert connected_components(complete) == [[1, 2, 3, 4]]


def test_reduced_betti0_examples():
    assert reduced_betti0(Complex1Skeleton(3)) == 2
    assert reduced_betti0(Complex1Skeleton(3, ((1, 2), (2, 3)))) == 0
    assert reduced_betti0(Complex1Skeleton(4, ((1, 2), (3, 4)))) == 1
    assert reduced_betti0(Complex1Skeleton(0)) == 0


def test_betti_examples():
    circle = Complex1Skeleton(3, ((1, 2), (1, 3), (2, 3)),
                              facets=((1, 2), (1, 3), (2, 3)), flag_mode=False)
    assert betti_gf2(circle, 1) == 1
    for m in range(1, 6):
        assert betti_gf2(Complex1Skeleton(m), 0) == m - 1
    filled = Complex1Skeleton(3, ((1, 2), (1, 3), (2, 3)))
    assert betti_gf2(filled, 1) == 0 and betti_gf2(filled, 0) == 0
    assert betti_gf2(Complex1Skeleton(0), -1) == 1
    with pytest.raises(ValueError):
        betti_gf2(filled, -2)


def test_flag_off_without_facets_is_one_dimensional():
    triangle = Complex1Skeleton(3, ((1, 2), (1, 3), (2, 3)), flag_mode=False)
    assert betti_gf2(triangle, 1) == 1


def test_octahedron_sphere():
    # flag complex of the octahedron is a 2-sphere
    edges = [(a, b) for a, b in itertools.combinations(range(1, 7), 2)
             if (a, b) not in {(1, 2), (3, 4), (5, 6)}]
    K = Complex1Skeleton(6, tuple(edges))
    assert [betti_gf2(K, k) for k in range(-1, 4)] == [0, 0, 0, 1, 0]


def test_rk_homology_examples():
    assert rk_homology_gf2(Complex1Skeleton(2), 1) == 1
    assert rk_homology_gf2(Complex1Skeleton(3), 1) == 5
    for m in range(1, 6):
        complete = Complex1Skeleton(m, tuple(itertools.combinations(range(1, m + 1), 2)))
        assert rk_homology_gf2(complete, 1) == 0
    # only the empty set contributes reduced H_{-1}
    assert rk_homology_gf2(Complex1Skeleton(3), 0) == 1
    with pytest.raises(ComplexError):
        rk_homology_gf2(Complex1Skeleton(MAX_SUBSET_ENUMERATION + 1), 1)
    with pytest.raises(ValueError):
        rk_homology_gf2(Complex1Skeleton(2), -1)


def test_all_graphs_counts():
    assert [sum(1 for _ in all_graphs(m)) for m in range(1, 5)] == [1, 2, 8, 64]


def _betti_by_lists(K, k):
    faces = simplices(K, k + 1)

    def boundary(lower, upper):
        index = {s: c for c, s in enumerate(lower)}
        mat = []
        for s in upper:
            row = [0] * len(lower)
            for drop in range(len(s)):
                row[index[s[:drop] + s[drop + 1:]]] = 1
            mat.append(row)
        return rank_lists(mat) if mat and lower else 0

    low = boundary(faces[k - 1], faces[k]) if k >= 0 else 0
    return len(faces[k]) - low - boundary(faces[k], faces[k + 1])


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=6))
def test_betti_matches_list_elimination(K):
    for k in range(-1, 3):
        assert betti_gf2(K, k) == _betti_by_lists(K, k)


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=6))
def test_euler_characteristic(K):
    faces = simplices(K, K.m)
    chi = sum((-1) ** d * len(faces[d]) for d in range(0, K.m))
    assert chi == 1 + sum((-1) ** k * betti_gf2(K, k) for k in range(0, K.m))


@settings(max_examples=40, deadline=None)
@given(complexes(max_m=5))
def test_cone_is_acyclic(K):
    apex = K.m + 1
    cone = Complex1Skeleton(apex, K.edges + tuple((v, apex) for v in K.vertices))
    assert all(betti_gf2(cone, k) == 0 for k in range(-1, apex))


@settings(max_examples=60, deadline=None)
@given(complexes(max_m=6))
def test_components_partition_subsets(K):
    for size in range(K.m + 1):
        for J in itertools.combinations(K.vertices, size):
            sub, labels = full_subcomplex(K, J)
            comps = connected_components(sub)
            assert sorted(v for c in comps for v in c) == list(range(1, len(J) + 1))
            assert betti_gf2(sub, 0) == reduced_betti0(sub)


@settings(max_examples=30, deadline=None)
@given(complexes(max_m=5))
def test_facet_mode_matches_flag_mode_on_cliques(K):
    cliques = simplices(K, K.m)
    maximal = [s for d, ss in cliques.items() if d >= 0 for s in ss
               if not any(set(s) < set(t) for dd, tt in cliques.items() if dd > d for t in tt)]
    explicit = Complex1Skeleton(K.m, K.edges, facets=tuple(maximal), flag_mode=False)
    for k in range(-1, 3):
        assert betti_gf2(explicit, k) == betti_gf2(K, k)
