"""Reproduction checks with fixed expected values and time budgets.

Each ``check_*`` function returns a :class:`CriterionResult`; ``run_all``
runs the whole suite (used by ``racg-lcs selftest`` and the test suite).
Expected commutator sets below are transcribed by hand for concrete
vertex labels, not generated from the tables in :mod:`racg_lcs.lcs`.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import gf2
from .complexes import (Complex1Skeleton, all_graphs, connected_components, full_subcomplex,
                        rk_homology_gf2)
from .lcs import (classify_4pt, commutant_generators, l4_generators, l4_generators_small,
                  magnus_matrix, restrict)
from .magnus import (Certificate, TruncatedSeries, graded_component, lie_bracket, mu,
                     normalize_monomial, not_in_gamma, series_add, series_mul)
from .words import build_nested, commutator, conjugate, multiply, nested, normalize


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    limit: float | None
    detail: str = ""

    def line(self, timings: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.number}. {self.name}: {self.detail}"
        if timings:
            budget = f" (limit {self.limit:g}s)" if self.limit else ""
            text += f" in {self.elapsed:.2f}s{budget}"
        return text

    def to_json(self, timings: bool = True) -> dict:
        out = {"criterion": self.number, "name": self.name, "passed": self.passed,
               "detail": self.detail, "limit_s": self.limit}
        if timings:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def _timed(number: int, name: str, limit: float | None, body: Callable[[], tuple[bool, str]]
           ) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; exceeded {limit}s"
    return CriterionResult(number, name, ok, elapsed, limit, detail)


def _K(m: int, *edges: tuple[int, int]) -> Complex1Skeleton:
    return Complex1Skeleton(m, tuple(edges))


# complex with edges {4,1},{4,3}; degree-4 terms of mu(((g2,g4),(g1,g3))) and mu((g2,g4,g3,g1))
PAIR_COMPLEX = ((4, 1), (4, 3))
PAIR_COMPLEX_BRACKET_TERMS = [(2, 4, 1, 3), (2, 4, 3, 1), (4, 2, 1, 3), (4, 2, 3, 1),
                     (1, 3, 2, 4), (1, 3, 4, 2), (3, 1, 2, 4), (3, 1, 4, 2)]
PAIR_COMPLEX_NESTED_TERMS = [(1, 3, 2, 4), (1, 3, 4, 2), (1, 2, 4, 3), (1, 4, 2, 3),
                       (3, 2, 4, 1), (3, 4, 2, 1), (2, 4, 3, 1), (4, 2, 3, 1)]
# path 3-1-4-2; degree-4 terms of mu(((g1,g2),(g3,g4)))
PATH_COMPLEX = ((3, 1), (1, 4), (4, 2))
PATH_COMPLEX_BRACKET_TERMS = [(1, 2, 3, 4), (1, 2, 4, 3), (2, 1, 3, 4), (2, 1, 4, 3),
                     (3, 4, 1, 2), (3, 4, 2, 1), (4, 3, 1, 2), (4, 3, 2, 1)]

# one representative per 4-vertex isomorphism class with its expected minimal set
FOUR_POINT_CASES = [
    ("complete", [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], []),
    ("one-missing", [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], [(2, 1, 1, 1)]),
    ("two-missing-disjoint", [(1, 2), (1, 4), (2, 3), (3, 4)],
     [(3, 1, 1, 1), (4, 2, 2, 2)]),
    ("two-missing-shared", [(1, 3), (1, 4), (2, 4), (3, 4)],
     [(2, 1, 1, 1), (3, 2, 2, 2), (2, 3, 2, 1), (2, 3, 1, 2)]),
    ("star3", [(1, 4), (2, 4), (3, 4)],
     [(2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 2, 1), (3, 1, 2, 1),
      (3, 1, 1, 2), (3, 2, 2, 2), (3, 2, 1, 2), (3, 1, 2, 3)]),
    ("triangle-plus-point", [(2, 3), (2, 4), (3, 4)],
     [(1, 3, 1, 2), (1, 3, 2, 1), (1, 2, 2, 2), (1, 4, 1, 2), (1, 4, 2, 1),
      (1, 3, 3, 3), (4, 1, 1, 1), (1, 4, 1, 3), (1, 4, 3, 1), (1, 4, 2, 3)]),
    ("path4", [(2, 4), (1, 4), (1, 3)],
     [(1, 2, 1, 1), (2, 3, 2, 1), (2, 3, 1, 2), (2, 3, 2, 2),
      (3, 4, 3, 3), (3, 4, 3, 2), (3, 4, 2, 3), (3, 4, 2, 1)]),
    ("two-adjacent-edges", [(1, 4), (3, 4)],
     [(3, 2, 2, 1), (3, 1, 2, 1), (3, 1, 1, 2), (3, 2, 1, 2), (3, 1, 2, 3),
      (4, 2, 2, 1), (4, 2, 1, 2), (2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 3, 3),
      (2, 4, 2, 2), (2, 4, 2, 3), (2, 4, 3, 2), (2, 4, 3, 1), (2, 4, 1, 3)]),
    ("two-disjoint-edges", [(1, 3), (2, 4)],
     [(2, 3, 2, 1), (2, 3, 1, 2), (2, 1, 2, 2), (1, 4, 1, 2), (1, 4, 2, 1),
      (1, 4, 1, 1), (4, 3, 4, 1), (4, 3, 1, 4), (2, 3, 2, 2), (3, 4, 3, 3),
      (3, 4, 3, 2), (3, 4, 2, 3), (1, 4, 2, 3), (3, 4, 1, 2), (3, 4, 2, 1)]),
    ("one-edge", [(3, 4)],
     [(3, 2, 2, 1), (3, 1, 2, 1), (3, 1, 1, 2), (3, 2, 1, 2), (3, 1, 2, 3),
      (2, 1, 1, 1), (4, 2, 2, 1), (4, 1, 2, 1), (4, 1, 1, 2), (4, 2, 1, 2),
      (4, 1, 2, 4), (3, 1, 3, 3), (1, 4, 1, 1), (1, 4, 1, 3), (1, 4, 3, 1),
      (3, 2, 3, 3), (2, 4, 2, 2), (2, 4, 2, 3), (2, 4, 3, 2), (2, 4, 3, 1),
      (1, 4, 3, 2), (1, 4, 2, 3), (2, 4, 1, 3)]),
    ("discrete", [],
     [(3, 2, 2, 1), (3, 1, 2, 1), (3, 1, 1, 2), (3, 2, 1, 2), (3, 1, 2, 3),
      (2, 1, 1, 1), (4, 2, 2, 1), (4, 1, 2, 1), (4, 1, 1, 2), (4, 2, 1, 2), (4, 1, 2, 4),
      (3, 1, 1, 1), (4, 1, 1, 1), (4, 3, 3, 1), (4, 1, 3, 1), (4, 1, 1, 3), (4, 3, 1, 3),
      (4, 1, 3, 4),
      (3, 2, 2, 2), (4, 2, 2, 2), (4, 3, 3, 2), (4, 2, 3, 2), (4, 2, 2, 3), (4, 3, 3, 3),
      (4, 3, 2, 3), (4, 2, 3, 4),
      (2, 4, 3, 1), (1, 4, 3, 2), (1, 4, 2, 3), (2, 4, 1, 3), (3, 4, 1, 2), (3, 4, 2, 1)]),
]
FOUR_POINT_SIZES = [0, 1, 2, 4, 8, 10, 8, 15, 15, 23, 32]

THREE_POINT_CASES = [
    ([(1, 2), (1, 3), (2, 3)], []),
    ([(1, 3), (2, 3)], [(1, 2, 1, 1)]),
    ([(1, 2)], [(1, 3, 1, 1), (3, 2, 3, 3), (3, 2, 3, 1), (3, 2, 1, 3)]),
    ([], [(2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 2, 1), (3, 1, 2, 1),
          (3, 1, 1, 2), (3, 2, 2, 2), (3, 2, 1, 2), (3, 1, 2, 3)]),
]
THREE_POINT_SIZES = [0, 1, 4, 8]

# minimal generator counts of L^4 for free-product style groups
FREE_PRODUCT_COUNTS = [
    ("3-point discrete", 3, [], 8),
    ("3-point one edge", 3, [(1, 2)], 4),
    ("point and triangle", 4, [(1, 2), (1, 3), (2, 3)], 10),
    ("two segments", 4, [(1, 2), (3, 4)], 15),
    ("segment and two points", 4, [(1, 2)], 23),
    ("4-point discrete", 4, [], 32),
]

IDENTITY_COMPLEXES = [
    _K(3),
    _K(4, (1, 2), (3, 4)),
    _K(4, (1, 4), (3, 4)),
    _K(5, (1, 2), (2, 3), (3, 4), (4, 5)),
    _K(5, (1, 3), (1, 4), (2, 5), (3, 5)),
]


def check_pair_complex_expansion() -> CriterionResult:
    def body():
        K = _K(4, *PAIR_COMPLEX)
        pair = nested(K, nested(K, (2,), (4,)), nested(K, (1,), (3,)))
        got_pair = graded_component(mu(K, pair, 4), 4)
        want_pair = {normalize_monomial(K, t) for t in PAIR_COMPLEX_BRACKET_TERMS}
        got_nested = graded_component(mu(K, build_nested(K, (2, 4, 3, 1)), 4), 4)
        want_nested = {normalize_monomial(K, t) for t in PAIR_COMPLEX_NESTED_TERMS}
        ok = got_pair == want_pair and got_nested == want_nested and len(want_pair) == 8
        return ok, f"pair terms match={got_pair == want_pair}, nested terms match={got_nested == want_nested}"
    return _timed(1, "degree-4 expansions on the {4,1},{4,3} complex", 1.0, body)


def check_path_complex_expansion() -> CriterionResult:
    def body():
        K = _K(4, *PATH_COMPLEX)
        pair = nested(K, nested(K, (1,), (2,)), nested(K, (3,), (4,)))
        got = graded_component(mu(K, pair, 4), 4)
        want = {normalize_monomial(K, t) for t in PATH_COMPLEX_BRACKET_TERMS}
        return got == want and len(want) == 8, f"{len(got)} terms, match={got == want}"
    return _timed(2, "degree-4 expansion on the path 3-1-4-2", 1.0, body)


def check_four_point_table() -> CriterionResult:
    def body():
        problems = []
        sizes = []
        for shape, edges, expected in FOUR_POINT_CASES:
            K = _K(4, *edges)
            if classify_4pt(K).shape != shape:
                problems.append(f"{edges} classified as {classify_4pt(K).shape}")
            got = l4_generators(K)
            sizes.append(len(got))
            if set(got) != set(expected) or len(expected) != len(set(expected)):
                problems.append(f"{shape}: tuples differ")
        if sizes != FOUR_POINT_SIZES:
            problems.append(f"sizes {sizes}")
        for label, m, edges, count in FREE_PRODUCT_COUNTS:
            n = len(l4_generators(_K(m, *edges)))
            if n != count:
                problems.append(f"{label}: {n} != {count}")
        return not problems, "; ".join(problems) or f"sizes {sizes}"
    return _timed(3, "4-point minimal generating sets (11 classes)", 1.0, body)


def check_three_point_table() -> CriterionResult:
    def body():
        sizes = []
        problems = []
        for edges, expected in THREE_POINT_CASES:
            got = l4_generators(_K(3, *edges))
            sizes.append(len(got))
            if set(got) != set(expected):
                problems.append(f"{edges}: tuples differ")
        if sizes != THREE_POINT_SIZES:
            problems.append(f"sizes {sizes}")
        return not problems, "; ".join(problems) or f"sizes {sizes}"
    return _timed(4, "3-point minimal generating sets", 1.0, body)


def _components_sum(K: Complex1Skeleton) -> int:
    total = 0
    for size in range(1, K.m + 1):
        for J in itertools.combinations(K.vertices, size):
            sub, _ = full_subcomplex(K, J)
            total += len(connected_components(sub)) - 1
    return total


def check_commutant_counts(max_m: int = 5) -> CriterionResult:
    def body():
        graphs = 0
        bad = []
        for m in range(2, max_m + 1):
            for K in all_graphs(m):
                graphs += 1
                n = len(commutant_generators(K))
                if n != _components_sum(K) or n != rk_homology_gf2(K, 1):
                    bad.append(K.edges)
        return not bad, f"{graphs} graphs, {len(bad)} mismatches"
    return _timed(5, "commutant generator count = sum of reduced b0", 60.0, body)


def _random_word(rng: random.Random, m: int, max_len: int = 8) -> tuple[int, ...]:
    return tuple(rng.randint(1, m) for _ in range(rng.randint(0, max_len)))


def identity_failures(K: Complex1Skeleton, a, b, c) -> list[str]:
    """Names of the commutator identities that fail for (a, b, c) in RC_K."""
    def prod(*ws):
        out = ()
        for w in ws:
            out += tuple(w)
        return normalize(K, out)

    def com(x, y):
        return commutator(K, x, y)

    def conj(x, y):
        return conjugate(K, x, y)

    checks = {
        "(a,bc)": (com(a, prod(b, c)), prod(com(a, c), com(a, b), nested(K, a, b, c))),
        "(ab,c)": (com(prod(a, b), c), prod(com(a, c), nested(K, a, c, b), com(b, c))),
        "three-term": (prod(nested(K, a, b, c), nested(K, b, c, a), nested(K, c, a, b)),
                       prod(com(b, a), com(c, a), conj(com(c, b), a), com(a, b),
                            conj(com(a, c), b), conj(com(b, c), a), com(a, c),
                            conj(com(c, a), b))),
        "(a,(b,c))": (com(a, com(b, c)),
                      prod(com(a, c), com(c, com(b, a)), com(a, b), com(c, b),
                           com(b, com(a, c)), com(c, a), com(b, a), com(b, c))),
        "((a,b),c)": (com(com(a, b), c),
                      prod(com(b, a), com(c, a), com(c, b), com(com(c, b), a),
                           com(a, b), com(a, c), com(com(a, c), b), com(b, c))),
    }
    return [name for name, (lhs, rhs) in checks.items() if lhs != rhs]


def check_group_identities(trials: int = 1000, seed: int = 2024) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        failures = 0
        for K in IDENTITY_COMPLEXES:
            for _ in range(trials):
                a, b, c = (_random_word(rng, K.m) for _ in range(3))
                failures += len(identity_failures(K, a, b, c))
        return failures == 0, f"{len(IDENTITY_COMPLEXES)} complexes x {trials} triples, {failures} failures"
    return _timed(6, "commutator identities as word-problem identities", 60.0, body)


def normal_forms_up_to(K: Complex1Skeleton, length: int) -> list[tuple[int, ...]]:
    """All group elements of word length <= ``length``, as normal forms."""
    layers = [{()}]
    seen = {()}
    for _ in range(length):
        nxt = set()
        for w in layers[-1]:
            for a in K.vertices:
                v = normalize(K, w + (a,))
                if len(v) == len(w) + 1 and v not in seen:
                    nxt.add(v)
        seen |= nxt
        layers.append(nxt)
    return sorted(seen, key=lambda w: (len(w), w))


def magnus_property_failures(K: Complex1Skeleton, rng: random.Random, pairs: int = 1000,
                             length: int = 5, max_weight: int = 5) -> dict[str, int]:
    """Counts of failures of each Magnus-map property on one complex."""
    fails = dict.fromkeys(["homomorphism", "injectivity", "top-term", "vanishing",
                           "additivity", "square-shift", "jacobi", "alternating"], 0)
    top = 6
    for _ in range(pairs):
        u, v = _random_word(rng, K.m), _random_word(rng, K.m)
        if mu(K, multiply(K, u, v), top) != series_mul(K, mu(K, u, top), mu(K, v, top)):
            fails["homomorphism"] += 1

    words = normal_forms_up_to(K, length)
    images = {}
    for w in words:
        s = mu(K, w, length)
        if w not in graded_component(s, len(w)):
            fails["top-term"] += 1
        images.setdefault(s, []).append(w)
    fails["injectivity"] = sum(len(ws) - 1 for ws in images.values())

    by_weight: dict[int, list[tuple[int, ...]]] = {}
    for k in range(2, max_weight + 1):
        for c in itertools.product(K.vertices, repeat=k):
            word = nested(K, *[(i,) for i in c])
            by_weight.setdefault(k, []).append(word)
            if mu(K, word, k - 1).weight() is not None:
                fails["vanishing"] += 1

    for k, ws in by_weight.items():
        if k > 4:
            continue
        for _ in range(50):
            c, d = rng.choice(ws), rng.choice(ws)
            lhs = graded_component(mu(K, multiply(K, c, d), k), k)
            rhs = graded_component(mu(K, c, k), k) ^ graded_component(mu(K, d, k), k)
            fails["additivity"] += lhs != rhs

    for k, ws in by_weight.items():
        if k > 3:
            continue
        for w in rng.sample(ws, min(40, len(ws))):
            sq = mu(K, w + w, 2 * k - 1)
            if any(sq.components[d] for d in range(1, 2 * k)):
                fails["square-shift"] += 1
    for _ in range(60):
        w = _random_word(rng, K.m, 6)
        s = mu(K, w, 6)
        k = s.weight()
        if k is None or 2 * k - 1 > 6:
            continue
        sq = mu(K, w + w, 6)
        if any(sq.components[d] for d in range(1, 2 * k)):
            fails["square-shift"] += 1

    for _ in range(100):
        a, b, c = (TruncatedSeries.from_monomials(K, [_random_word(rng, K.m, 3)], 6)
                   for _ in range(3))
        jac = series_add(series_add(lie_bracket(K, lie_bracket(K, a, b), c),
                                    lie_bracket(K, lie_bracket(K, b, c), a)),
                         lie_bracket(K, lie_bracket(K, c, a), b))
        fails["jacobi"] += not jac.is_zero()
        fails["alternating"] += not lie_bracket(K, a, a).is_zero()
    return fails


def check_magnus_properties(seed: int = 7) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        totals: dict[str, int] = {}
        complexes = [K for m in (2, 3, 4) for K in all_graphs(m)]
        for K in complexes:
            pairs = 1000 if K.m < 4 or K in (_K(4), _K(4, *PAIR_COMPLEX)) else 30
            for name, n in magnus_property_failures(K, rng, pairs=pairs).items():
                totals[name] = totals.get(name, 0) + n
        bad = {k: v for k, v in totals.items() if v}
        return not bad, f"{len(complexes)} complexes, failures {bad or 'none'}"
    return _timed(7, "Magnus map properties", 120.0, body)


def check_one_sided() -> CriterionResult:
    def body():
        K = _K(2)
        word = build_nested(K, (2, 1, 1, 1))
        deg4 = graded_component(mu(K, word, 4), 4)
        cert = not_in_gamma(K, word, 4)
        ok = word != () and not deg4 and cert is Certificate.UNKNOWN
        return ok, f"word length {len(word)}, degree-4 terms {len(deg4)}, certificate {cert.value}"
    return _timed(8, "one-sided certificate on Z2 * Z2", None, body)


def check_l4_at_scale(m: int = 7) -> CriterionResult:
    def body():
        K = _K(m)
        first = l4_generators(K)
        second = l4_generators(K)
        same = json.dumps(first.to_json()) == json.dumps(second.to_json())
        mismatched = 0
        for J in itertools.combinations(K.vertices, 4):
            sub, labels = full_subcomplex(K, J)
            ref = [tuple(labels[t - 1] for t in c) for c in l4_generators_small(sub)]
            if not gf2.same_span(magnus_matrix(K, restrict(first, J), 4),
                                 magnus_matrix(K, ref, 4)):
                mismatched += 1
        return same and mismatched == 0, \
            f"{len(first)} generators, deterministic={same}, span mismatches {mismatched}"
    return _timed(9, f"4-subset replacement algorithm on {m} discrete points", 10.0, body)


CHECKS = [check_pair_complex_expansion, check_path_complex_expansion, check_four_point_table, check_three_point_table,
          check_commutant_counts, check_group_identities, check_magnus_properties,
          check_one_sided, check_l4_at_scale]


def run_all(echo: Callable[[str], None] | None = None, timings: bool = True
            ) -> list[CriterionResult]:
    results = []
    for check in CHECKS:
        res = check()
        results.append(res)
        if echo is not None:
            echo(res.line(timings))
    return results
