"""Generator sets for the lower central series of RC_K.

Commutators are index tuples (i1, ..., ik) standing for the left-normed
commutator (g_{i1}, ..., g_{ik}) in the group and [mu_{i1}, ..., mu_{ik}]
in the associated graded Lie algebra.

The degree-4 tables are written over abstract roles i, j, k, l; a role
map from :func:`classify_4pt` substitutes concrete vertices.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .complexes import Complex1Skeleton, connected_components, full_subcomplex
from .magnus import TruncationError, graded_component, mu, not_in_gamma
from .words import build_nested

Commutator = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted, duplicate-free commutators, each with the rule that produced it.

    ``degree`` is None for the mixed-length commutant generators.
    """

    degree: int | None
    commutators: tuple[Commutator, ...]
    provenance: tuple[str, ...]

    def __post_init__(self):
        if len(self.commutators) != len(self.provenance):
            raise ValueError("one provenance entry per commutator")
        if len(set(self.commutators)) != len(self.commutators):
            raise ValueError("duplicate commutators")
        if list(self.commutators) != sorted(self.commutators):
            raise ValueError("commutators must be sorted")
        if self.degree is not None and any(len(c) != self.degree for c in self.commutators):
            raise ValueError(f"commutator length differs from degree {self.degree}")

    @classmethod
    def build(cls, degree: int | None, items: Iterable[tuple[Commutator, str]]) -> "GeneratorSet":
        table: dict[Commutator, str] = {}
        for c, why in items:
            table.setdefault(tuple(c), why)
        keys = sorted(table)
        return cls(degree, tuple(keys), tuple(table[c] for c in keys))

    def __len__(self):
        return len(self.commutators)

    def __iter__(self):
        return iter(self.commutators)

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "commutators": [list(c) for c in self.commutators],
                "count": len(self.commutators),
                "provenance": list(self.provenance)}


# ---------------------------------------------------------------------------
# commutant and low degrees


def _component_mask(K: Complex1Skeleton, subset_mask: int, start: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= K.neighbours(low.bit_length() - 1)
            f ^= low
        frontier = grow & subset_mask & ~comp
        comp |= frontier
    return comp


def _least_in_component_without(K: Complex1Skeleton, S: Sequence[int], i: int, j: int) -> bool:
    """i is the least vertex of its component in K_S, and that component misses j."""
    mask = 0
    for v in S:
        mask |= 1 << v
    comp = _component_mask(K, mask, i)
    return not (comp >> j) & 1 and comp & ((1 << i) - 1) == 0


def commutant_generators(K: Complex1Skeleton) -> GeneratorSet:
    """Nested commutators (i, j, k1, k2, ...) generating the commutant minimally."""
    items = []
    for size in range(2, K.m + 1):
        for S in itertools.combinations(K.vertices, size):
            j = S[-1]
            for i in S[:-1]:
                if _least_in_component_without(K, S, i, j):
                    rest = tuple(sorted((v for v in S if v not in (i, j)), reverse=True))
                    items.append(((i, j) + rest, f"subset {list(S)}"))
    return GeneratorSet.build(None, items)


def lk_basis(K: Complex1Skeleton, k: int) -> GeneratorSet:
    """Basis commutators of the degree-k graded piece, k in {1, 2, 3}."""
    if k == 1:
        return GeneratorSet.build(1, (((i,), "generator") for i in K.vertices))
    if k == 2:
        return GeneratorSet.build(2, (((i, j), "non-edge") for i, j in K.non_edges()))
    if k == 3:
        items = [((i, j, j), "non-edge square") for i, j in K.non_edges()]
        for i, j, kk in itertools.permutations(K.vertices, 3):
            if i < j > kk and _least_in_component_without(K, (i, j, kk), i, j):
                items.append(((i, j, kk), "least vertex off j"))
        return GeneratorSet.build(3, items)
    raise ValueError(f"basis only available in degrees 1-3, got {k}")


# ---------------------------------------------------------------------------
# degree-4 tables over roles

SHAPES_4 = ("complete", "one-missing", "two-missing-disjoint", "two-missing-shared",
            "star3", "triangle-plus-point", "path4", "two-adjacent-edges",
            "two-disjoint-edges", "one-edge", "discrete")

# minimal generating sets of L^4 for each 4-vertex shape, in role letters
TABLE_4: dict[str, tuple[str, ...]] = {
    "complete": (),
    "one-missing": ("jiii",),
    "two-missing-disjoint": ("ikkk", "jlll"),
    "two-missing-shared": ("kiii", "lkkk", "klki", "klik"),
    "star3": ("jiii", "kiii", "kjji", "kiji", "kiij", "kjjj", "kjij", "kijk"),
    "triangle-plus-point": ("ikij", "ikji", "ijjj", "ilij", "ilji",
                            "ikkk", "liii", "ilik", "ilki", "iljk"),
    "path4": ("kikk", "ilik", "ilki", "ilii", "ljll", "ljli", "ljil", "ljik"),
    "two-adjacent-edges": ("lkkj", "ljkj", "ljjk", "lkjk", "ljkl",
                           "ikkj", "ikjk", "kjjj", "ljjj", "lkll",
                           "kikk", "kikl", "kilk", "kilj", "kijl"),
    "two-disjoint-edges": ("kjki", "kjik", "kikk", "ilik", "ilki",
                           "ilii", "ljli", "ljil", "kjkk", "jljj",
                           "jljk", "jlkj", "ilkj", "jlik", "jlki"),
    "one-edge": ("illk", "iklk", "ikkl", "ilkl", "ikli",
                 "lkkk", "jllk", "jklk", "jkkl", "jlkl",
                 "jklj", "ikii", "kjkk", "kjki", "kjik",
                 "ilii", "ljll", "ljli", "ljil",
                 "ljik", "kjil", "kjli", "ljki"),
    "discrete": ("kjji", "kiji", "kiij", "kjij", "kijk",
                 "jiii", "ljji", "liji", "liij", "ljij", "lijl",
                 "kiii", "liii", "lkki", "liki", "liik", "lkik", "likl",
                 "kjjj", "ljjj", "lkkj", "ljkj", "ljjk", "lkkk", "lkjk", "ljkl",
                 "jlki", "ilkj", "iljk", "jlik", "klij", "klji"),
}

# three vertices: complete, two edges {i,k},{j,k} with i<j, one edge {i,j} with i<j, none
TABLE_3: dict[str, tuple[str, ...]] = {
    "complete3": (),
    "path3": ("ijii",),
    "one-edge3": ("ikii", "kjkk", "kjki", "kjik"),
    "discrete3": ("jiii", "kiii", "kjji", "kiji", "kiij", "kjjj", "kjij", "kijk"),
}


@dataclass(frozen=True)
class FourPointClass:
    shape: str
    roles: tuple[tuple[str, int], ...]

    @property
    def role_map(self) -> dict[str, int]:
        return dict(self.roles)


def _roles(**kw: int) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(kw.items()))


def classify_4pt(K4: Complex1Skeleton) -> FourPointClass:
    """Isomorphism type of a 4-vertex graph and the role assignment for its table."""
    if K4.m != 4:
        raise ValueError(f"classify_4pt needs exactly 4 vertices, got {K4.m}")
    V = [1, 2, 3, 4]
    edges = K4.edges
    missing = K4.non_edges()
    deg = {v: K4.degree(v) for v in V}
    n = len(edges)

    def others(*used):
        return sorted(v for v in V if v not in used)

    if n == 6:
        return FourPointClass("complete", _roles(i=1, j=2, k=3, l=4))
    if n == 5:
        (i, j), = missing
        k, l = others(i, j)
        return FourPointClass("one-missing", _roles(i=i, j=j, k=k, l=l))
    if n == 4:
        (a, b), (c, d) = missing
        if not {a, b} & {c, d}:
            # missing {i,k},{j,l} with k<i, l<j; pairs ordered by their smaller vertex
            return FourPointClass("two-missing-disjoint", _roles(k=a, i=b, l=c, j=d))
        k, = {a, b} & {c, d}
        i, l = sorted({a, b, c, d} - {k})
        j, = others(i, k, l)
        return FourPointClass("two-missing-shared", _roles(i=i, j=j, k=k, l=l))
    if n == 3:
        if max(deg.values()) == 3:
            l, = [v for v in V if deg[v] == 3]
            i, j, k = others(l)
            return FourPointClass("star3", _roles(i=i, j=j, k=k, l=l))
        if min(deg.values()) == 0:
            i, = [v for v in V if deg[v] == 0]
            j, k, l = others(i)
            return FourPointClass("triangle-plus-point", _roles(i=i, j=j, k=k, l=l))
        ends = sorted(v for v in V if deg[v] == 1)
        i, l = ends
        j, = [v for v in V if K4.adjacent(i, v)]
        k, = others(i, j, l)
        return FourPointClass("path4", _roles(i=i, j=j, k=k, l=l))
    if n == 2:
        (a, b), (c, d) = edges
        if {a, b} & {c, d}:
            i, = {a, b} & {c, d}
            j, l = sorted({a, b, c, d} - {i})
            k, = others(i, j, l)
            return FourPointClass("two-adjacent-edges", _roles(i=i, j=j, k=k, l=l))
        # edges are sorted, so (a, b) holds vertex 1
        return FourPointClass("two-disjoint-edges", _roles(i=a, j=b, k=c, l=d))
    if n == 1:
        (i, j), = edges
        k, l = others(i, j)
        return FourPointClass("one-edge", _roles(i=i, j=j, k=k, l=l))
    return FourPointClass("discrete", _roles(i=1, j=2, k=3, l=4))


def classify_3pt(K3: Complex1Skeleton) -> FourPointClass:
    if K3.m != 3:
        raise ValueError(f"classify_3pt needs exactly 3 vertices, got {K3.m}")
    n = len(K3.edges)
    if n == 3:
        return FourPointClass("complete3", _roles(i=1, j=2, k=3))
    if n == 2:
        k, = [v for v in (1, 2, 3) if K3.degree(v) == 2]
        i, j = [v for v in (1, 2, 3) if v != k]
        return FourPointClass("path3", _roles(i=i, j=j, k=k))
    if n == 1:
        (i, j), = K3.edges
        k, = [v for v in (1, 2, 3) if v not in (i, j)]
        return FourPointClass("one-edge3", _roles(i=i, j=j, k=k))
    return FourPointClass("discrete3", _roles(i=1, j=2, k=3))


def instantiate(pattern: str, roles: dict[str, int]) -> Commutator:
    return tuple(roles[r] for r in pattern)


def l4_generators_small(K: Complex1Skeleton) -> GeneratorSet:
    """Minimal generating set of L^4 for a complex on at most four vertices."""
    if K.m > 4:
        raise ValueError(f"l4_generators_small handles m <= 4, got {K.m}")
    if K.m == 4:
        cls = classify_4pt(K)
        table = TABLE_4[cls.shape]
    elif K.m == 3:
        cls = classify_3pt(K)
        table = TABLE_3[cls.shape]
    elif K.m == 2 and not K.edges:
        return GeneratorSet.build(4, [((2, 1, 1, 1), "two-point free product")])
    else:
        return GeneratorSet.build(4, [])
    roles = cls.role_map
    return GeneratorSet.build(4, ((instantiate(p, roles), cls.shape) for p in table))


def l4_generators(K: Complex1Skeleton, order: Iterable[Sequence[int]] | None = None
                  ) -> GeneratorSet:
    """Generating set of L^4 built by replacing generators one 4-subset at a time.

    Starts from the discrete-complex generators on every 4-subset, then for
    each 4-subset J in turn swaps every commutator supported inside J for
    the minimal set of K_J.  ``order`` overrides the default ascending
    lexicographic pass over the 4-subsets.
    """
    if K.m <= 4:
        return l4_generators_small(K)
    quads = list(itertools.combinations(K.vertices, 4)) if order is None else \
        [tuple(sorted(J)) for J in order]
    for J in quads:
        if len(J) != 4 or len(set(J)) != 4 or J[0] < 1 or J[-1] > K.m:
            raise ValueError(f"bad 4-subset {J}")
    # keyed by support so the commutators inside J can be dropped subset by subset
    working: dict[frozenset, dict[Commutator, str]] = {}

    def add(c: Commutator, why: str):
        working.setdefault(frozenset(c), {}).setdefault(c, why)

    discrete = TABLE_4["discrete"]
    for J in itertools.combinations(K.vertices, 4):
        roles = dict(zip("ijkl", J))
        for p in discrete:
            add(instantiate(p, roles), "initial discrete")
    for J in quads:
        sub, labels = full_subcomplex(K, J)
        for size in range(2, 5):
            for S in itertools.combinations(J, size):
                working.pop(frozenset(S), None)
        small = l4_generators_small(sub)
        tag = f"{small.provenance[0] if small.provenance else 'complete'} on {list(J)}"
        for c in small:
            add(tuple(labels[t - 1] for t in c), tag)
    items = [(c, why) for bucket in working.values() for c, why in bucket.items()]
    return GeneratorSet.build(4, items)


# ---------------------------------------------------------------------------
# Magnus checks


@functools.lru_cache(maxsize=1 << 16)
def magnus_image(K: Complex1Skeleton, c: Commutator, k: int) -> frozenset:
    """Degree-k component of mu of the nested commutator word."""
    return graded_component(mu(K, build_nested(K, c), k), k)


def magnus_matrix(K: Complex1Skeleton, gens: Iterable[Commutator], k: int,
                  basis: Sequence[tuple[int, ...]] | None = None) -> gf2.Gf2Matrix:
    return gf2.vectorize([magnus_image(K, tuple(c), k) for c in gens], basis=basis)


def magnus_rank_of(K: Complex1Skeleton, gens: Iterable[Commutator], k: int,
                   max_degree: int | None = None) -> int:
    """Rank of the degree-k Magnus images of ``gens``.

    A lower bound for the dimension their classes span in L^k; never the
    dimension itself, since mu is not injective on L^k.
    """
    if max_degree is not None and max_degree < k:
        raise TruncationError(f"max_degree {max_degree} is below degree {k}")
    gens = [tuple(c) for c in gens]
    for c in gens:
        if len(c) != k:
            raise ValueError(f"commutator {c} does not have length {k}")
    return gf2.rank(magnus_matrix(K, gens, k))


def certificates(K: Complex1Skeleton, gens: Iterable[Commutator], k: int = 4) -> dict:
    """Per-commutator one-sided certificate that it lies outside gamma_{k+1}."""
    return {tuple(c): not_in_gamma(K, build_nested(K, c), k) for c in gens}


def restrict(gens: Iterable[Commutator], J: Iterable[int]) -> list[Commutator]:
    """Commutators whose support lies inside J."""
    J = set(J)
    return [c for c in gens if set(c) <= J]
