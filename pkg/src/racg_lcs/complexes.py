"""Simplicial complexes on [m] through their 1-skeleton.

Vertices are 1-based.  Group and Lie computations only look at the edge
graph; homology needs simplices, which come from explicit facets or, in
flag mode, from the cliques of the edge graph.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gf2 import rank_of_rows

MAX_SUBSET_ENUMERATION = 20


class ComplexError(ValueError):
    """Malformed or inconsistent complex description."""


@dataclass(frozen=True)
class Complex1Skeleton:
    m: int
    edges: tuple[tuple[int, int], ...] = ()
    facets: tuple[tuple[int, ...], ...] | None = None
    flag_mode: bool = True
    _nbr: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise ComplexError(f"vertex count must be a nonnegative integer, got {self.m!r}")
        canon = []
        for e in self.edges:
            a, b = e
            if a == b:
                raise ComplexError(f"loop at vertex {a}")
            a, b = min(a, b), max(a, b)
            if a < 1 or b > self.m:
                raise ComplexError(f"edge {{{a},{b}}} has a vertex outside 1..{self.m}")
            canon.append((a, b))
        if len(set(canon)) != len(canon):
            raise ComplexError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        nbr = [0] * (self.m + 1)
        for a, b in self.edges:
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        object.__setattr__(self, "_nbr", tuple(nbr))
        if self.facets is not None:
            if self.flag_mode:
                raise ComplexError("flag mode and explicit facets are mutually exclusive")
            self._check_facets()

    def _check_facets(self):
        facets = []
        covered = set()
        for f in self.facets:
            f = tuple(sorted(f))
            if len(set(f)) != len(f):
                raise ComplexError(f"facet {list(f)} repeats a vertex")
            if f and (f[0] < 1 or f[-1] > self.m):
                raise ComplexError(f"facet {list(f)} has a vertex outside 1..{self.m}")
            for a, b in itertools.combinations(f, 2):
                if not self.adjacent(a, b):
                    raise ComplexError(f"facet {list(f)} contains non-edge {{{a},{b}}}")
                covered.add((a, b))
            facets.append(f)
        missing = set(self.edges) - covered
        if missing:
            a, b = min(missing)
            raise ComplexError(f"edge {{{a},{b}}} lies in no facet")
        object.__setattr__(self, "facets", tuple(sorted(set(facets))))

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    def adjacent(self, a: int, b: int) -> bool:
        return bool((self._nbr[a] >> b) & 1)

    def neighbours(self, v: int) -> int:
        """Neighbour set of ``v`` as a bitmask over vertex numbers."""
        return self._nbr[v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in itertools.combinations(self.vertices, 2)
                if not self.adjacent(a, b)]

    def degree(self, v: int) -> int:
        return bin(self._nbr[v]).count("1")


def parse_complex(text: str) -> Complex1Skeleton:
    """Build a complex from its JSON description."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"malformed JSON: {exc}") from None
    return complex_from_dict(data)


def complex_from_dict(data) -> Complex1Skeleton:
    if not isinstance(data, dict):
        raise ComplexError("complex must be a JSON object")
    unknown = set(data) - {"m", "edges", "facets", "flag"}
    if unknown:
        raise ComplexError(f"unknown keys: {sorted(unknown)}")
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ComplexError(f"'m' must be a positive integer, got {m!r}")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise ComplexError("'edges' must be a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
            raise ComplexError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    facets = data.get("facets")
    if facets is not None:
        if not isinstance(facets, list) or not all(
                isinstance(f, list) and all(_is_int(x) for x in f) for f in facets):
            raise ComplexError("'facets' must be a list of vertex lists")
        facets = tuple(tuple(f) for f in facets)
    flag = data.get("flag", facets is None)
    if not isinstance(flag, bool):
        raise ComplexError("'flag' must be a boolean")
    return Complex1Skeleton(m, tuple(pairs), facets, flag)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def complex_to_dict(K: Complex1Skeleton) -> dict:
    out = {"m": K.m, "edges": [list(e) for e in K.edges]}
    if K.facets is not None:
        out["facets"] = [list(f) for f in K.facets]
    out["flag"] = K.flag_mode
    return out


def full_subcomplex(K: Complex1Skeleton, J: Iterable[int]
                    ) -> tuple[Complex1Skeleton, tuple[int, ...]]:
    """Restriction K_J relabelled to 1..|J|.

    Returns the subcomplex and the relabelling: new vertex ``t`` is the
    original vertex ``labels[t - 1]``.
    """
    labels = tuple(sorted(set(J)))
    for v in labels:
        if v < 1 or v > K.m:
            raise ComplexError(f"vertex {v} outside 1..{K.m}")
    pos = {v: t for t, v in enumerate(labels, start=1)}
    edges = tuple((pos[a], pos[b]) for a, b in K.edges if a in pos and b in pos)
    facets = None
    if K.facets is not None:
        traces = {tuple(pos[v] for v in f if v in pos) for f in K.facets}
        traces.discard(())
        # keep maximal traces only; singletons of J are implied
        facets = tuple(sorted(f for f in traces
                              if not any(set(f) < set(g) for g in traces)))
    return Complex1Skeleton(len(labels), edges, facets, K.flag_mode), labels


def connected_components(K: Complex1Skeleton) -> list[list[int]]:
    seen = 0
    comps = []
    for v in K.vertices:
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= K.neighbours(low.bit_length() - 1)
                f ^= low
            frontier = grow & ~comp
            comp |= frontier
        seen |= comp
        comps.append([u for u in K.vertices if (comp >> u) & 1])
    return comps


def reduced_betti0(K: Complex1Skeleton) -> int:
    return max(len(connected_components(K)) - 1, 0)


def simplices(K: Complex1Skeleton, max_dim: int) -> dict[int, list[tuple[int, ...]]]:
    """Simplices of K by dimension, from -1 (the empty face) to ``max_dim``."""
    out: dict[int, list[tuple[int, ...]]] = {d: [] for d in range(-1, max_dim + 1)}
    out[-1] = [()]
    if max_dim < 0:
        return out
    if K.facets is not None:
        faces = {(v,) for v in K.vertices}
        for f in K.facets:
            for size in range(1, min(len(f), max_dim + 1) + 1):
                faces.update(itertools.combinations(f, size))
        for s in faces:
            out[len(s) - 1].append(s)
    elif K.flag_mode:
        _cliques(K, max_dim + 1, out)
    else:
        out[0] = [(v,) for v in K.vertices]
        if max_dim >= 1:
            out[1] = list(K.edges)
    for d in out:
        out[d].sort()
    return out


def _cliques(K: Complex1Skeleton, max_size: int, out: dict) -> None:
    # extend each clique by larger common neighbours only; every clique is visited once
    def extend(clique: tuple[int, ...], candidates: int):
        out[len(clique) - 1].append(clique)
        if len(clique) == max_size:
            return
        c = candidates
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            extend(clique + (v,), candidates & K.neighbours(v) & ~((low << 1) - 1))

    for v in K.vertices:
        extend((v,), K.neighbours(v) & ~((1 << (v + 1)) - 1))


def boundary_rank(lower: Sequence[tuple[int, ...]], upper: Sequence[tuple[int, ...]]) -> int:
    """GF(2) rank of the boundary map from ``upper`` faces to ``lower`` faces."""
    index = {s: c for c, s in enumerate(lower)}
    rows = []
    for s in upper:
        v = 0
        for drop in range(len(s)):
            v ^= 1 << index[s[:drop] + s[drop + 1:]]
        rows.append(v)
    return rank_of_rows(rows)


def betti_gf2(K: Complex1Skeleton, k: int) -> int:
    """Dimension of reduced homology of K in degree ``k`` over GF(2)."""
    if k < -1:
        raise ValueError(f"homology degree must be >= -1, got {k}")
    faces = simplices(K, k + 1)
    f_k = len(faces[k])
    rank_k = boundary_rank(faces[k - 1], faces[k]) if k >= 0 else 0
    rank_up = boundary_rank(faces[k], faces[k + 1])
    return f_k - rank_k - rank_up


def rk_homology_gf2(K: Complex1Skeleton, k: int) -> int:
    """Sum over all full subcomplexes K_J of the GF(2) rank of reduced H_{k-1}(K_J)."""
    if k < 0:
        raise ValueError(f"homology degree must be >= 0, got {k}")
    if K.m > MAX_SUBSET_ENUMERATION:
        raise ComplexError(
            f"m = {K.m} exceeds the subset-enumeration limit {MAX_SUBSET_ENUMERATION}")
    total = 0
    for size in range(K.m + 1):
        for J in itertools.combinations(K.vertices, size):
            sub, _ = full_subcomplex(K, J)
            total += betti_gf2(sub, k - 1)
    return total


def all_graphs(m: int):
    """Every labelled graph on 1..m, as flag complexes, in edge-bitmask order."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Complex1Skeleton(m, tuple(p for b, p in enumerate(pairs) if (mask >> b) & 1))
