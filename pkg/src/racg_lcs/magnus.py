"""Truncated Magnus algebra of RC_K over GF(2).

The algebra is the tensor algebra on v_1..v_m modulo v_i^2 = 0 and
v_i v_j = v_j v_i for edges {i, j}.  Its monomials are commutation classes
of words without a hidden square; each is stored as its lexicographically
least representative.  A series keeps one frozenset of monomials per
degree up to ``max_degree`` (presence means coefficient 1).

The Magnus map sends g_i to 1 + v_i and is an injective homomorphism on
RC_K.  If the degree-k component of mu(x) is nonzero then x is not in
gamma_{k+1}; the converse fails, so ``not_in_gamma`` is one-sided.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import Complex1Skeleton
from .gf2 import monomial_key
from .traces import check_letters, has_square, lex_normal_form

Monomial = tuple[int, ...]

DEFAULT_MAX_DEGREE = 6


class TruncationError(ValueError):
    """A requested degree lies above the series truncation."""


class Certificate(str, enum.Enum):
    CERTIFIED_NOT_IN = "CERTIFIED_NOT_IN"
    UNKNOWN = "UNKNOWN"


def normalize_monomial(K: Complex1Skeleton, letters: Sequence[int]) -> Monomial | None:
    """Canonical form of a word in the v's, or None when it is zero."""
    letters = check_letters(K, letters)
    if has_square(K, letters):
        return None
    return lex_normal_form(K, letters)


class MagnusAlgebra:
    """Monomial arithmetic for one complex, with a transition cache."""

    def __init__(self, K: Complex1Skeleton):
        self.K = K
        self._append: dict[tuple[Monomial, int], Monomial | None] = {}

    def append(self, mono: Monomial, a: int) -> Monomial | None:
        """Canonical form of mono * v_a, for canonical nonzero ``mono``."""
        key = (mono, a)
        try:
            return self._append[key]
        except KeyError:
            pass
        nbr = self.K.neighbours(a)
        p = len(mono)
        # a can slide left over the commuting tail; meeting itself kills the monomial
        while p and (nbr >> mono[p - 1]) & 1:
            p -= 1
        if p and mono[p - 1] == a:
            res = None
        else:
            while p < len(mono) and mono[p] < a:
                p += 1
            res = mono[:p] + (a,) + mono[p:]
        self._append[key] = res
        return res

    def product(self, x: Monomial, y: Monomial) -> Monomial | None:
        for a in y:
            x = self.append(x, a)
            if x is None:
                return None
        return x


@functools.lru_cache(maxsize=64)
def algebra(K: Complex1Skeleton) -> MagnusAlgebra:
    return MagnusAlgebra(K)


@dataclass(frozen=True)
class TruncatedSeries:
    max_degree: int
    components: tuple[frozenset, ...]

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        comps = tuple(frozenset(c) for c in self.components)
        comps = comps + (frozenset(),) * (self.max_degree + 1 - len(comps))
        if len(comps) != self.max_degree + 1:
            raise ValueError("more components than max_degree allows")
        for d, comp in enumerate(comps):
            for mono in comp:
                if len(mono) != d:
                    raise ValueError(f"monomial {mono} filed under degree {d}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_monomials(cls, K: Complex1Skeleton, monomials: Iterable[Sequence[int]],
                       max_degree: int) -> "TruncatedSeries":
        """Sum of the given words, each normalized; repeated terms cancel."""
        comps = [set() for _ in range(max_degree + 1)]
        for word in monomials:
            mono = normalize_monomial(K, word)
            if mono is not None and len(mono) <= max_degree:
                comps[len(mono)] ^= {mono}
        return cls(max_degree, tuple(comps))

    @classmethod
    def one(cls, max_degree: int) -> "TruncatedSeries":
        return cls(max_degree, (frozenset({()}),))

    @classmethod
    def zero(cls, max_degree: int) -> "TruncatedSeries":
        return cls(max_degree, ())

    def __getitem__(self, d: int) -> frozenset:
        return graded_component(self, d)

    def is_zero(self) -> bool:
        return not any(self.components)

    def terms(self) -> list[Monomial]:
        return sorted((m for c in self.components for m in c), key=monomial_key)

    def weight(self) -> int | None:
        """Least positive degree where the series differs from 1, if any."""
        for d in range(1, self.max_degree + 1):
            if self.components[d]:
                return d
        return None

    def __add__(self, other):
        return series_add(self, other)

    def __str__(self):
        return render_series(self)


def _check_same(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.max_degree != b.max_degree:
        raise ValueError(f"max_degree mismatch: {a.max_degree} vs {b.max_degree}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same(a, b)
    return TruncatedSeries(a.max_degree,
                           tuple(x ^ y for x, y in zip(a.components, b.components)))


def series_mul(K: Complex1Skeleton, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same(a, b)
    alg = algebra(K)
    top = a.max_degree
    comps = [set() for _ in range(top + 1)]
    for da, ca in enumerate(a.components):
        for db in range(top - da + 1):
            cb = b.components[db]
            if not ca or not cb:
                continue
            target = comps[da + db]
            for x in ca:
                for y in cb:
                    prod = alg.product(x, y)
                    if prod is not None:
                        target ^= {prod}
    return TruncatedSeries(top, tuple(comps))


def series_inverse(K: Complex1Skeleton, a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1: 1 + h + h^2 + ... truncated."""
    if () not in a.components[0]:
        raise ValueError("not a unit with constant term 1")
    h = TruncatedSeries(a.max_degree, (frozenset(),) + a.components[1:])
    result = TruncatedSeries.one(a.max_degree)
    power = TruncatedSeries.one(a.max_degree)
    for _ in range(a.max_degree):
        power = series_mul(K, power, h)
        if power.is_zero():
            break
        result = series_add(result, power)
    return result


def generator(K: Complex1Skeleton, i: int, max_degree: int) -> TruncatedSeries:
    """The series v_i."""
    check_letters(K, (i,))
    comps = [frozenset()] * (max_degree + 1)
    if max_degree >= 1:
        comps[1] = frozenset({(i,)})
    return TruncatedSeries(max_degree, tuple(comps))


def mu(K: Complex1Skeleton, w: Sequence[int],
       max_degree: int = DEFAULT_MAX_DEGREE) -> TruncatedSeries:
    """Magnus image of a group word: the product of (1 + v_a) over its letters."""
    w = check_letters(K, w)
    alg = algebra(K)
    comps = [set() for _ in range(max_degree + 1)]
    comps[0].add(())
    for a in w:
        # s <- s (1 + v_a); walk degrees downward so new terms are not reused
        for d in range(max_degree - 1, -1, -1):
            src = comps[d]
            if not src:
                continue
            dst = comps[d + 1]
            for mono in src:
                nxt = alg.append(mono, a)
                if nxt is not None:
                    dst ^= {nxt}
    return TruncatedSeries(max_degree, tuple(comps))


def graded_component(a: TruncatedSeries, k: int) -> frozenset:
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k > a.max_degree:
        raise TruncationError(
            f"degree {k} exceeds truncation {a.max_degree}; rerun with a larger max_degree")
    return a.components[k]


def lie_bracket(K: Complex1Skeleton, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """[a, b] = ab + ba over GF(2)."""
    return series_add(series_mul(K, a, b), series_mul(K, b, a))


def not_in_gamma(K: Complex1Skeleton, w: Sequence[int], k: int,
                 max_degree: int | None = None) -> Certificate:
    """CERTIFIED_NOT_IN when the degree-k component of mu(w) is nonzero, else UNKNOWN."""
    if k < 1:
        raise ValueError("k must be at least 1")
    top = k if max_degree is None else max_degree
    if top < k:
        raise TruncationError(f"max_degree {top} is below k = {k}")
    if graded_component(mu(K, w, top), k):
        return Certificate.CERTIFIED_NOT_IN
    return Certificate.UNKNOWN


def render_monomial(mono: Monomial) -> str:
    return "*".join(f"v{a}" for a in mono) if mono else "1"


def render_series(a: TruncatedSeries) -> str:
    terms = a.terms()
    if not terms:
        return "0"
    return " + ".join(render_monomial(t) for t in terms)


def series_to_json(a: TruncatedSeries) -> dict:
    return {str(d): [list(m) for m in sorted(c)]
            for d, c in enumerate(a.components) if c}
