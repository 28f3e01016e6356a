"""GF(2) linear algebra on bit-packed rows.

Rows are Python ints used as bitsets: bit ``c`` is the coefficient of
column ``c``.  Columns of a :class:`Gf2Matrix` are labelled by monomials
(tuples of letters) kept in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def monomial_key(mono: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Canonical monomial order: degree first, then lexicographic."""
    return (len(mono), mono)


def rank_of_rows(rows: Iterable[int]) -> int:
    """Row rank over GF(2) of int-bitset rows."""
    # pivots keyed by leading bit; each stored row is reduced against the others' leads
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = row
                break
            row ^= pivots[lead]
    return len(pivots)


def reduce_against(row: int, pivots: dict[int, int]) -> int:
    while row:
        lead = row.bit_length() - 1
        if lead not in pivots:
            return row
        row ^= pivots[lead]
    return 0


def echelon(rows: Iterable[int]) -> dict[int, int]:
    pivots: dict[int, int] = {}
    for row in rows:
        row = reduce_against(row, pivots)
        if row:
            pivots[row.bit_length() - 1] = row
    return pivots


@dataclass(frozen=True)
class Gf2Matrix:
    basis: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        if list(self.basis) != sorted(set(self.basis), key=monomial_key):
            raise ValueError("basis must be duplicate-free and canonically sorted")
        width = len(self.basis)
        for r in self.rows:
            if r < 0 or r.bit_length() > width:
                raise ValueError("row has bits outside the basis")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.basis))

    def vector(self, monomials: Iterable[tuple[int, ...]]) -> int:
        """Bit vector of a monomial set over this matrix's basis."""
        index = {b: c for c, b in enumerate(self.basis)}
        v = 0
        for mono in monomials:
            try:
                v ^= 1 << index[mono]
            except KeyError:
                raise ValueError(f"monomial {mono} is not in the basis") from None
        return v

    def to_lists(self) -> list[list[int]]:
        n = len(self.basis)
        return [[(r >> c) & 1 for c in range(n)] for r in self.rows]


def vectorize(monomial_sets: Sequence[Iterable[tuple[int, ...]]],
              basis: Sequence[tuple[int, ...]] | None = None) -> Gf2Matrix:
    """Stack monomial sets as GF(2) rows over their common canonical basis.

    All monomials must share one degree.  ``basis`` may be given to embed
    the rows into a larger fixed column set.
    """
    sets = [frozenset(s) for s in monomial_sets]
    support = set().union(*sets) if sets else set()
    if basis is None:
        cols = sorted(support, key=monomial_key)
    else:
        cols = sorted(set(basis), key=monomial_key)
        missing = support - set(cols)
        if missing:
            raise ValueError(f"monomials outside the given basis: {sorted(missing)[:3]}")
    degrees = {len(m) for m in cols}
    if len(degrees) > 1:
        raise ValueError(f"mixed degrees in vectorize: {sorted(degrees)}")
    index = {b: c for c, b in enumerate(cols)}
    rows = []
    for s in sets:
        v = 0
        for mono in s:
            v |= 1 << index[mono]
        rows.append(v)
    return Gf2Matrix(tuple(cols), tuple(rows))


def rank(mat: Gf2Matrix) -> int:
    return rank_of_rows(mat.rows)


def in_span(mat: Gf2Matrix, v: int) -> bool:
    """True iff ``v`` lies in the row space of ``mat``."""
    if v < 0 or v.bit_length() > len(mat.basis):
        raise ValueError("vector is not over the matrix basis")
    return reduce_against(v, echelon(mat.rows)) == 0


def same_span(a: Gf2Matrix, b: Gf2Matrix) -> bool:
    """Row spaces equal, after aligning both matrices on the union basis."""
    cols = sorted(set(a.basis) | set(b.basis), key=monomial_key)
    a2 = _rebase(a, cols)
    b2 = _rebase(b, cols)
    ea = echelon(a2.rows)
    if any(reduce_against(r, ea) for r in b2.rows):
        return False
    eb = echelon(b2.rows)
    return not any(reduce_against(r, eb) for r in a2.rows)


def _rebase(mat: Gf2Matrix, cols: list[tuple[int, ...]]) -> Gf2Matrix:
    index = {b: c for c, b in enumerate(cols)}
    rows = []
    for r in mat.rows:
        v = 0
        for c, mono in enumerate(mat.basis):
            if (r >> c) & 1:
                v |= 1 << index[mono]
        rows.append(v)
    return Gf2Matrix(tuple(cols), tuple(rows))


def rank_dense(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a 0/1 matrix given as nested lists (boundary matrices)."""
    rows = []
    for line in matrix:
        v = 0
        for c, bit in enumerate(line):
            if bit & 1:
                v |= 1 << c
        rows.append(v)
    return rank_of_rows(rows)
