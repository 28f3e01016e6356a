"""Word arithmetic in the right-angled Coxeter group RC_K.

Every generator is an involution, so a group word is just a tuple of
1-based generator indices.  Normal form is the shortlex-least word
representing the element; two words are equal in the group exactly when
their normal forms coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .complexes import Complex1Skeleton
from .traces import check_letters, free_reduce, lex_normal_form

GroupWord = tuple[int, ...]


@dataclass(frozen=True)
class NestedCommutator:
    """Left-normed commutator (g_{i1}, g_{i2}, ..., g_{ik})."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if not idx:
            raise ValueError("nested commutator needs at least one index")
        if len(idx) >= 2 and idx[0] == idx[1]:
            raise ValueError(f"{idx}: first two indices must differ")

    def check(self, K: Complex1Skeleton) -> None:
        check_letters(K, self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return ",".join(map(str, self.indices))


def normalize(K: Complex1Skeleton, w: Sequence[int]) -> GroupWord:
    w = check_letters(K, w)
    return lex_normal_form(K, free_reduce(K, w))


def multiply(K: Complex1Skeleton, u: Sequence[int], v: Sequence[int]) -> GroupWord:
    return normalize(K, tuple(u) + tuple(v))


def inverse(K: Complex1Skeleton, w: Sequence[int]) -> GroupWord:
    return normalize(K, tuple(reversed(tuple(w))))


def commutator(K: Complex1Skeleton, a: Sequence[int], b: Sequence[int]) -> GroupWord:
    """(a, b) = a^-1 b^-1 a b."""
    a, b = tuple(a), tuple(b)
    return normalize(K, a[::-1] + b[::-1] + a + b)


def conjugate(K: Complex1Skeleton, a: Sequence[int], b: Sequence[int]) -> GroupWord:
    """a^b = b^-1 a b."""
    b = tuple(b)
    return normalize(K, b[::-1] + tuple(a) + b)


def nested(K: Complex1Skeleton, *elements: Sequence[int]) -> GroupWord:
    """Left-normed commutator of arbitrary group words."""
    if not elements:
        raise ValueError("empty commutator")
    x = normalize(K, elements[0])
    for y in elements[1:]:
        x = commutator(K, x, y)
    return x


def build_nested(K: Complex1Skeleton, c: NestedCommutator | Sequence[int]) -> GroupWord:
    if not isinstance(c, NestedCommutator):
        c = NestedCommutator(tuple(c))
    c.check(K)
    return nested(K, *[(i,) for i in c.indices])


def is_identity(K: Complex1Skeleton, w: Sequence[int]) -> bool:
    return normalize(K, w) == ()


def parse_word(text: str) -> GroupWord:
    """Whitespace-separated 1-based indices, e.g. ``"2 4 2 4"``; empty means identity."""
    try:
        return tuple(int(t) for t in text.split())
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None


CommutatorExpr = Union[int, tuple]

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_commutator(text: str) -> CommutatorExpr:
    """Parse a commutator expression.

    ``"2,4,3,1"`` is the left-normed commutator (g2, g4, g3, g1);
    parentheses nest, so ``"((2,4),(1,3))"`` is ((g2, g4), (g1, g3)).
    A bare index is the generator itself.
    """
    tokens = []
    for num, sym in _TOKEN.findall(text):
        if num:
            tokens.append(int(num))
        elif sym.strip():
            tokens.append(sym)
    if not tokens:
        raise ValueError("empty commutator expression")
    pos = 0

    def expr():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of {text!r}")
        tok = tokens[pos]
        if isinstance(tok, int):
            pos += 1
            return tok
        if tok != "(":
            raise ValueError(f"unexpected {tok!r} in {text!r}")
        pos += 1
        items = [expr()]
        while pos < len(tokens) and tokens[pos] == ",":
            pos += 1
            items.append(expr())
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"missing ')' in {text!r}")
        pos += 1
        if len(items) < 2:
            return items[0]
        return tuple(items)

    items = [expr()]
    while pos < len(tokens) and tokens[pos] == ",":
        pos += 1
        items.append(expr())
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return items[0] if len(items) == 1 else tuple(items)


def evaluate_commutator(K: Complex1Skeleton, expr: CommutatorExpr) -> GroupWord:
    if isinstance(expr, int):
        return normalize(K, (expr,))
    return nested(K, *[evaluate_commutator(K, e) for e in expr])


def commutator_weight(expr: CommutatorExpr) -> int:
    """Number of generator slots; the element lies in that term of the lower central series."""
    if isinstance(expr, int):
        return 1
    return sum(commutator_weight(e) for e in expr)


def is_simple(expr: CommutatorExpr) -> bool:
    """True for a bare index or a flat left-normed tuple of indices."""
    return isinstance(expr, int) or all(isinstance(e, int) for e in expr)
