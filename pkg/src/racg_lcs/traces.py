"""Partially commutative words: lexicographic normal form and square detection.

Two letters commute when they are distinct and joined by an edge.  All
helpers take the complex only through ``K.neighbours``.
"""

from __future__ import annotations

from typing import Sequence

from .complexes import Complex1Skeleton


def check_letters(K: Complex1Skeleton, letters: Sequence[int]) -> tuple[int, ...]:
    letters = tuple(letters)
    for a in letters:
        if not isinstance(a, int) or a < 1 or a > K.m:
            raise ValueError(f"letter {a!r} outside 1..{K.m}")
    return letters


def lex_normal_form(K: Complex1Skeleton, letters: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least word in the commutation class of ``letters``.

    Greedy: repeatedly emit the smallest letter that can be brought to the
    front, i.e. whose earlier letters all commute with it.
    """
    rest = list(letters)
    out = []
    while rest:
        seen = 0
        best = None
        for p, a in enumerate(rest):
            if not (seen & ~K.neighbours(a)) and (best is None or a < rest[best]):
                best = p
            seen |= 1 << a
        out.append(rest.pop(best))
    return tuple(out)


def has_square(K: Complex1Skeleton, letters: Sequence[int]) -> bool:
    """True iff two equal letters can be made adjacent by commutations.

    That happens exactly when some letter occurs twice with every letter
    strictly between the two occurrences commuting with it.
    """
    n = len(letters)
    for i in range(n):
        a = letters[i]
        nbr = K.neighbours(a)
        for j in range(i + 1, n):
            b = letters[j]
            if b == a:
                return True
            if not (nbr >> b) & 1:
                break
    return False


def free_reduce(K: Complex1Skeleton, letters: Sequence[int]) -> tuple[int, ...]:
    """Geodesic word for the same element of the right-angled Coxeter group.

    Letters are appended one at a time; an incoming letter cancels against
    the last occurrence of itself that only commuting letters follow.
    """
    out: list[int] = []
    for a in letters:
        nbr = K.neighbours(a)
        for p in range(len(out) - 1, -1, -1):
            b = out[p]
            if b == a:
                del out[p]
                break
            if not (nbr >> b) & 1:
                out.append(a)
                break
        else:
            out.append(a)
    return tuple(out)
