"""Straight selection sort and the factorizations it induces.

Sorting an element places the letters ``n, n-1, ...`` one at a time, each
with the unique transposition that puts the letter (positively signed) at its
home position.  Read in increasing-``j`` order, the recorded transpositions
multiply back to the input, and their weights sum to the sorting index:

    weight(t(i, j)) = j - i - c * (i < 0),   c = 0 (A), 1 (B), 2 (D).

Type B places letters down to ``j = 1`` and may use the sign flip
``t(-j, j)``.  Type D stops at ``j = 2`` (position 1 is then correct by sign
parity) and its ``t(-j, j)`` also negates position 1, which keeps every
intermediate word inside the group.
"""
from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Element,
    Transposition,
    right_mult_word,
    transposition_word,
    compose_words,
)

_SIGN_PENALTY = {"A": 0, "B": 1, "D": 2}


def factor_weight(t: Transposition, tag: str) -> int:
    return t.j - t.i - (_SIGN_PENALTY[tag] if t.i < 0 else 0)


@dataclass(frozen=True)
class SortCertificate:
    """A sort run: factors in increasing-``j`` order, their weight sum, and
    the trace of intermediate words from the input down to the identity."""

    input: Element
    factors: tuple[Transposition, ...]
    sor_value: int
    trace: tuple[Element, ...]


def selection_sort(w: Element) -> SortCertificate:
    """Sort ``w`` and certify the factorization it produces."""
    tag = w.tag
    word = w.word
    trace = [w]
    factors: list[Transposition] = []
    floor = 1 if tag == "B" else 2
    for j in range(w.n, floor - 1, -1):
        i = next(p for p in range(1, w.n + 1) if abs(word[p - 1]) == j)
        if i == j and word[i - 1] == j:
            continue
        t = Transposition(i if word[i - 1] > 0 else -i, j)
        word = right_mult_word(word, t, tag)
        factors.append(t)
        trace.append(Element(tag, word))
    factors.reverse()
    sor_value = sum(factor_weight(t, tag) for t in factors)
    return SortCertificate(w, tuple(factors), sor_value, tuple(trace))


def sorting_index(w: Element) -> int:
    """Sum of the sort's transposition weights (no certificate built)."""
    tag = w.tag
    word = list(w.word)
    n = w.n
    penalty = _SIGN_PENALTY[tag]
    total = 0
    for j in range(n, (1 if tag == "B" else 2) - 1, -1):
        i = next(p for p in range(1, n + 1) if abs(word[p - 1]) == j)
        v = word[i - 1]
        if i == j and v == j:
            continue
        if v > 0:
            word[i - 1], word[j - 1] = word[j - 1], v
            total += j - i
        else:
            if i < j:
                word[i - 1], word[j - 1] = -word[j - 1], -v
            else:
                word[j - 1] = -v
                if tag == "D":
                    word[0] = -word[0]
            total += j + i - penalty
    return total


def product_of_factors(
    factors: list[Transposition] | tuple[Transposition, ...], tag: str, n: int
) -> Element:
    """Right-product of the factors in listed order, starting from the identity."""
    word = tuple(range(1, n + 1))
    for t in factors:
        word = compose_words(word, transposition_word(t, tag, n))
    return Element(tag, word)
