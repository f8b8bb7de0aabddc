"""Cycle-form bijection and the transposition code, type A only.

``fundamental_bijection`` rewrites a permutation in canonical cycle form
(least element of each cycle last, cycles sorted by least element) and drops
the parentheses.  It carries the cycle count to the right-to-left minimum
count.  It does *not* carry the sorting index to the inversion number; the
test suite pins a counterexample.
"""
from __future__ import annotations

from .groups import Element, cycle_decomposition
from .sorting import selection_sort


def _require_a(w: Element) -> None:
    if w.tag != "A":
        raise ValueError(f"defined for type A only, got type {w.tag}")


def fundamental_bijection(w: Element) -> Element:
    """Concatenate the canonical cycle words into a new one-line word.

    >>> str(fundamental_bijection(Element("A", (6, 8, 5, 9, 4, 2, 3, 1, 7))))
    '6 2 8 1 5 4 9 7 3'
    """
    _require_a(w)
    word: list[int] = []
    for cycle in cycle_decomposition(w).cycles:
        word.extend(cycle)
    return Element("A", tuple(word))


def fundamental_bijection_inverse(v: Element) -> Element:
    """Split the word after each right-to-left minimum and read the pieces as
    cycles; inverse of :func:`fundamental_bijection`."""
    _require_a(v)
    segments: list[list[int]] = []
    current: list[int] = []
    lowest = v.n + 1
    breaks = set()
    for idx in range(v.n - 1, -1, -1):
        if v.word[idx] < lowest:
            lowest = v.word[idx]
            breaks.add(idx)
    for idx, x in enumerate(v.word):
        current.append(x)
        if idx in breaks:
            segments.append(current)
            current = []
    images = {}
    for seg in segments:
        # in cycle form each letter maps to the one written after it
        for a, b in zip(seg, seg[1:] + seg[:1]):
            images[a] = b
    return Element("A", tuple(images[k] for k in range(1, v.n + 1)))


def b_code(w: Element) -> tuple[int, ...]:
    """Vector ``(b_1..b_n)`` with ``b_j = j - i`` for each sorting factor
    ``t(i, j)`` and 0 elsewhere; components sum to the sorting index."""
    _require_a(w)
    code = [0] * w.n
    for t in selection_sort(w).factors:
        code[t.j - 1] = t.j - t.i
    return tuple(code)
