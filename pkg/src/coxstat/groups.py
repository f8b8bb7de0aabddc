"""Elements of the finite reflection groups of types A, B and D.

Conventions used throughout the package:

- An element is stored by its one-line word ``w = (w_1, ..., w_n)`` of signed
  integers with ``{|w_1|, ..., |w_n|} = {1, ..., n}``.  The word encodes the
  bijection ``w(i) = w_i`` extended to negative arguments by ``w(-i) = -w(i)``.
  Type A words are all-positive; type D words carry an even number of minus
  signs.  Minus signs stand for bars in all I/O.
- Composition is ``(u * v)(k) = u(v(k))``: the right factor acts first.
  Consequently, right-multiplying by a transposition permutes *positions* of
  the one-line word.
- ``t(i, j)`` with ``0 < i < j`` swaps ``i`` with ``j`` and ``-i`` with ``-j``.
  ``t(-i, j)`` with ``0 < i <= j`` swaps ``i`` with ``-j`` and ``-i`` with
  ``j``; in particular ``t(-j, j)`` flips the sign of ``j``.  In a type D
  context ``t(-j, j)`` instead negates both positions 1 and ``j`` (so it stays
  inside the even-sign subgroup) and ``t(-1, 1)`` is the identity.
- Enumeration is in lexicographic order of the signed words, so ranks are
  stable and disjoint rank ranges can be scanned independently.

All values are immutable and all functions are pure.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

TAGS = ("A", "B", "D")

#: Hard ceiling on the number of elements any enumeration is allowed to touch.
DEFAULT_MAX_ELEMENTS = 2_000_000

_TOKEN_SPLIT = re.compile(r"[,\s]+")


class Transposition(NamedTuple):
    """A (possibly signed) transposition ``t(i, j)``.

    ``j`` is positive and ``-j <= i < j`` with ``i != 0``.  Negative ``i``
    encodes a barred index.
    """

    i: int
    j: int

    def __str__(self) -> str:
        return f"t({self.i},{self.j})"


@dataclass(frozen=True)
class Element:
    """A group element, identified by its tag and one-line word."""

    tag: str
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_word(self.word, self.tag)

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.word)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of an element.

    Type A: cycles over ``{1..n}``, each rotated so its least element comes
    last, sorted by least element.  Types B/D: one representative per orbit
    pair of the action on ``+-{1..n}``, starting at the smallest absolute
    value (positively signed); ``negative[k]`` is True when the cycle is its
    own mirror, i.e. contains both ``x`` and ``-x``.
    """

    tag: str
    n: int
    cycles: tuple[tuple[int, ...], ...]
    negative: tuple[bool, ...] = field(default=())

    @property
    def positive_pair_count(self) -> int:
        return sum(1 for neg in self.negative if not neg)


def _validate_word(word: Sequence[int], tag: str) -> None:
    if tag not in TAGS:
        raise ValueError(f"unknown group tag {tag!r}; expected one of {TAGS}")
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    if any(x == 0 for x in word):
        raise ValueError("word entries must be nonzero")
    if {abs(x) for x in word} != set(range(1, n + 1)):
        raise ValueError(f"absolute values must be a permutation of 1..{n}: {list(word)}")
    negatives = sum(1 for x in word if x < 0)
    if tag == "A" and negatives:
        raise ValueError("type A words must be all-positive")
    if tag == "D":
        if n < 2:
            raise ValueError("type D requires n >= 2")
        if negatives % 2:
            raise ValueError("type D words must carry an even number of minus signs")


def parse_element(text: str, tag: str) -> Element:
    """Parse a whitespace- or comma-separated signed word.

    >>> parse_element("2 -4 5 -1 -3", "B").word
    (2, -4, 5, -1, -3)
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    if not tokens:
        raise ValueError("empty word")
    word = []
    for t in tokens:
        try:
            word.append(int(t))
        except ValueError:
            raise ValueError(f"non-integer token {t!r}") from None
    return Element(tag, tuple(word))


def identity(tag: str, n: int) -> Element:
    return Element(tag, tuple(range(1, n + 1)))


def is_identity(w: Element) -> bool:
    return all(x == k for k, x in enumerate(w.word, start=1))


# ---------------------------------------------------------------------------
# word-level primitives (raw tuples; used by the hot loops in other modules)
# ---------------------------------------------------------------------------

def apply_word(word: tuple[int, ...], k: int) -> int:
    """The value ``w(k)`` for ``k`` in ``+-{1..n}``."""
    return word[k - 1] if k > 0 else -word[-k - 1]


def compose_words(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """One-line word of ``u * v`` where ``(u * v)(k) = u(v(k))``."""
    return tuple(u[m - 1] if m > 0 else -u[-m - 1] for m in v)


def inverse_word(word: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(word)
    for k, m in enumerate(word, start=1):
        if m > 0:
            out[m - 1] = k
        else:
            out[-m - 1] = -k
    return tuple(out)


def transposition_word(t: Transposition, tag: str, n: int) -> tuple[int, ...]:
    """One-line word of ``t`` as an element of the tagged group of rank ``n``."""
    validate_transposition(t, tag, n)
    i, j = t
    w = list(range(1, n + 1))
    if i == -j:
        if tag == "D":
            # negates positions 1 and j; t(-1, 1) is the identity here
            if j != 1:
                w[0] = -1
                w[j - 1] = -j
        else:
            w[j - 1] = -j
    elif i > 0:
        w[i - 1], w[j - 1] = j, i
    else:
        w[-i - 1], w[j - 1] = -j, i
    return tuple(w)


def right_mult_word(word: tuple[int, ...], t: Transposition, tag: str) -> tuple[int, ...]:
    """Fast path for ``word * t`` (equals composing with the word of ``t``)."""
    i, j = t
    w = list(word)
    if i == -j:
        if tag == "D":
            if j != 1:
                w[0] = -w[0]
                w[j - 1] = -w[j - 1]
        else:
            w[j - 1] = -w[j - 1]
    elif i > 0:
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    else:
        w[-i - 1], w[j - 1] = -w[j - 1], -w[-i - 1]
    return tuple(w)


# ---------------------------------------------------------------------------
# element-level operations
# ---------------------------------------------------------------------------

def _check_same_group(u: Element, v: Element) -> None:
    if u.tag != v.tag or u.n != v.n:
        raise ValueError(
            f"mismatched operands: ({u.tag}, n={u.n}) vs ({v.tag}, n={v.n})"
        )


def compose(u: Element, v: Element) -> Element:
    """Product ``u * v``; the right factor acts first on positions."""
    _check_same_group(u, v)
    return Element(u.tag, compose_words(u.word, v.word))


def inverse(w: Element) -> Element:
    return Element(w.tag, inverse_word(w.word))


def validate_transposition(t: Transposition, tag: str, n: int) -> None:
    i, j = t
    if not (1 <= j <= n):
        raise ValueError(f"transposition {t} out of range for n={n}")
    if i == 0 or not (-j <= i < j):
        raise ValueError(f"invalid transposition indices {t}: need -j <= i < j, i != 0")
    if tag == "A" and i < 0:
        raise ValueError(f"barred transposition {t} is not valid in type A")


def transposition_element(t: Transposition, tag: str, n: int) -> Element:
    return Element(tag, transposition_word(t, tag, n))


def right_mult_transposition(w: Element, t: Transposition) -> Element:
    """``w * t``, computed by swapping positions of the one-line word.

    >>> w = parse_element("2 -4 5 -1 -3", "B")
    >>> str(right_mult_transposition(w, Transposition(3, 5)))
    '2 -4 -3 -1 5'
    """
    validate_transposition(t, w.tag, w.n)
    return Element(w.tag, right_mult_word(w.word, t, w.tag))


def all_transpositions(tag: str, n: int) -> list[Transposition]:
    """Every valid transposition for the tag, in increasing ``(j, i)`` order.

    For type D this includes the sign-pair flips ``t(-j, j)``, which are valid
    group elements but not reflections; see :func:`reflection_transpositions`.
    """
    out = []
    for j in range(1, n + 1):
        lo = 1 if tag == "A" else -j
        for i in range(lo, j):
            if i != 0:
                out.append(Transposition(i, j))
    return out


def reflection_transpositions(tag: str, n: int) -> list[Transposition]:
    """The transpositions that are reflections (conjugates of the simple ones)."""
    if tag in ("A", "B"):
        return all_transpositions(tag, n)
    return [t for t in all_transpositions("D", n) if t.i != -t.j]


def simple_transpositions(tag: str, n: int) -> list[Transposition]:
    """The simple generating set of the tagged group."""
    adjacent = [Transposition(i, i + 1) for i in range(1, n)]
    if tag == "A":
        return adjacent
    if tag == "B":
        return [Transposition(-1, 1)] + adjacent
    return [Transposition(-1, 2)] + adjacent


# ---------------------------------------------------------------------------
# enumeration: lexicographic order, rank/unrank, streaming
# ---------------------------------------------------------------------------

def group_order(tag: str, n: int) -> int:
    if tag == "A":
        return math.factorial(n)
    if tag == "B":
        return (1 << n) * math.factorial(n)
    return (1 << (n - 1)) * math.factorial(n)


def check_group_size(tag: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    if n < 1 or (tag == "D" and n < 2):
        raise ValueError(f"rank n={n} out of range for type {tag}")
    order = group_order(tag, n)
    if order > max_elements:
        raise ValueError(
            f"group ({tag}, n={n}) has {order} elements, above the cap {max_elements}"
        )
    return order


def _candidates(remaining: list[int], tag: str) -> list[int]:
    # available values in increasing order: -a_max .. -a_min, a_min .. a_max
    if tag == "A":
        return remaining
    return [-a for a in reversed(remaining)] + remaining


def _block_size(tag: str, slots_left: int) -> int:
    # completions per candidate once `slots_left` positions remain to fill
    if tag == "A":
        return math.factorial(slots_left)
    if tag == "B":
        return (1 << slots_left) * math.factorial(slots_left)
    # type D: any prefix parity admits exactly half of the sign patterns,
    # provided at least one free slot remains
    return (1 << (slots_left - 1)) * math.factorial(slots_left) if slots_left else 1

def enumerate_group(
    tag: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> Iterator[Element]:
    """Yield every element exactly once, in lexicographic word order."""
    check_group_size(tag, n, max_elements)
    for word in _iter_words(tag, n):
        yield Element(tag, word)


def _iter_words(tag: str, n: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def rec(remaining: list[int], negatives: int) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(prefix)
            return
        last = len(remaining) == 1
        for v in _candidates(remaining, tag):
            if tag == "D" and last and (negatives + (v < 0)) % 2:
                continue
            prefix.append(v)
            rest = [a for a in remaining if a != abs(v)]
            yield from rec(rest, negatives + (v < 0))
            prefix.pop()

    return rec(list(range(1, n + 1)), 0)


def unrank(tag: str, n: int, r: int) -> Element:
    """The element of lexicographic rank ``r`` (0-based)."""
    order = group_order(tag, n)
    if not 0 <= r < order:
        raise ValueError(f"rank {r} out of range 0..{order - 1}")
    remaining = list(range(1, n + 1))
    word: list[int] = []
    negatives = 0
    for pos in range(n):
        slots_left = n - pos - 1
        cands = _candidates(remaining, tag)
        if tag == "D" and slots_left == 0:
            cands = [v for v in cands if (negatives + (v < 0)) % 2 == 0]
        block = _block_size(tag, slots_left)
        idx, r = divmod(r, block)
        v = cands[idx]
        word.append(v)
        negatives += v < 0
        remaining.remove(abs(v))
    return Element(tag, tuple(word))


def rank(w: Element) -> int:
    """Lexicographic rank; inverse of :func:`unrank`."""
    remaining = list(range(1, w.n + 1))
    r = 0
    negatives = 0
    for pos, v in enumerate(w.word):
        slots_left = w.n - pos - 1
        cands = _candidates(remaining, w.tag)
        if w.tag == "D" and slots_left == 0:
            cands = [c for c in cands if (negatives + (c < 0)) % 2 == 0]
        r += cands.index(v) * _block_size(w.tag, slots_left)
        negatives += v < 0
        remaining.remove(abs(v))
    return r


def iter_rank_range(tag: str, n: int, start: int, stop: int) -> Iterator[Element]:
    """Stream the elements with ranks in ``[start, stop)``.

    Constructible independently for disjoint ranges, which is what the
    partitioned scans in the distribution code rely on.
    """
    for r in range(start, stop):
        yield unrank(tag, n, r)


# ---------------------------------------------------------------------------
# cycle structure
# ---------------------------------------------------------------------------

def cycle_decomposition(w: Element) -> CycleDecomposition:
    """Disjoint cycles of ``w``; see :class:`CycleDecomposition` for the form.

    >>> cd = cycle_decomposition(parse_element("6 8 5 9 4 2 3 1 7", "A"))
    >>> cd.cycles
    ((6, 2, 8, 1), (5, 4, 9, 7, 3))
    """
    if w.tag == "A":
        cycles = []
        seen = set()
        for s in range(1, w.n + 1):
            if s in seen:
                continue
            orbit = [s]
            seen.add(s)
            k = w.word[s - 1]
            while k != s:
                seen.add(k)
                orbit.append(k)
                k = w.word[k - 1]
            # rotate so the least element (the orbit start, by scan order) is last
            cycles.append(tuple(orbit[1:] + orbit[:1]))
        return CycleDecomposition("A", w.n, tuple(cycles))

    cycles = []
    negative = []
    seen: set[int] = set()
    for s in range(1, w.n + 1):
        if s in seen or -s in seen:
            continue
        orbit = [s]
        seen.add(s)
        k = apply_word(w.word, s)
        while k != s:
            orbit.append(k)
            seen.add(k)
            k = apply_word(w.word, k)
        is_negative = any(-x in orbit for x in orbit)
        if not is_negative:
            seen.update(-x for x in orbit)
        cycles.append(tuple(orbit))
        negative.append(is_negative)
    return CycleDecomposition(w.tag, w.n, tuple(cycles), tuple(negative))


def element_from_cycles(cd: CycleDecomposition) -> Element:
    """Rebuild the element; inverse of :func:`cycle_decomposition`."""
    images: dict[int, int] = {}
    for cycle in cd.cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
            images[-a] = -b
    word = tuple(images.get(k, k) for k in range(1, cd.n + 1))
    return Element(cd.tag, word)
