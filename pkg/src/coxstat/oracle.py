"""Ground-truth word lengths via breadth-first search over Cayley graphs.

The BFS runs from the identity with right multiplication over the whole
group, keyed by one-line words.  It is the authoritative value for length
(simple generators) and reflection length (reflection generators); the
closed-form and cycle-structure routes elsewhere in the package defer to it
in the test suite.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    Element,
    Transposition,
    compose_words,
    group_order,
    reflection_transpositions,
    simple_transpositions,
    transposition_word,
)
from .qpoly import BivarPoly

#: group-order cap for a BFS run
DEFAULT_GROUP_CAP = 2_000_000
#: cap on generator count times group order (edge relaxations)
DEFAULT_EDGE_CAP = 100_000_000

GENERATOR_KINDS = ("simple", "reflections")


@dataclass(frozen=True)
class GeneratorSet:
    """A named generating set: the simple generators or all reflections."""

    tag: str
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.tag not in ("A", "B", "D"):
            raise ValueError(f"unknown group tag {self.tag!r}")
        if self.n < 1 or (self.tag == "D" and self.n < 2):
            raise ValueError(f"rank n={self.n} out of range for type {self.tag}")

    def transpositions(self) -> list[Transposition]:
        if self.kind == "simple":
            return simple_transpositions(self.tag, self.n)
        return reflection_transpositions(self.tag, self.n)


@lru_cache(maxsize=32)
def _bfs_words(
    tag: str, kind: str, n: int, group_cap: int, edge_cap: int
) -> dict[tuple[int, ...], int]:
    gen = GeneratorSet(tag, kind, n)
    order = group_order(tag, n)
    if order > group_cap:
        raise ValueError(f"group order {order} above BFS cap {group_cap}")
    gens = [transposition_word(t, tag, n) for t in gen.transpositions()]
    if order * len(gens) > edge_cap:
        raise ValueError(
            f"{order * len(gens)} edge relaxations above BFS cap {edge_cap}"
        )
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        u = frontier.popleft()
        du = dist[u] + 1
        for g in gens:
            v = compose_words(u, g)
            if v not in dist:
                dist[v] = du
                frontier.append(v)
    if len(dist) != order:
        raise AssertionError(
            f"BFS reached {len(dist)} of {order} elements; generator set broken"
        )
    return dist


def bfs_table(
    gen: GeneratorSet,
    group_cap: int = DEFAULT_GROUP_CAP,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> dict[tuple[int, ...], int]:
    """Exact distance from the identity for every element, keyed by word.

    Tables are cached per generator set and shared read-only.
    """
    return _bfs_words(gen.tag, gen.kind, gen.n, group_cap, edge_cap)


def distance(gen: GeneratorSet, w: Element) -> int:
    if (w.tag, w.n) != (gen.tag, gen.n):
        raise ValueError(f"element of ({w.tag}, n={w.n}) queried against {gen}")
    return bfs_table(gen)[w.word]


def distance_distribution(gen: GeneratorSet) -> BivarPoly:
    """``sum_w x^dist(w)`` with ``x = q`` for simple generators and ``x = t``
    for reflections, matching the classical generating functions."""
    table = bfs_table(gen)
    terms: dict[tuple[int, int], int] = {}
    for d in table.values():
        key = (d, 0) if gen.kind == "simple" else (0, d)
        terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms)


def check_generating_function(gen: GeneratorSet, expected: BivarPoly) -> bool:
    """Compare the BFS distance distribution against a closed form."""
    return distance_distribution(gen) == expected


def table_csv(gen: GeneratorSet) -> str:
    """CSV export of the distance table: ``word,distance`` rows in
    lexicographic word order."""
    table = bfs_table(gen)
    out = io.StringIO()
    out.write("word,distance\n")
    for word in sorted(table):
        out.write(f"{' '.join(str(x) for x in word)},{table[word]}\n")
    return out.getvalue()
