"""Exact sparse polynomials in ``q`` and ``t`` over the integers.

A polynomial is a map ``(q-exponent, t-exponent) -> coefficient`` with no
stored zeros.  Coefficients are Python integers, so every identity check in
the package is exact.  Canonical term order everywhere is ascending
q-exponent, then ascending t-exponent; the text form joins ``c*q^a*t^b``
terms with `` + `` and the JSON form is the sorted list of ``[a, b, c]``
triples.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, Mapping

from .groups import (
    DEFAULT_MAX_ELEMENTS,
    Element,
    check_group_size,
    enumerate_group,
    iter_rank_range,
)
from .stats import stat_function


class BivarPoly:
    """Immutable sparse polynomial in ``q`` and ``t`` with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term q^{a} t^{b}")
            if c:
                clean[(a, b)] = c
        self._terms = clean

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "BivarPoly":
        return cls({(a, b): c})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return BivarPoly(terms)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) - c
        return BivarPoly(terms)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        terms: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivarPoly(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def evaluate(self, q0: Fraction | int, t0: Fraction | int) -> Fraction | int:
        """Exact substitution."""
        return sum(c * q0**a * t0**b for (a, b), c in self._terms.items())

    def substitute_t_reciprocal(self, n: int) -> "BivarPoly":
        """``t^n * p(q, 1/t)``: flip each t-exponent ``b`` to ``n - b``.

        Requires the t-degree of ``p`` to be at most ``n``.
        """
        if any(b > n for (_, b) in self._terms):
            raise ValueError(f"t-degree exceeds {n}; reciprocal substitution undefined")
        return BivarPoly({(a, n - b): c for (a, b), c in self._terms.items()})

    def substitute_t_one(self) -> "BivarPoly":
        """Collapse ``t`` to 1, leaving a polynomial in ``q`` alone."""
        terms: dict[tuple[int, int], int] = {}
        for (a, _), c in self._terms.items():
            terms[(a, 0)] = terms.get((a, 0), 0) + c
        return BivarPoly(terms)

    def substitute_q_one(self) -> "BivarPoly":
        """Collapse ``q`` to 1, leaving a polynomial in ``t`` alone."""
        terms: dict[tuple[int, int], int] = {}
        for (_, b), c in self._terms.items():
            terms[(0, b)] = terms.get((0, b), 0) + c
        return BivarPoly(terms)

    # -- inspection ----------------------------------------------------------

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items())

    def q_degree(self) -> int:
        return max((a for (a, _) in self._terms), default=0)

    def t_degree(self) -> int:
        return max((b for (_, b) in self._terms), default=0)

    def triples(self) -> list[list[int]]:
        """JSON form: sorted ``[q-exp, t-exp, coeff]`` triples."""
        return [[a, b, c] for (a, b), c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = []
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivarPoly({self._terms!r})"


ONE = BivarPoly.const(1)
Q = BivarPoly.monomial(1, 0)
T = BivarPoly.monomial(0, 1)


def q_int(i: int) -> BivarPoly:
    """The q-integer ``1 + q + ... + q^(i-1)``."""
    if i < 1:
        raise ValueError(f"q_int requires i >= 1, got {i}")
    return BivarPoly({(a, 0): 1 for a in range(i)})


def product(factors: Iterable[BivarPoly]) -> BivarPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# closed-form products
# ---------------------------------------------------------------------------

def closed_S(n: int) -> BivarPoly:
    """``prod_{i=1..n} (t + [i]_q - 1)``, the type A bivariate product."""
    if n < 1:
        raise ValueError(f"closed_S requires n >= 1, got {n}")
    return product(T + q_int(i) - ONE for i in range(1, n + 1))


def closed_S_reciprocal(n: int) -> BivarPoly:
    """``prod_{i=1..n} (1 + t*[i]_q - t)``, i.e. ``t^n * closed_S(n)(q, 1/t)``,
    built directly from its own factors."""
    if n < 1:
        raise ValueError(f"closed_S_reciprocal requires n >= 1, got {n}")
    return product(ONE + T * q_int(i) - T for i in range(1, n + 1))


def closed_B(n: int) -> BivarPoly:
    """``prod_{i=1..n} (1 + t*[2i]_q - t)``, the type B bivariate product."""
    if n < 1:
        raise ValueError(f"closed_B requires n >= 1, got {n}")
    return product(ONE + T * q_int(2 * i) - T for i in range(1, n + 1))


def closed_B_reciprocal(n: int) -> BivarPoly:
    """``prod_{i=1..n} (t + [2i]_q - 1)``, i.e. ``t^n * closed_B(n)(q, 1/t)``,
    built directly from its own factors."""
    if n < 1:
        raise ValueError(f"closed_B_reciprocal requires n >= 1, got {n}")
    return product(T + q_int(2 * i) - ONE for i in range(1, n + 1))


def closed_D(n: int) -> BivarPoly:
    """``[n]_q * prod_{i=1..n-1} [2i]_q``, univariate in ``q``."""
    if n < 2:
        raise ValueError(f"closed_D requires n >= 2, got {n}")
    return q_int(n) * product(q_int(2 * i) for i in range(1, n))


def closed_W(exponents: Iterable[int]) -> BivarPoly:
    """``prod_i (1 + t*[e_i + 1]_q - t)`` from a list of exponents."""
    exps = list(exponents)
    if not exps:
        raise ValueError("empty exponent list")
    if any(e < 1 for e in exps):
        raise ValueError(f"exponents must be positive: {exps}")
    return product(ONE + T * q_int(e + 1) - T for e in exps)


def coxeter_exponents(tag: str, n: int) -> list[int]:
    """Exponent list of the rank-appropriate group behind ``(tag, n)``.

    ``(A, n)`` means the symmetric group on ``n`` letters, whose rank is
    ``n - 1``; its exponents are ``1..n-1`` (one fewer than the Cartan label
    ``A_n`` would suggest).
    """
    if tag == "A":
        if n < 1:
            raise ValueError("type A needs n >= 1")
        return list(range(1, n))
    if tag == "B":
        if n < 1:
            raise ValueError("type B needs n >= 1")
        return [2 * i - 1 for i in range(1, n + 1)]
    if tag == "D":
        if n < 2:
            raise ValueError("type D needs n >= 2")
        return [2 * i - 1 for i in range(1, n)] + [n - 1]
    raise ValueError(f"unknown tag {tag!r}")


def solomon_product(exponents: Iterable[int]) -> BivarPoly:
    """``prod_i [e_i + 1]_q``: the length generating function."""
    return product(q_int(e + 1) for e in exponents)


def shephard_todd_product(exponents: Iterable[int]) -> BivarPoly:
    """``prod_i (1 + e_i * t)``: the reflection-length generating function."""
    return product(ONE + BivarPoly.monomial(0, 1, e) for e in exponents)


# ---------------------------------------------------------------------------
# empirical joint distributions
# ---------------------------------------------------------------------------

def distribution(
    tag: str,
    n: int,
    q_stat: str,
    t_stat: str | None = None,
    threads: int = 1,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> BivarPoly:
    """Exact sum of ``q^(q_stat(w)) * t^(t_stat(w))`` over the whole group.

    With ``threads > 1`` the enumeration is partitioned into disjoint rank
    ranges whose partial term maps are merged by coefficient addition; the
    result does not depend on the partitioning.
    """
    qf = stat_function(q_stat, tag)
    tf = stat_function(t_stat, tag) if t_stat else None
    order = check_group_size(tag, n, max_elements)

    def accumulate(elements: Iterable[Element]) -> dict[tuple[int, int], int]:
        terms: dict[tuple[int, int], int] = {}
        for w in elements:
            key = (qf(w), tf(w) if tf else 0)
            terms[key] = terms.get(key, 0) + 1
        return terms

    if threads <= 1:
        return BivarPoly(accumulate(enumerate_group(tag, n, max_elements)))

    bounds = [order * k // threads for k in range(threads + 1)]
    ranges = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(
            pool.map(lambda r: accumulate(iter_rank_range(tag, n, *r)), ranges)
        )
    terms: dict[tuple[int, int], int] = {}
    for part in partials:
        for key, c in part.items():
            terms[key] = terms.get(key, 0) + c
    return BivarPoly(terms)
