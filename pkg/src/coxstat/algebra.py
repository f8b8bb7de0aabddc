"""Formal integer combinations of group elements and the diagonal-sum
factorizations.

A :class:`FormalSum` is a finite map from one-line words to nonzero integer
coefficients, all in one group ``(tag, n)``.  Multiplication extends the
group product bilinearly.  The two factor families built here multiply out,
family by family, to the diagonal sum (every element once), and do so with
every partial product multiplicity-free, which :func:`verify_factorization`
checks stage by stage.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .groups import (
    DEFAULT_MAX_ELEMENTS,
    Element,
    Transposition,
    check_group_size,
    compose_words,
    enumerate_group,
    transposition_word,
)
from .qpoly import BivarPoly
from .stats import stat_function

FACTORIZATIONS = ("psiA", "phiA", "psiB", "phiB", "psiD", "phiD")


@dataclass(frozen=True)
class FormalSum:
    """Integer combination of group elements, keyed by one-line word."""

    tag: str
    n: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", {w: c for w, c in self.terms.items() if c}
        )

    @classmethod
    def of(cls, *elements: Element) -> "FormalSum":
        first = elements[0]
        terms: dict[tuple[int, ...], int] = {}
        for e in elements:
            if (e.tag, e.n) != (first.tag, first.n):
                raise ValueError("elements of different groups in one sum")
            terms[e.word] = terms.get(e.word, 0) + 1
        return cls(first.tag, first.n, terms)

    def _check(self, other: "FormalSum") -> None:
        if (self.tag, self.n) != (other.tag, other.n):
            raise ValueError(
                f"mismatched sums: ({self.tag}, n={self.n}) vs ({other.tag}, n={other.n})"
            )

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FormalSum(self.tag, self.n, terms)

    def __mul__(self, other: "FormalSum") -> "FormalSum":
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = compose_words(wa, wb)
                terms[w] = terms.get(w, 0) + ca * cb
        return FormalSum(self.tag, self.n, terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def monomial_image(
        self,
        q_weight: Callable[[Element], int],
        t_weight: Callable[[Element], int] | None = None,
    ) -> BivarPoly:
        """Apply ``w -> c * q^qw(w) * t^tw(w)`` termwise and sum."""
        terms: dict[tuple[int, int], int] = {}
        for word, c in self.terms.items():
            e = Element(self.tag, word)
            key = (q_weight(e), t_weight(e) if t_weight else 0)
            terms[key] = terms.get(key, 0) + c
        return BivarPoly(terms)


def identity_sum(tag: str, n: int) -> FormalSum:
    return FormalSum(tag, n, {tuple(range(1, n + 1)): 1})


def diagonal_sum(tag: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FormalSum:
    """Every group element with coefficient 1."""
    check_group_size(tag, n, max_elements)
    return FormalSum(tag, n, {w.word: 1 for w in enumerate_group(tag, n, max_elements)})


# ---------------------------------------------------------------------------
# factor construction
# ---------------------------------------------------------------------------

def _simple_word(tag: str, k: int, n: int) -> tuple[int, ...]:
    # k >= 1: adjacent swap (k, k+1); k == 0: the extra simple generator
    # (sign flip at 1 for type B, the barred swap t(-1, 2) for type D)
    if k >= 1:
        return transposition_word(Transposition(k, k + 1), tag, n)
    if tag == "B":
        return transposition_word(Transposition(-1, 1), "B", n)
    return transposition_word(Transposition(-1, 2), "D", n)


def _word_product(tag: str, n: int, ks: Iterable[int]) -> tuple[int, ...]:
    out = tuple(range(1, n + 1))
    for k in ks:
        out = compose_words(out, _simple_word(tag, k, n))
    return out


def psi_factor(tag: str, i: int, n: int) -> FormalSum:
    """The letter-insertion factor: 1 plus the products that walk the new
    largest letter (and, outside type A, its sign) into every position."""
    ident = tuple(range(1, n + 1))
    if tag == "A":
        if not 1 <= i <= n - 1:
            raise ValueError(f"psi index {i} out of range 1..{n - 1}")
        words = [ident, _simple_word("A", 1, n)]
        for k in range(2, i + 1):
            s_k = _simple_word("A", k, n)
            words = [ident] + [compose_words(s_k, u) for u in words]
    elif tag == "B":
        if not 1 <= i <= n:
            raise ValueError(f"psi index {i} out of range 1..{n}")
        words = [ident, _simple_word("B", 0, n)]
        for k in range(2, i + 1):
            s = _simple_word("B", k - 1, n)
            bounce = _word_product(
                "B", n, list(range(k - 1, 0, -1)) + [0] + list(range(1, k))
            )
            words = [ident] + [compose_words(s, u) for u in words] + [bounce]
    else:
        if not 1 <= i <= n - 1:
            raise ValueError(f"psi index {i} out of range 1..{n - 1}")
        words = [
            ident,
            _simple_word("D", 1, n),
            _simple_word("D", 0, n),
            compose_words(_simple_word("D", 1, n), _simple_word("D", 0, n)),
        ]
        for k in range(2, i + 1):
            s = _simple_word("D", k, n)
            bounce = _word_product(
                "D", n, list(range(k, 1, -1)) + [1, 0] + list(range(2, k + 1))
            )
            words = [ident] + [compose_words(s, u) for u in words] + [bounce]
    return FormalSum(tag, n, {w: 1 for w in words})


def phi_factor(tag: str, j: int, n: int) -> FormalSum:
    """The letter-placement factor: 1 plus every transposition that moves the
    letter ``j`` (type A: ``j + 1``) out of its home position."""
    terms = {tuple(range(1, n + 1)): 1}
    if tag == "A":
        if not 1 <= j <= n - 1:
            raise ValueError(f"phi index {j} out of range 1..{n - 1}")
        ts = [Transposition(i, j + 1) for i in range(1, j + 1)]
    else:
        lo = 1 if tag == "B" else 2
        if not lo <= j <= n:
            raise ValueError(f"phi index {j} out of range {lo}..{n}")
        ts = [Transposition(i, j) for i in range(-j, j) if i != 0]
    for t in ts:
        terms[transposition_word(t, tag, n)] = 1
    return FormalSum(tag, n, terms)


def factor_list(which: str, n: int) -> list[FormalSum]:
    """The full factor sequence whose product should be the diagonal sum."""
    if which == "psiA":
        return [psi_factor("A", i, n) for i in range(1, n)]
    if which == "phiA":
        return [phi_factor("A", j, n) for j in range(1, n)]
    if which == "psiB":
        return [psi_factor("B", i, n) for i in range(1, n + 1)]
    if which == "phiB":
        return [phi_factor("B", j, n) for j in range(1, n + 1)]
    if which == "psiD":
        return [psi_factor("D", i, n) for i in range(1, n)]
    if which == "phiD":
        return [phi_factor("D", j, n) for j in range(2, n + 1)]
    raise ValueError(f"unknown factorization {which!r}; expected one of {FACTORIZATIONS}")


def factorization_weights(which: str) -> tuple[str, str | None, bool]:
    """The ``(q, t)`` statistic pair whose termwise image turns each factor
    family into its generating-function identity.

    The third component flags that the t-exponent is the rank minus the
    statistic (the type A identities come out in that reciprocal shape).
    """
    return {
        "psiA": ("inv", "m", True),
        "phiA": ("sor", "rlen", False),
        "psiB": ("inv", "mB", False),
        "phiB": ("sor", "rlen", False),
        "psiD": ("inv", None, False),
        "phiD": ("sor", None, False),
    }[which]


def min_rank(which: str) -> int:
    return 4 if which in ("psiD", "phiD") else 2


def verify_factorization(
    which: str, n: int, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> dict:
    """Multiply the factors left-to-right and compare with the diagonal sum.

    Checks every partial product for multiplicity-freeness and aborts with
    diagnostics on the first violation.  The report is JSON-ready:
    ``{which, n, ok, term_count, multiplicity_free, mismatches}`` with at
    most 10 offending elements listed.
    """
    if which not in FACTORIZATIONS:
        raise ValueError(f"unknown factorization {which!r}; expected one of {FACTORIZATIONS}")
    tag = which[-1]
    if n < min_rank(which):
        raise ValueError(f"{which} requires n >= {min_rank(which)}, got {n}")
    check_group_size(tag, n, max_elements)

    def report(ok: bool, product: FormalSum, free: bool, mismatches: list) -> dict:
        return {
            "which": which,
            "n": n,
            "ok": ok,
            "term_count": len(product),
            "multiplicity_free": free,
            "mismatches": mismatches[:10],
        }

    product = identity_sum(tag, n)
    for stage, factor in enumerate(factor_list(which, n), start=1):
        product = product * factor
        if not product.is_multiplicity_free():
            bad = [
                {"word": list(w), "coefficient": c, "stage": stage}
                for w, c in sorted(product.terms.items())
                if c != 1
            ]
            return report(False, product, False, bad)

    diagonal = diagonal_sum(tag, n, max_elements)
    if product.terms == diagonal.terms:
        return report(True, product, True, [])
    words = set(product.terms) | set(diagonal.terms)
    bad = [
        {
            "word": list(w),
            "coefficient": product.terms.get(w, 0),
            "expected": diagonal.terms.get(w, 0),
        }
        for w in sorted(words)
        if product.terms.get(w, 0) != diagonal.terms.get(w, 0)
    ]
    return report(False, product, True, bad)


def factorization_image(which: str, n: int) -> tuple[BivarPoly, BivarPoly]:
    """Termwise generating-function image of the factor product, computed two
    ways: multiplied factor by factor, and applied to the full product.

    The corollaries behind each family assert exactly that these agree.
    """
    tag = which[-1]
    q_name, t_name, flip_t = factorization_weights(which)
    qf = stat_function(q_name, tag)
    tf: Callable[[Element], int] | None = None
    if t_name:
        base = stat_function(t_name, tag)
        tf = (lambda e: n - base(e)) if flip_t else base

    factors = factor_list(which, n)
    by_factors = BivarPoly.const(1)
    product = identity_sum(tag, n)
    for f in factors:
        by_factors = by_factors * f.monomial_image(qf, tf)
        product = product * f
    return by_factors, product.monomial_image(qf, tf)


def factorization_expected_image(which: str, n: int) -> BivarPoly:
    """Closed form that both sides of :func:`factorization_image` must equal."""
    from .qpoly import closed_B, closed_D, closed_S

    if which in ("psiA", "phiA"):
        return closed_S(n).substitute_t_reciprocal(n)
    if which in ("psiB", "phiB"):
        return closed_B(n)
    return closed_D(n)
