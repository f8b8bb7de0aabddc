"""Selection sorts: published factorizations, round trips, uniqueness."""
import itertools

import pytest

from coxstat.groups import (
    Transposition,
    enumerate_group,
    identity,
    parse_element,
    right_mult_transposition,
)
from coxstat.qpoly import distribution, solomon_product
from coxstat.sorting import (
    factor_weight,
    product_of_factors,
    selection_sort,
    sorting_index,
)


def factors_of(text, tag):
    return [tuple(t) for t in selection_sort(parse_element(text, tag)).factors]


# ---------------------------------------------------------------------------
# published factorizations
# ---------------------------------------------------------------------------

def test_sort_type_a_example():
    cert = selection_sort(parse_element("2 4 3 1 7 5 6", "A"))
    assert [tuple(t) for t in cert.factors] == [(1, 2), (2, 4), (5, 6), (5, 7)]
    assert cert.sor_value == 6


def test_sort_type_b_example():
    cert = selection_sort(parse_element("2 -4 5 -1 -3", "B"))
    assert [tuple(t) for t in cert.factors] == [(1, 2), (-3, 3), (-2, 4), (3, 5)]
    assert cert.sor_value == 13
    # displayed trace, one state per applied factor
    assert [e.word for e in cert.trace] == [
        (2, -4, 5, -1, -3),
        (2, -4, -3, -1, 5),
        (2, 1, -3, 4, 5),
        (2, 1, 3, 4, 5),
        (1, 2, 3, 4, 5),
    ]


def test_sort_type_d_example():
    cert = selection_sort(parse_element("-3 2 4 -5 1", "D"))
    assert [tuple(t) for t in cert.factors] == [(-1, 3), (3, 4), (-4, 5)]
    assert cert.sor_value == 10


def test_sorting_index_reference_values():
    assert sorting_index(parse_element("6 3 7 2 4 5 1", "A")) == 18
    assert sorting_index(parse_element("3 7 1 5 2 4 6", "A")) == 14
    assert sorting_index(identity("A", 5)) == 0
    assert sorting_index(identity("B", 4)) == 0
    assert sorting_index(identity("D", 4)) == 0


def test_identity_certificate_is_empty():
    for tag, n in (("A", 5), ("B", 4), ("D", 4)):
        cert = selection_sort(identity(tag, n))
        assert cert.factors == ()
        assert cert.sor_value == 0
        assert cert.trace == (identity(tag, n),)


def test_terminal_cases_type_d():
    # the four possible states of positions {1, 2} after letters 3..n are placed
    assert factors_of("1 2", "D") == []
    assert factors_of("2 1", "D") == [(1, 2)]
    assert factors_of("-1 -2", "D") == [(-2, 2)]
    assert factors_of("-2 -1", "D") == [(-1, 2)]
    assert sorting_index(parse_element("-1 -2", "D")) == 2
    assert sorting_index(parse_element("-2 -1", "D")) == 1


# ---------------------------------------------------------------------------
# structural invariants
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("tag,n", [("A", 6), ("B", 4), ("D", 4)])
def test_round_trip_and_increasing_j(tag, n):
    floor = 1 if tag == "B" else 2
    for w in enumerate_group(tag, n):
        cert = selection_sort(w)
        js = [t.j for t in cert.factors]
        assert all(a < b for a, b in zip(js, js[1:]))
        assert all(j >= floor for j in js)
        assert product_of_factors(cert.factors, tag, n) == w
        assert cert.sor_value == sum(factor_weight(t, tag) for t in cert.factors)


@pytest.mark.parametrize("tag,n", [("B", 3), ("D", 4)])
def test_trace_validity(tag, n):
    for w in enumerate_group(tag, n):
        cert = selection_sort(w)
        assert cert.trace[0] == w
        assert cert.trace[-1] == identity(tag, n)
        assert len(cert.trace) == len(cert.factors) + 1
        # the sort applies the factors largest-j first
        for state, nxt, t in zip(cert.trace, cert.trace[1:], reversed(cert.factors)):
            assert right_mult_transposition(state, t) == nxt
        if tag == "D":
            for state in cert.trace:
                assert sum(1 for x in state.word if x < 0) % 2 == 0


def test_fast_index_agrees_with_certificate():
    for tag, n in (("A", 5), ("B", 3), ("D", 4)):
        for w in enumerate_group(tag, n):
            assert sorting_index(w) == selection_sort(w).sor_value


def test_never_uses_sign_flip_at_one_in_type_d():
    for w in enumerate_group("D", 4):
        assert all(t != (-1, 1) for t in selection_sort(w).factors)


# ---------------------------------------------------------------------------
# uniqueness of the increasing-j factorization
# ---------------------------------------------------------------------------

def increasing_j_products(tag, n):
    """Map word -> list of factorizations over all strictly-increasing-j
    transposition products (brute force)."""
    floor = 1 if tag == "B" else 2
    per_j = []
    for j in range(floor, n + 1):
        options = [None]
        options += [Transposition(i, j) for i in range(1, j)]
        if tag != "A":
            options += [Transposition(-i, j) for i in range(1, j + 1)]
        per_j.append(options)
    found = {}
    for combo in itertools.product(*per_j):
        factors = tuple(t for t in combo if t is not None)
        w = product_of_factors(factors, tag, n)
        found.setdefault(w.word, []).append(factors)
    return found


@pytest.mark.parametrize("tag,n", [("A", 4), ("B", 3), ("D", 4)])
def test_unique_factorization(tag, n):
    found = increasing_j_products(tag, n)
    elements = list(enumerate_group(tag, n))
    assert len(found) == len(elements)
    for w in elements:
        assert len(found[w.word]) == 1
        assert found[w.word][0] == selection_sort(w).factors


# ---------------------------------------------------------------------------
# distribution
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_sorting_index_is_mahonian(n):
    assert distribution("A", n, "sor") == solomon_product(range(1, n))


def test_product_of_factors_edge_cases():
    assert product_of_factors([], "A", 4) == identity("A", 4)
    assert product_of_factors(
        [Transposition(-1, 3), Transposition(3, 4), Transposition(-4, 5)], "D", 5
    ) == parse_element("-3 2 4 -5 1", "D")
    with pytest.raises(ValueError, match="not valid in type A"):
        product_of_factors([Transposition(-1, 2)], "A", 3)
