"""Group core: parsing, composition, transposition action, enumeration,
cycle structure."""
import itertools
import random

import pytest
from hypothesis import given, strategies as st

from coxstat.groups import (
    Element,
    Transposition,
    all_transpositions,
    compose,
    cycle_decomposition,
    element_from_cycles,
    enumerate_group,
    group_order,
    identity,
    inverse,
    iter_rank_range,
    parse_element,
    rank,
    right_mult_transposition,
    reflection_transpositions,
    simple_transpositions,
    transposition_element,
    unrank,
)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_signed_word():
    w = parse_element("2 -4 5 -1 -3", "B")
    assert w == Element("B", (2, -4, 5, -1, -3))
    assert w.n == 5


def test_parse_identity_and_separators():
    assert parse_element("1 2 3", "A") == identity("A", 3)
    assert parse_element("1,2,3", "A") == identity("A", 3)
    assert parse_element(" 1 ,  2,3 ", "A") == identity("A", 3)
    assert parse_element("+2 +1", "A").word == (2, 1)


def test_parse_type_d_example():
    assert parse_element("-3 2 4 -5 1", "D").word == (-3, 2, 4, -5, 1)


@pytest.mark.parametrize(
    "text,tag,message",
    [
        ("1 x 3", "A", "non-integer"),
        ("1 2 2", "A", "permutation"),
        ("1 5 3", "A", "permutation"),
        ("0 1 2", "A", "nonzero"),
        ("1 -2 3", "A", "all-positive"),
        ("-1 2 3", "D", "even number"),
        ("", "A", "empty"),
        ("1 2", "Q", "unknown group tag"),
        ("1", "D", "n >= 2"),
    ],
)
def test_parse_rejects(text, tag, message):
    with pytest.raises(ValueError, match=message):
        parse_element(text, tag)


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def test_compose_with_identity_both_sides():
    for tag, n in (("A", 4), ("B", 3), ("D", 4)):
        e = identity(tag, n)
        for w in enumerate_group(tag, n):
            assert compose(w, e) == w
            assert compose(e, w) == w


def test_compose_inverse_exhaustive_s4():
    e = identity("A", 4)
    for w in enumerate_group("A", 4):
        assert compose(w, inverse(w)) == e
        assert compose(inverse(w), w) == e


def test_compose_associative_exhaustive():
    # all triples of S_4 and B_3
    for tag, n in (("A", 4), ("B", 3)):
        elements = list(enumerate_group(tag, n))
        for u, v, w in itertools.product(elements, repeat=3):
            assert compose(compose(u, v), w) == compose(u, compose(v, w))


def test_compose_associative_sampled_d4():
    # 192^3 triples is out of unit-test budget; fixed-seed sample instead
    rng = random.Random(20817)
    elements = list(enumerate_group("D", 4))
    for _ in range(20000):
        u, v, w = rng.choice(elements), rng.choice(elements), rng.choice(elements)
        assert compose(compose(u, v), w) == compose(u, compose(v, w))


def test_compose_rejects_mismatched_groups():
    with pytest.raises(ValueError, match="mismatched"):
        compose(identity("A", 3), identity("A", 4))
    with pytest.raises(ValueError, match="mismatched"):
        compose(identity("B", 3), identity("D", 3))


def test_barred_transposition_moves_last_letter():
    # w ending in n, times t(-1, n), gives (-n, w_2, ..., w_{n-1}, -w_1)
    for word in [(3, 1, 2, 4), (-2, 1, -3, 4), (2, -1, -3, 4)]:
        w = Element("B", word)
        res = right_mult_transposition(w, Transposition(-1, 4))
        assert res.word == (-4, word[1], word[2], -word[0])


# ---------------------------------------------------------------------------
# transposition action
# ---------------------------------------------------------------------------

def test_right_mult_examples():
    w = parse_element("2 -4 5 -1 -3", "B")
    assert right_mult_transposition(w, Transposition(3, 5)).word == (2, -4, -3, -1, 5)
    d = parse_element("-3 2 -1 4 5", "D")
    assert right_mult_transposition(d, Transposition(-1, 3)) == identity("D", 5)


def test_right_mult_agrees_with_compose_everywhere():
    for tag, n in (("A", 4), ("B", 3), ("D", 4)):
        ts = all_transpositions(tag, n)
        for w in enumerate_group(tag, n):
            for t in ts:
                fast = right_mult_transposition(w, t)
                slow = compose(w, transposition_element(t, tag, n))
                assert fast == slow


def test_transpositions_are_involutions():
    for tag, n in (("A", 4), ("B", 3), ("D", 4)):
        for t in all_transpositions(tag, n):
            w = unrank(tag, n, group_order(tag, n) // 2)
            twice = right_mult_transposition(right_mult_transposition(w, t), t)
            assert twice == w


def test_d_sign_pair_flip_at_one_is_identity():
    for w in enumerate_group("D", 4):
        assert right_mult_transposition(w, Transposition(-1, 1)) == w


def test_transposition_validation():
    with pytest.raises(ValueError, match="not valid in type A"):
        right_mult_transposition(identity("A", 4), Transposition(-1, 3))
    with pytest.raises(ValueError, match="out of range"):
        right_mult_transposition(identity("B", 3), Transposition(1, 4))
    with pytest.raises(ValueError, match="i != 0"):
        transposition_element(Transposition(0, 2), "B", 3)


def test_generator_inventories():
    assert [tuple(t) for t in simple_transpositions("A", 4)] == [(1, 2), (2, 3), (3, 4)]
    assert [tuple(t) for t in simple_transpositions("B", 3)] == [(-1, 1), (1, 2), (2, 3)]
    assert [tuple(t) for t in simple_transpositions("D", 3)] == [(-1, 2), (1, 2), (2, 3)]
    # type B has n^2 transpositions, all reflections
    assert len(all_transpositions("B", 4)) == 16
    assert reflection_transpositions("B", 4) == all_transpositions("B", 4)
    # type D drops the n sign-pair flips
    assert len(all_transpositions("D", 4)) == 16
    assert len(reflection_transpositions("D", 4)) == 12
    assert all(t.i != -t.j for t in reflection_transpositions("D", 4))


# ---------------------------------------------------------------------------
# enumeration and ranking
# ---------------------------------------------------------------------------

def test_enumeration_counts():
    assert len(list(enumerate_group("A", 3))) == 6
    assert len(list(enumerate_group("B", 2))) == 8
    assert len(list(enumerate_group("D", 4))) == 192


def test_enumeration_no_duplicates_and_lex_order():
    for tag, n in (("A", 5), ("A", 6), ("B", 4), ("B", 5), ("D", 5), ("D", 6)):
        seen = set()
        prev = None
        count = 0
        for w in enumerate_group(tag, n):
            assert w.word not in seen
            seen.add(w.word)
            if prev is not None:
                assert prev < w.word
            prev = w.word
            count += 1
        assert count == group_order(tag, n)


def test_enumeration_cap():
    with pytest.raises(ValueError, match="cap"):
        list(enumerate_group("B", 10, max_elements=1000))
    with pytest.raises(ValueError, match="out of range"):
        list(enumerate_group("D", 1))


def test_unrank_matches_enumeration():
    for tag, n in (("A", 4), ("B", 3), ("D", 4)):
        words = [w.word for w in enumerate_group(tag, n)]
        assert words == [unrank(tag, n, r).word for r in range(len(words))]


def test_rank_unrank_roundtrip_exhaustive():
    for tag, n in (("A", 4), ("B", 3), ("D", 4)):
        for r in range(group_order(tag, n)):
            assert rank(unrank(tag, n, r)) == r


@given(st.sampled_from(["A", "B", "D"]), st.data())
def test_rank_unrank_roundtrip_random(tag, data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    r = data.draw(st.integers(min_value=0, max_value=group_order(tag, n) - 1))
    w = unrank(tag, n, r)
    assert rank(w) == r
    assert w.tag == tag and w.n == n


def test_rank_bounds():
    with pytest.raises(ValueError, match="out of range"):
        unrank("A", 3, 6)
    with pytest.raises(ValueError, match="out of range"):
        unrank("A", 3, -1)


def test_iter_rank_range_partitions_the_stream():
    for tag, n in (("B", 3), ("D", 4)):
        full = [w.word for w in enumerate_group(tag, n)]
        order = group_order(tag, n)
        cuts = [0, order // 3, 2 * order // 3, order]
        stitched = []
        for lo, hi in zip(cuts, cuts[1:]):
            stitched.extend(w.word for w in iter_rank_range(tag, n, lo, hi))
        assert stitched == full


# ---------------------------------------------------------------------------
# cycle structure
# ---------------------------------------------------------------------------

def test_cycle_decomposition_least_last():
    cd = cycle_decomposition(parse_element("6 8 5 9 4 2 3 1 7", "A"))
    assert cd.cycles == ((6, 2, 8, 1), (5, 4, 9, 7, 3))


def test_cycle_decomposition_identity():
    cd = cycle_decomposition(identity("A", 5))
    assert cd.cycles == ((1,), (2,), (3,), (4,), (5,))


def test_cycle_decomposition_signed_example():
    cd = cycle_decomposition(parse_element("3 4 -1 8 7 -6 2 5", "B"))
    assert cd.cycles == ((1, 3, -1, -3), (2, 4, 8, 5, 7), (6, -6))
    assert cd.negative == (True, False, True)
    assert cd.positive_pair_count == 1


def test_cycle_roundtrip():
    for tag, n in (("A", 5), ("B", 3), ("D", 4)):
        for w in enumerate_group(tag, n):
            assert element_from_cycles(cycle_decomposition(w)) == w


def test_transposition_rendering():
    assert str(Transposition(-3, 3)) == "t(-3,3)"
    assert str(Transposition(1, 2)) == "t(1,2)"
