"""BFS distance tables against statistics and classical products."""
import pytest

from coxstat.groups import enumerate_group, group_order, inverse, parse_element
from coxstat.oracle import (
    GeneratorSet,
    bfs_table,
    check_generating_function,
    distance,
    distance_distribution,
    table_csv,
)
from coxstat.qpoly import (
    BivarPoly,
    closed_D,
    coxeter_exponents,
    product,
    q_int,
    shephard_todd_product,
    solomon_product,
)
from coxstat.stats import cycle_count, inversions, reflection_length


def test_generator_set_validation():
    with pytest.raises(ValueError, match="unknown generator kind"):
        GeneratorSet("A", "gens", 3)
    with pytest.raises(ValueError, match="unknown group tag"):
        GeneratorSet("E", "simple", 3)
    with pytest.raises(ValueError, match="out of range"):
        GeneratorSet("D", "simple", 1)


def test_simple_bfs_s3():
    table = bfs_table(GeneratorSet("A", "simple", 3))
    assert len(table) == 6
    assert max(table.values()) == 3
    assert distance_distribution(GeneratorSet("A", "simple", 3)) == BivarPoly(
        {(0, 0): 1, (1, 0): 2, (2, 0): 2, (3, 0): 1}
    )


@pytest.mark.parametrize("tag,n", [("A", 5), ("A", 6), ("B", 3), ("B", 4), ("D", 4)])
def test_simple_distance_equals_inversions(tag, n):
    table = bfs_table(GeneratorSet(tag, "simple", n))
    assert len(table) == group_order(tag, n)
    for w in enumerate_group(tag, n):
        assert table[w.word] == inversions(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_reflection_distance_is_corank_type_a(n):
    table = bfs_table(GeneratorSet("A", "reflections", n))
    for w in enumerate_group("A", n):
        assert table[w.word] == n - cycle_count(w)


def test_reflection_distribution_b3():
    gen = GeneratorSet("B", "reflections", 3)
    expected = product(
        BivarPoly.const(1) + BivarPoly.monomial(0, 1, k) for k in (1, 3, 5)
    )
    assert distance_distribution(gen) == expected
    assert check_generating_function(gen, expected)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reflection_distance_matches_cycle_formula_type_b(n):
    table = bfs_table(GeneratorSet("B", "reflections", n))
    for w in enumerate_group("B", n):
        assert table[w.word] == reflection_length(w)


def test_check_generating_function_examples():
    assert check_generating_function(
        GeneratorSet("B", "simple", 3), solomon_product(coxeter_exponents("B", 3))
    )
    assert check_generating_function(GeneratorSet("D", "simple", 4), closed_D(4))
    assert check_generating_function(
        GeneratorSet("A", "reflections", 4),
        shephard_todd_product(coxeter_exponents("A", 4)),
    )
    assert not check_generating_function(GeneratorSet("A", "simple", 3), q_int(6))


def test_distance_lookup_and_symmetry():
    gen = GeneratorSet("B", "simple", 3)
    w = parse_element("2 -3 1", "B")
    assert distance(gen, w) == inversions(w)
    table = bfs_table(gen)
    for u in enumerate_group("B", 3):
        assert table[u.word] == table[inverse(u).word]
    with pytest.raises(ValueError, match="queried against"):
        distance(gen, parse_element("1 2", "B"))


def test_caps():
    with pytest.raises(ValueError, match="above BFS cap"):
        bfs_table(GeneratorSet("B", "simple", 5), group_cap=100)
    with pytest.raises(ValueError, match="edge relaxations"):
        bfs_table(GeneratorSet("B", "reflections", 4), edge_cap=10)


def test_table_csv_export():
    text = table_csv(GeneratorSet("A", "simple", 3))
    lines = text.splitlines()
    assert lines[0] == "word,distance"
    assert len(lines) == 7
    assert lines[1] == "1 2 3,0"
    assert lines[-1] == "3 2 1,3"
