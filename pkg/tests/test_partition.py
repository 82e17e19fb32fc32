from itertools import product
from math import factorial

import pytest
from hypothesis import given

from qfoulkes.partition import (
    Partition,
    add_parts,
    conjugate,
    count_partitions,
    dominance_leq,
    hook_lengths,
    n_stat,
    num_standard_tableaux,
    partitions_of,
    remove_largest_part,
    z_of,
)
from qfoulkes.hall_littlewood import standard_tableaux

from strategies import partitions


def brute_partitions(n):
    """Every weakly decreasing composition, by filtering all compositions."""
    out = set()

    def rec(left, acc):
        if left == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        for k in range(1, left + 1):
            rec(left - k, acc + [k])

    rec(n, [])
    return out


def diagram_conjugate(lam):
    cells = {(j, i) for i, row in enumerate(lam) for j in range(row)}
    rows = {}
    for i, _ in cells:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


@pytest.mark.parametrize("n", range(0, 11))
def test_partitions_match_brute_force(n):
    got = partitions_of(n)
    assert set(map(tuple, got)) == brute_partitions(n)
    assert len(got) == len(set(got)) == count_partitions(n)


def test_partition_counts_known_values():
    assert [count_partitions(n) for n in (0, 1, 5, 10, 20, 30)] == [1, 1, 7, 42, 627, 5604]


def test_reverse_lex_order():
    assert list(partitions_of(4)) == [Partition(p) for p in ([4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1])]
    assert Partition([4]) < Partition([3, 1]) < Partition([1, 1, 1, 1]) < Partition([5])


def test_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])


@pytest.mark.parametrize("text,want", [
    ("[3,2,1]", (3, 2, 1)), ("3,2,1", (3, 2, 1)), ("321", (3, 2, 1)),
    ("[10,4]", (10, 4)), ("10", (10,)), ("[]", ()), ("5", (5,)),
])
def test_parse(text, want):
    assert Partition.parse(text) == want


@given(partitions(0, 20))
def test_conjugation_is_an_involution_and_matches_diagram(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam) == diagram_conjugate(lam)
    assert sum(conjugate(lam)) == sum(lam)


@pytest.mark.parametrize("n", range(0, 21))
def test_conjugation_involution_exhaustive(n):
    for lam in partitions_of(n):
        assert conjugate(conjugate(lam)) == lam


@given(partitions(1, 8))
def test_hook_formula_counts_standard_tableaux(lam):
    assert num_standard_tableaux(lam) == len(standard_tableaux(lam))


def test_hooks_example():
    hooks = hook_lengths(Partition([3, 2]))
    assert hooks == {(1, 1): 4, (1, 2): 3, (1, 3): 1, (2, 1): 2, (2, 2): 1}


@given(partitions(0, 12))
def test_n_stat_equals_conjugate_binomial_sum(lam):
    conj = conjugate(lam)
    assert n_stat(lam) == sum(c * (c - 1) // 2 for c in conj)


def test_n_stat_examples():
    assert n_stat(Partition([3])) == 0
    assert n_stat(Partition([2, 1])) == 1
    assert n_stat(Partition([1, 1, 1])) == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_z_gives_class_sizes(n):
    assert sum(factorial(n) // z_of(mu) for mu in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_is_a_partial_order_reversed_by_conjugation(n):
    parts = partitions_of(n)
    for a, b in product(parts, repeat=2):
        if dominance_leq(a, b) and dominance_leq(b, a):
            assert a == b
        assert dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a))
    assert all(dominance_leq(p, parts[0]) and dominance_leq(parts[-1], p) for p in parts)


def test_dominance_rejects_unequal_weights():
    with pytest.raises(ValueError):
        dominance_leq(Partition([2]), Partition([3]))


def test_add_and_remove_parts():
    assert add_parts(Partition([2, 2]), Partition([3])) == (5, 2)
    assert remove_largest_part(Partition([6, 2, 2])) == (2, 2)
    assert remove_largest_part(Partition([])) == ()


@given(partitions(0, 15))
def test_weight_and_cells(lam):
    assert lam.weight == sum(lam) == len(list(lam.cells()))
