from math import factorial

import pytest
from hypothesis import given

from cmhilb import (
    CapExceededError,
    LaurentPolynomial,
    Partition,
    all_hooks_odd,
    diagonals,
    dim_irrep,
    enumerate_partitions,
    hook_lengths,
    hook_polynomial,
    is_staircase,
    is_steep,
    n_stat,
    parse_partition,
    staircase,
    transpose,
    triangular_index,
    u_map,
)
from strategies import partitions


def test_construction_validates():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition(()).size == 0


def test_parse():
    assert parse_partition("4,3,3,1,1") == Partition((4, 3, 3, 1, 1))
    assert parse_partition("") == Partition(())
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("2,x")


def test_transpose_examples():
    assert transpose(Partition((4, 3, 3, 1, 1))) == Partition((5, 3, 3, 1))
    assert transpose(staircase(5)) == staircase(5)
    assert transpose(Partition((6,))) == Partition((1,) * 6)


@given(partitions())
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_hook_lengths_examples():
    assert hook_lengths(staircase(4)) == (7, 5, 5, 3, 3, 3, 1, 1, 1, 1)
    assert hook_lengths(Partition((1,))) == (1,)
    assert hook_lengths(Partition((2, 1))) == (3, 1, 1)


@given(partitions())
def test_hook_multiset_transpose_invariant(lam):
    assert hook_lengths(transpose(lam)) == hook_lengths(lam)


def test_hook_polynomial():
    assert hook_polynomial(Partition((1,))) == LaurentPolynomial({0: 1, 1: -1})
    expected = (
        LaurentPolynomial({0: 1, 3: -1})
        * LaurentPolynomial({0: 1, 1: -1})
        * LaurentPolynomial({0: 1, 1: -1})
    )
    assert hook_polynomial(Partition((2, 1))) == expected


def test_staircase_hooks_all_odd():
    for m in range(7):
        assert all(h % 2 for h in hook_lengths(staircase(m)))


def test_n_stat():
    assert n_stat(staircase(3)) == 4
    assert n_stat(staircase(4)) == 10
    assert n_stat(Partition((9,))) == 0


def test_n_stat_staircase_formula():
    for m in range(11):
        assert n_stat(staircase(m)) == (m - 1) * m * (m + 1) // 6


def test_dim_irrep():
    assert dim_irrep(Partition((3, 2, 1))) == 16
    assert dim_irrep(Partition((7,))) == 1
    assert dim_irrep(Partition((2, 1))) == 2


def test_dimension_squares_sum_to_factorial():
    for n in range(9):
        assert sum(dim_irrep(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_is_steep():
    assert is_steep(Partition((3, 1)))
    assert not is_steep(Partition((4, 3, 3, 1, 1)))
    for m in range(7):
        assert is_steep(staircase(m))


def test_both_sides_steep_only_for_staircase():
    for n in range(16):
        for lam in enumerate_partitions(n):
            both = is_steep(lam) and is_steep(transpose(lam))
            assert both == is_staircase(lam)


def test_diagonals_examples():
    assert diagonals(Partition((4, 3, 3, 1, 1))) == (1, 2, 3, 4, 2)
    assert diagonals(Partition((1,))) == (1,)
    for m in range(1, 7):
        assert diagonals(staircase(m)) == tuple(range(1, m + 1))


def test_u_map_examples():
    assert u_map(Partition((4, 3, 3, 1, 1))) == Partition((5, 4, 2, 1))
    assert u_map(Partition((3, 1))) == Partition((3, 1))
    for m in range(7):
        assert u_map(staircase(m)) == staircase(m)


@given(partitions())
def test_u_map_properties(lam):
    u = u_map(lam)
    assert sum(diagonals(lam)) == lam.size
    assert u.size == lam.size
    assert is_steep(u)
    assert (u == lam) == is_steep(lam)
    assert u_map(u) == u
    assert is_staircase(u) == is_staircase(lam)


def test_staircase_and_odd_hooks():
    assert staircase(3) == Partition((3, 2, 1))
    assert staircase(0) == Partition(())
    assert not all_hooks_odd(Partition((2, 2)))
    assert all_hooks_odd(staircase(5))


def test_odd_hooks_iff_staircase_exhaustive():
    for n in range(13):
        for lam in enumerate_partitions(n):
            assert all_hooks_odd(lam) == is_staircase(lam)


def test_enumerate_partitions():
    assert [lam.parts for lam in enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
    ]
    assert len(enumerate_partitions(6)) == 11
    assert enumerate_partitions(0) == [Partition(())]


def test_enumerate_reverse_lex_order():
    for n in range(11):
        seq = [lam.parts for lam in enumerate_partitions(n)]
        assert seq == sorted(seq, reverse=True)
        assert len(set(seq)) == len(seq)
        assert all(sum(p) == n for p in seq)


def test_enumerate_cap():
    with pytest.raises(CapExceededError):
        enumerate_partitions(31)
    assert len(enumerate_partitions(31, cap=31)) == 6842


def test_triangular_index():
    assert triangular_index(6) == 3
    assert triangular_index(7) is None
    assert triangular_index(0) == 0
    assert triangular_index(1) == 1
