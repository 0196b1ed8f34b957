from __future__ import annotations

import pytest

from esymlab.errors import NotDivisible, SubMultisetViolation
from esymlab.partitions import (
    ALL,
    BINARY,
    ODD,
    Partition,
    count_partitions,
    count_partitions_upto,
    finite_source,
    iter_partitions,
)


def _distinct_parts_count_upto(n_max: int) -> list[int]:
    # Independent oracle: partitions into distinct parts, 0/1 knapsack.
    table = [0] * (n_max + 1)
    table[0] = 1
    for a in range(1, n_max + 1):
        for s in range(n_max, a - 1, -1):
            table[s] += table[s - a]
    return table


def test_partition_validation():
    assert Partition((3, 1)).parts == (3, 1)
    assert Partition().parts == ()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_size_length_multiplicity():
    lam = Partition((4, 2, 2, 1))
    assert lam.size == 9
    assert lam.length == 4
    assert lam.multiplicity(2) == 2
    assert Partition((2, 1, 1)).multiplicity(1) == 2
    assert Partition((2, 1, 1)).multiplicity(3) == 0
    assert sum(i * lam.multiplicity(i) for i in range(1, 5)) == lam.size


def test_union():
    assert Partition((3, 1)).union(Partition((2, 1))).parts == (3, 2, 1, 1)
    assert Partition(()).union(Partition((5,))).parts == (5,)
    assert Partition((2, 2)).union(Partition((2,))).parts == (2, 2, 2)


def test_difference():
    assert Partition((3, 2, 1, 1)).difference(Partition((1,))).parts == (3, 2, 1)
    assert Partition((2, 2)).difference(Partition((2, 2))).parts == ()
    with pytest.raises(SubMultisetViolation):
        Partition((2, 1)).difference(Partition((3,)))


def test_divide():
    assert Partition((4, 2, 2)).divide(2).parts == (2, 1, 1)
    assert Partition((8,)).divide(8).parts == (1,)
    with pytest.raises(NotDivisible):
        Partition((4, 2, 1)).divide(2)


def test_conjugate():
    assert Partition((3, 1)).conjugate().parts == (2, 1, 1)
    assert Partition(()).conjugate().parts == ()
    assert Partition((2, 2)).conjugate().parts == (2, 2)


def test_conjugate_involution_small():
    for n in range(0, 31):
        for lam in iter_partitions(n):
            conj = lam.conjugate()
            assert conj.size == lam.size
            assert conj.conjugate() == lam


def test_enumerate_golden():
    assert [p.parts for p in iter_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in iter_partitions(0)] == [()]
    assert [p.parts for p in iter_partitions(4, BINARY)] == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_order_is_decreasing_lex():
    for src in (ALL, ODD, BINARY):
        for n in (7, 12, 17):
            seq = [p.parts for p in iter_partitions(n, src)]
            assert seq == sorted(seq, reverse=True)
            assert len(set(seq)) == len(seq)


def test_counts_golden():
    assert count_partitions(5, ODD) == 3
    assert count_partitions(6, BINARY) == 6
    assert count_partitions(0) == 1
    with pytest.raises(ValueError):
        count_partitions(-1)


def test_enumeration_matches_counts():
    for src in (ALL, ODD, BINARY):
        for length in (None, 4):
            for n in range(0, 31):
                got = sum(1 for _ in iter_partitions(n, src, length))
                assert got == count_partitions(n, src, length), (src.label, length, n)


def test_exact_length_partitions_have_that_length():
    for n in range(0, 25):
        for lam in iter_partitions(n, ALL, 4):
            assert lam.length == 4 and lam.size == n


def test_finite_source():
    src = finite_source([2, 3, 7])
    assert count_partitions(7, src) == 2
    assert [p.parts for p in iter_partitions(7, src)] == [(7,), (3, 2, 2)]
    with pytest.raises(ValueError):
        finite_source([3, 2])
    with pytest.raises(ValueError):
        finite_source([0, 1])


def test_euler_odd_equals_distinct():
    distinct = _distinct_parts_count_upto(60)
    odd = count_partitions_upto(60, ODD)
    assert odd == distinct


def test_binary_counts_even():
    b = count_partitions_upto(200, BINARY)
    assert b[0] == 1 and b[1] == 1
    assert all(b[n] % 2 == 0 for n in range(2, 201))
