from __future__ import annotations

import math
import random

import pytest

from esymlab.errors import ExpansionCap, UnsupportedJ
from esymlab.partitions import iter_partitions
from esymlab.symfun import (
    elem_sym,
    elem_sym_newton,
    elem_sym_subsets,
    elem_vector,
    power_sum,
    subset_products,
)


def test_power_sum():
    assert power_sum((2, 1, 1), 2) == 6
    assert power_sum((), 3) == 0
    assert power_sum((3, 3), 3) == 54
    with pytest.raises(ValueError):
        power_sum((1,), 0)


def test_elem_sym_golden():
    assert elem_sym((2, 1, 1), 2) == 5
    assert elem_sym((5,), 2) == 0
    assert elem_sym((3, 2, 1, 1), 2) == 17
    assert elem_sym((), 0) == 1
    assert elem_sym((4, 1), 0) == 1


def test_elem_vector_shape():
    e = elem_vector((3, 2, 1), 4)
    assert e == [1, 6, 11, 6, 0]  # (1+3q)(1+2q)(1+q) coefficients


def test_elem_sym_matches_subset_oracle_random():
    rng = random.Random(20260810)
    for _ in range(500):
        ell = rng.randint(0, 12)
        parts = sorted((rng.randint(1, max(1, 40 // max(ell, 1))) for _ in range(ell)), reverse=True)
        while sum(parts) > 40:
            parts.pop()
        for j in range(0, len(parts) + 1):
            assert elem_sym(parts, j) == elem_sym_subsets(parts, j)


def test_elem_sym_e1_is_size():
    for n in range(0, 16):
        for lam in iter_partitions(n):
            assert elem_sym(lam.parts, 1) == lam.size


def test_newton_identities():
    assert elem_sym_newton((2, 1, 1), 2) == 5
    assert elem_sym_newton((1, 1, 1, 1), 3) == 4
    assert elem_sym_newton((3, 1), 3) == 0
    with pytest.raises(UnsupportedJ):
        elem_sym_newton((2, 1), 4)


def test_newton_matches_elem_sym_exhaustive():
    for n in range(0, 26):
        for lam in iter_partitions(n):
            for j in (2, 3):
                assert elem_sym_newton(lam.parts, j) == elem_sym(lam.parts, j)


def test_subset_products_golden():
    assert subset_products((2, 1, 1), 2).parts == (2, 2, 1)
    assert subset_products((3, 2, 1, 1), 2).parts == (6, 3, 3, 2, 2, 1)
    assert subset_products((5,), 2).parts == ()
    assert subset_products((4, 2), 1).parts == (4, 2)


def test_subset_products_size_and_length():
    for n in range(0, 21):
        for lam in iter_partitions(n):
            for j in range(1, 5):
                img = subset_products(lam.parts, j)
                assert img.length == math.comb(lam.length, j)
                assert img.size == elem_sym(lam.parts, j)


def test_subset_products_cap():
    with pytest.raises(ExpansionCap):
        subset_products([1] * 50, 25, cap=10**6)
    # a tight custom cap triggers on small inputs too
    with pytest.raises(ExpansionCap):
        subset_products((3, 2, 1), 2, cap=2)
