"""Power sums and elementary symmetric polynomials evaluated at partition parts."""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from .errors import ExpansionCap, UnsupportedJ
from .partitions import Partition

DEFAULT_EXPANSION_CAP = 10**6


def power_sum(parts: Iterable[int], k: int) -> int:
    """Sum of k-th powers of the parts."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(x**k for x in parts)


def elem_vector(parts: Iterable[int], j: int) -> list[int]:
    """Values e_0..e_j of the elementary symmetric polynomials at the parts.

    One pass over the parts using e_i(prefix + x) = e_i(prefix) + x*e_{i-1}(prefix),
    so the cost is O(len(parts) * j).
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    e = [0] * (j + 1)
    e[0] = 1
    for x in parts:
        for i in range(j, 0, -1):
            if e[i - 1]:
                e[i] += x * e[i - 1]
    return e


def elem_sym(parts: Iterable[int], j: int) -> int:
    """e_j at the parts; 1 for j=0 and 0 whenever j exceeds the number of parts."""
    return elem_vector(parts, j)[j]


def elem_sym_subsets(parts: Iterable[int], j: int) -> int:
    """e_j by explicit j-subset enumeration; exponential in j, oracle use only."""
    t = tuple(parts)
    if j == 0:
        return 1
    if j > len(t):
        return 0
    return sum(math.prod(c) for c in combinations(t, j))


def elem_sym_newton(parts: Iterable[int], j: int) -> int:
    """e_2 or e_3 recovered from power sums.

    e_2 = (P_1^2 - P_2)/2 and e_3 = (P_1^3 - 3 P_1 P_2 + 2 P_3)/6, both exact
    over the integers.
    """
    t = tuple(parts)
    if j == 2:
        p1, p2 = power_sum(t, 1), power_sum(t, 2)
        num = p1 * p1 - p2
        assert num % 2 == 0
        return num // 2
    if j == 3:
        p1, p2, p3 = power_sum(t, 1), power_sum(t, 2), power_sum(t, 3)
        num = p1**3 - 3 * p1 * p2 + 2 * p3
        assert num % 6 == 0
        return num // 6
    raise UnsupportedJ(f"power-sum form only available for j in (2, 3), got {j}")


def subset_products(p: Partition | Iterable[int], j: int, cap: int = DEFAULT_EXPANSION_CAP) -> Partition:
    """Partition whose parts are the products over all j-element index subsets.

    The result has binomial(len(parts), j) parts and total size e_j(parts);
    it is empty when there are fewer than j parts.  Raises ExpansionCap when
    the part count would exceed `cap`.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    t = p.parts if isinstance(p, Partition) else tuple(p)
    count = math.comb(len(t), j)
    if count > cap:
        raise ExpansionCap(f"expansion would produce {count} parts (cap {cap})")
    if count == 0:
        return Partition()
    prods = [math.prod(c) for c in combinations(t, j)]
    prods.sort(reverse=True)
    return Partition._wrap(tuple(prods))
