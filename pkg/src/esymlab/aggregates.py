"""Aggregate statistics over all partitions of n: sums of e_j and of power sums.

Every quantity here is computable by at least two independent routes
(enumeration, closed convolution formula, aggregate dynamic programming),
which is what the verification suites exploit.
"""

from __future__ import annotations

from .errors import IdentityMismatch, UnsupportedJ
from .partitions import ALL, PartSource, _iter_tuples, count_partitions_upto


def sigma_restricted(n: int, j: int, src: PartSource = ALL) -> int:
    """Sum of d^j over the divisors d of n that lie in the source set."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if j < 1:
        raise ValueError("j must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            if src.contains(d):
                total += d**j
            e = n // d
            if e != d and src.contains(e):
                total += e**j
        d += 1
    return total


def ejp_bruteforce(n: int, j: int, src: PartSource = ALL, length: int | None = None) -> int:
    """Sum of e_j over all partitions of n with parts from src, by enumeration."""
    if j < 1:
        raise ValueError("j must be >= 1")
    total = 0
    if j == 2:
        for t in _iter_tuples(n, src, length):
            e1 = e2 = 0
            for x in t:
                e2 += x * e1
                e1 += x
            total += e2
    elif j == 3:
        for t in _iter_tuples(n, src, length):
            e1 = e2 = e3 = 0
            for x in t:
                e3 += x * e2
                e2 += x * e1
                e1 += x
            total += e3
    else:
        for t in _iter_tuples(n, src, length):
            e = [1] + [0] * j
            for x in t:
                for i in range(j, 0, -1):
                    if e[i - 1]:
                        e[i] += x * e[i - 1]
            total += e[j]
    return total


def ejp_closed_form(n: int, j: int, src: PartSource = ALL) -> int:
    """Sum of e_j over partitions of n via the divisor-sum convolution.

    e_2-total(n) = (n^2 p(n) - sum_{k=1}^{n} sigma_2(k) p(n-k)) / 2 and
    e_3-total(n) = (n^3 p(n) - sum_{k=1}^{n} (3n sigma_2(k) - 2 sigma_3(k)) p(n-k)) / 6,
    with p and sigma both restricted to the source; only j in {2, 3} has a
    closed form of this shape.
    """
    if j not in (2, 3):
        raise UnsupportedJ(f"closed form only available for j in (2, 3), got {j}")
    if n < 1:
        raise ValueError("n must be >= 1")
    p = count_partitions_upto(n, src)
    if j == 2:
        acc = n * n * p[n]
        for k in range(1, n + 1):
            acc -= sigma_restricted(k, 2, src) * p[n - k]
        assert acc % 2 == 0
        return acc // 2
    acc = n * n * n * p[n]
    for k in range(1, n + 1):
        acc -= (3 * n * sigma_restricted(k, 2, src) - 2 * sigma_restricted(k, 3, src)) * p[n - k]
    assert acc % 6 == 0
    return acc // 6


def ejp_dp(n_max: int, j: int, src: PartSource = ALL, length: int | None = None) -> list[int]:
    """Table of e_j sums over partitions of 0..n_max, without enumeration.

    Carries the aggregate vector (sum e_0, ..., sum e_j) through an unbounded
    bounded-part DP; appending a part x maps e_i to e_i + x*e_{i-1}, and that
    update is linear, so it can be applied to the aggregates directly.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    parts = src.parts_up_to(n_max)
    if length is None:
        # agg[i][s] = sum of e_i over partitions of s from the values seen so far
        agg = [[0] * (n_max + 1) for _ in range(j + 1)]
        agg[0][0] = 1
        for a in parts:
            for s in range(a, n_max + 1):
                t = s - a
                for i in range(j, 0, -1):
                    add = agg[i][t] + a * agg[i - 1][t]
                    if add:
                        agg[i][s] += add
                agg[0][s] += agg[0][t]
        return agg[j]
    m = length
    # agg[i][s][c]: as above, restricted to exactly c parts
    agg = [[[0] * (m + 1) for _ in range(n_max + 1)] for _ in range(j + 1)]
    agg[0][0][0] = 1
    for a in parts:
        for s in range(a, n_max + 1):
            t = s - a
            for i in range(j, 0, -1):
                rows, rowp = agg[i][s], agg[i][t]
                rowp1 = agg[i - 1][t]
                for c in range(1, m + 1):
                    add = rowp[c - 1] + a * rowp1[c - 1]
                    if add:
                        rows[c] += add
            rows, rowp = agg[0][s], agg[0][t]
            for c in range(1, m + 1):
                if rowp[c - 1]:
                    rows[c] += rowp[c - 1]
    return [agg[j][s][m] for s in range(n_max + 1)]


def power_sum_dp(n_max: int, j: int, src: PartSource = ALL) -> list[int]:
    """Table of sums of P_j over partitions of 0..n_max, by aggregate DP."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    counts = [0] * (n_max + 1)
    totals = [0] * (n_max + 1)
    counts[0] = 1
    for a in src.parts_up_to(n_max):
        w = a**j
        for s in range(a, n_max + 1):
            t = s - a
            totals[s] += totals[t] + w * counts[t]
            counts[s] += counts[t]
    return totals


def power_sum_total(n: int, j: int, src: PartSource = ALL) -> int:
    """Sum of P_j over all partitions of n, computed two ways that must agree.

    The enumeration total is checked against the convolution
    sum_{k=1}^{n} sigma_j(k) p(n-k); a disagreement signals a bug, never a
    property of the inputs, so it raises IdentityMismatch.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if j < 1:
        raise ValueError("j must be >= 1")
    direct = 0
    for t in _iter_tuples(n, src, None):
        direct += sum(x**j for x in t)
    p = count_partitions_upto(n, src)
    conv = sum(sigma_restricted(k, j, src) * p[n - k] for k in range(1, n + 1))
    if direct != conv:
        raise IdentityMismatch(
            f"power-sum total disagrees at n={n}, j={j}, src={src.label}: "
            f"enumeration {direct} vs convolution {conv}"
        )
    return direct
