from __future__ import annotations

import random
from fractions import Fraction

import pytest

from esymlab.aggregates import ejp_dp
from esymlab.conjectures import logconcavity_scan, ratio_logconcavity_scan
from esymlab.partitions import ALL, count_partitions_upto


def test_trivial_violation():
    rep = logconcavity_scan([1, 1, 2], 1, 1, "toy")
    assert rep.violations == (1,)
    assert not rep.holds


def test_zero_handling():
    # 0 >= 0 passes exactly
    rep = logconcavity_scan([0, 0, 0, 1, 2], 1, 3)
    assert rep.violations == ()


def test_p_logconcave_from_26():
    p = count_partitions_upto(101, ALL)
    rep = logconcavity_scan(p, 26, 100, "p")
    assert rep.holds
    # p is famously not log-concave below: odd n violations exist
    rep_low = logconcavity_scan(p, 1, 25, "p")
    assert rep_low.violations


def test_e1p_threshold():
    p = count_partitions_upto(102, ALL)
    e1p = [n * p[n] for n in range(102)]
    rep = logconcavity_scan(e1p, 1, 100, "e1p")
    assert rep.violations
    assert max(rep.violations) == 23


def test_e2p_threshold():
    e2p = ejp_dp(101, 2, ALL)
    rep = logconcavity_scan(e2p, 1, 100, "e2p")
    assert rep.violations
    assert max(rep.violations) == 17


def test_higher_j_no_violations():
    for j in (3, 4, 5):
        rep = logconcavity_scan(ejp_dp(101, j, ALL), 1, 100, f"e{j}p")
        assert rep.holds, (j, rep.violations)


def test_ratio_variants_no_violations():
    p = count_partitions_upto(101, ALL)
    for j in (1, 2, 3, 4, 5):
        e = ejp_dp(101, j, ALL)
        for variant in ("F", "F/n"):
            rep = ratio_logconcavity_scan(j, variant, 2, 100, ejp_values=e, p_values=p)
            assert rep.holds, (j, variant, rep.violations)


def test_ratio_variant_validation():
    with pytest.raises(ValueError):
        ratio_logconcavity_scan(2, "G", 2, 10)
    with pytest.raises(ValueError):
        ratio_logconcavity_scan(2, "F", 1, 10)


def test_cross_multiplication_equals_rational_inequality():
    rng = random.Random(13579)
    for _ in range(200):
        e = [rng.randint(1, 50) for _ in range(3)]
        p = [rng.randint(1, 50) for _ in range(3)]
        n = rng.randint(2, 30)
        exact_f = (Fraction(e[1], p[1]) ** 2 >= Fraction(e[0], p[0]) * Fraction(e[2], p[2]))
        cross_f = e[1] ** 2 * p[0] * p[2] >= e[0] * e[2] * p[1] ** 2
        assert exact_f == cross_f
        exact_fn = (Fraction(e[1], n * p[1]) ** 2
                    >= Fraction(e[0], (n - 1) * p[0]) * Fraction(e[2], (n + 1) * p[2]))
        cross_fn = e[1] ** 2 * (n - 1) * (n + 1) * p[0] * p[2] >= e[0] * e[2] * n * n * p[1] ** 2
        assert exact_fn == cross_fn
