from __future__ import annotations

from esymlab.partitions import ALL, BINARY, Partition, count_partitions, iter_partitions
from esymlab.prelab import (
    b12,
    b12_recurrence,
    b22,
    b22_delta_check,
    b22_fast_upto,
    image_set,
    injectivity_scan,
    odd_distinct_counts,
)


def test_image_set_golden():
    iset = image_set(4, 2, ALL)
    assert iset.preimage_count == 5
    assert len(iset.images) == 5
    assert not iset.collisions
    expected = {Partition(), Partition((3,)), Partition((4,)),
                Partition((2, 2, 1)), Partition((1,) * 6)}
    assert set(iset.images) == expected

    iset = image_set(2, 2, ALL)
    assert set(iset.images) == {Partition(), Partition((1,))}


def test_image_set_counts_preimages():
    for n in range(0, 16):
        iset = image_set(n, 2, ALL)
        assert iset.preimage_count == count_partitions(n)
        assert len(iset.images) + len(iset.collisions) == iset.preimage_count


def test_odd_distinct_golden():
    c = odd_distinct_counts(4, 1)
    assert (c.odd, c.distinct) == (2, 2)
    c = odd_distinct_counts(4, 2)
    assert c.odd == 3  # images with odd parts: (), (3), (1^6)
    assert c.distinct == 3  # images with distinct parts: (), (3), (4)
    c = odd_distinct_counts(0, 2)
    assert (c.odd, c.distinct) == (1, 1)
    assert c.empty_in_image
    assert (c.odd_excluding_empty, c.distinct_excluding_empty) == (0, 0)


def test_euler_anchor_via_counts():
    for n in range(0, 26):
        c = odd_distinct_counts(n, 1)
        assert c.odd == c.distinct


def test_o2_minus_o1_parity_rule():
    for n in range(1, 26):
        o1 = odd_distinct_counts(n, 1).odd
        o2 = odd_distinct_counts(n, 2).odd
        assert o2 - o1 == (1 if n % 2 == 0 else 0), n


def test_injectivity_scans():
    for n in range(0, 21):
        assert injectivity_scan(n, 2, ALL) is None
    for n in range(0, 33):
        assert injectivity_scan(n, 2, BINARY) is None
    for n in range(0, 41):
        assert injectivity_scan(n, 2, ALL, max_length=3) is None
    for n in range(0, 15):
        assert injectivity_scan(n, 3, ALL, min_length=4) is None


def test_injectivity_scan_detects_planted_collision(monkeypatch):
    import esymlab.prelab as prelab

    def fake_products(t, j, cap):
        return Partition((1,)) if len(t) >= 1 else Partition()

    monkeypatch.setattr(prelab, "subset_products", fake_products)
    pair = prelab.injectivity_scan(3, 2, ALL)
    assert pair is not None
    lam, mu = pair
    assert lam != mu


def test_b12_golden():
    assert b12(1) == 0 and b12_recurrence(1) == 0
    assert b12(2) == 1 and b12_recurrence(2) == 1
    assert b12(3) == 3 and b12_recurrence(3) == 3
    assert b12(4) == 7 and b12_recurrence(4) == 7
    assert b12(0) == 0 and b12_recurrence(0) == 0


def test_b12_enumeration_matches_recurrence():
    for n in range(0, 41):
        assert b12(n) == b12_recurrence(n), n


def test_b22_golden():
    assert b22(0) == 0 and b22(1) == 0 and b22(2) == 0
    assert b22(3) == 1
    assert b22(4) == 2


def test_b22_fast_matches_images():
    fast = b22_fast_upto(40)
    for n in range(0, 41):
        assert fast[n] == b22(n), n


def test_b22_delta_checks():
    table = b22_fast_upto(2 * 250 + 2)
    for n in range(0, 251):
        chk = b22_delta_check(n, table)
        assert chk.passed, n
    chk = b22_delta_check(1, table)
    assert chk.delta_even == chk.delta_odd == 1 == chk.expected
    chk = b22_delta_check(0, table)
    assert chk.delta_even == chk.delta_odd == 0 == chk.expected


def test_image_set_repr_is_compact():
    iset = image_set(6, 2, BINARY)
    assert "images=" in repr(iset) and "collisions=0" in repr(iset)
