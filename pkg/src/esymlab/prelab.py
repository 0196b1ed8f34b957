"""Statistics of subset-product images: odd/distinct counts, injectivity,
and the counts of 1-parts and 2-parts over images of binary partitions.

The image of a partition class is always treated as a set of canonical
partitions; collisions (distinct preimages with the same image) are recorded
explicitly so the counts stay meaningful even if one day a collision shows
up where a conjecture expected none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .partitions import ALL, BINARY, PartSource, Partition, _iter_tuples, count_partitions_upto, finite_source
from .symfun import DEFAULT_EXPANSION_CAP, subset_products


@dataclass
class ImageSet:
    n: int
    j: int
    src: PartSource
    images: dict[Partition, Partition] = field(repr=False)  # image -> first preimage
    preimage_count: int
    collisions: list[tuple[Partition, Partition]] = field(repr=False)

    def __repr__(self) -> str:
        return (
            f"ImageSet(n={self.n}, j={self.j}, src={self.src.label}, "
            f"images={len(self.images)}, preimages={self.preimage_count}, "
            f"collisions={len(self.collisions)})"
        )


def image_set(n: int, j: int, src: PartSource = ALL, cap: int = DEFAULT_EXPANSION_CAP) -> ImageSet:
    """Deduplicated subset-product images over all partitions of n."""
    images: dict[Partition, Partition] = {}
    collisions: list[tuple[Partition, Partition]] = []
    count = 0
    for t in _iter_tuples(n, src, None):
        count += 1
        lam = Partition._wrap(t)
        img = subset_products(t, j, cap)
        prev = images.get(img)
        if prev is None:
            images[img] = lam
        else:
            collisions.append((prev, lam))
    return ImageSet(n, j, src, images, count, collisions)


def _all_parts_odd(p: Partition) -> bool:
    return all(x % 2 for x in p.parts)


def _all_parts_distinct(p: Partition) -> bool:
    t = p.parts
    return all(t[i] > t[i + 1] for i in range(len(t) - 1))


@dataclass(frozen=True)
class OddDistinctCount:
    n: int
    j: int
    odd: int
    distinct: int
    empty_in_image: bool

    # The empty partition counts as both odd and distinct (vacuously); these
    # give the counts under the opposite convention.
    @property
    def odd_excluding_empty(self) -> int:
        return self.odd - (1 if self.empty_in_image else 0)

    @property
    def distinct_excluding_empty(self) -> int:
        return self.distinct - (1 if self.empty_in_image else 0)


def odd_distinct_counts(n: int, j: int, cap: int = DEFAULT_EXPANSION_CAP) -> OddDistinctCount:
    """Counts of all-odd and all-distinct partitions in the image set.

    For j=1 the map is the identity, so the counts are streamed without
    materializing the image set.
    """
    if j == 1:
        odd = distinct = 0
        empty = False
        for t in _iter_tuples(n, ALL, None):
            if all(x % 2 for x in t):
                odd += 1
            if all(t[i] > t[i + 1] for i in range(len(t) - 1)):
                distinct += 1
            if not t:
                empty = True
        return OddDistinctCount(n, j, odd, distinct, empty)
    iset = image_set(n, j, ALL, cap)
    odd = distinct = 0
    empty = False
    for img in iset.images:
        if _all_parts_odd(img):
            odd += 1
        if _all_parts_distinct(img):
            distinct += 1
        if img.length == 0:
            empty = True
    return OddDistinctCount(n, j, odd, distinct, empty)


def injectivity_scan(
    n: int,
    j: int,
    src: PartSource = ALL,
    min_length: int = 0,
    max_length: int | None = None,
    cap: int = DEFAULT_EXPANSION_CAP,
) -> tuple[Partition, Partition] | None:
    """First pair of distinct partitions of n with equal subset-product image.

    Scans the partitions of n (optionally restricted by length bounds)
    through a hash on canonical images; returns None when the map is
    injective on the filtered class.  With an upper length bound the scan
    enumerates each exact length separately, which avoids walking the whole
    partition class.
    """
    if max_length is not None:
        def stream() -> Iterator[tuple[int, ...]]:
            if n == 0 and min_length == 0:
                yield ()
            for m in range(max(min_length, 1), max_length + 1):
                yield from _iter_tuples(n, src, m)

        it: Iterator[tuple[int, ...]] = stream()
    else:
        it = (t for t in _iter_tuples(n, src, None) if len(t) >= min_length)
    seen: dict[Partition, Partition] = {}
    for t in it:
        lam = Partition._wrap(t)
        img = subset_products(t, j, cap)
        prev = seen.get(img)
        if prev is not None:
            return (prev, lam)
        seen[img] = lam
    return None


# -- parts equal to 1 and 2 across images of binary partitions --------------


def b12(n: int) -> int:
    """Total 1-parts over the images of binary partitions of n.

    A part 1 in an image arises only as a product of two 1-parts of the
    preimage, so each preimage contributes binomial(multiplicity of 1, 2);
    the map is injective on binary partitions, so summing over preimages
    equals summing over the image set.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(math.comb(t.count(1), 2) for t in _iter_tuples(n, BINARY, None))


@lru_cache(maxsize=None)
def _b12_table(n_hi: int) -> tuple[int, ...]:
    vals = [0] * (n_hi + 1)
    if n_hi >= 2:
        vals[2] = 1
    for k in range(3, n_hi + 1):
        vals[k] = vals[k - 1] + vals[(k + 1) // 2] + vals[k // 2 + 1]
    return tuple(vals)


def b12_recurrence(n: int) -> int:
    """Same sequence through the recurrence
    b(n) = b(n-1) + b(floor((n+1)/2)) + b(ceil((n+1)/2)), b(1)=0, b(2)=1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    hi = max(256, 1 << n.bit_length())
    return _b12_table(hi)[n]


def b22(n: int) -> int:
    """Total 2-parts over the image set of binary partitions of n, counted on
    the explicitly constructed images."""
    if n < 0:
        raise ValueError("n must be non-negative")
    iset = image_set(n, 2, BINARY)
    return sum(img.parts.count(2) for img in iset.images)


def b22_fast_upto(n_max: int) -> list[int]:
    """Table of b22 values 0..n_max via the identity that 2-parts of an image
    arise only as 1*2 products, i.e. each preimage contributes m(1)*m(2)."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    pows = []
    a = 4
    while a <= n_max:
        pows.append(a)
        a <<= 1
    rest = count_partitions_upto(n_max, finite_source(pows))
    # w[s] = sum over b >= 1 of b * rest[s - 2b]
    w = [0] * (n_max + 1)
    for s in range(2, n_max + 1):
        w[s] = sum(b * rest[s - 2 * b] for b in range(1, s // 2 + 1))
    out = [0] * (n_max + 1)
    for n in range(3, n_max + 1):
        out[n] = sum(a * w[n - a] for a in range(1, n - 1))
    return out


@dataclass(frozen=True)
class DeltaCheck:
    n: int
    delta_even: int  # b22(2n+1) - b22(2n)
    delta_odd: int  # b22(2n+2) - b22(2n+1)
    expected: int  # b12(n+1)

    @property
    def passed(self) -> bool:
        return self.delta_even == self.delta_odd == self.expected


def b22_delta_check(n: int, table: list[int] | None = None) -> DeltaCheck:
    """Check that consecutive differences of b22 at 2n and 2n+1 both equal
    b12(n+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    hi = 2 * n + 2
    vals = table if table is not None else b22_fast_upto(hi)
    if len(vals) <= hi:
        raise ValueError(f"table must cover index {hi}")
    return DeltaCheck(
        n,
        vals[2 * n + 1] - vals[2 * n],
        vals[2 * n + 2] - vals[2 * n + 1],
        b12_recurrence(n + 1),
    )
