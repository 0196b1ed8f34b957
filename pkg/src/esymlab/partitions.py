"""Partitions, part sources and deterministic enumeration.

A partition is a weakly decreasing tuple of positive integers, identified
with its multiset of parts.  Enumeration is always in decreasing
lexicographic order of the part sequence, so streams are reproducible and
can be frozen into golden tests.  All counts are exact Python integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotDivisible, SubMultisetViolation


class Partition:
    """Immutable weakly decreasing sequence of positive integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Sequence[int] = ()):
        t = tuple(parts)
        prev = None
        for x in t:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"parts must be positive integers, got {x!r}")
            if prev is not None and x > prev:
                raise ValueError("parts must be weakly decreasing")
            prev = x
        self._parts = t

    @classmethod
    def _wrap(cls, parts: tuple[int, ...]) -> "Partition":
        # Trusted constructor for already-canonical tuples.
        p = object.__new__(cls)
        p._parts = parts
        return p

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self._parts)

    def multiplicity(self, i: int) -> int:
        """How many times i appears as a part."""
        if i < 1:
            raise ValueError("parts are positive; multiplicity needs i >= 1")
        return self._parts.count(i)

    def counter(self) -> Counter[int]:
        """Multiplicity map, derived on demand."""
        return Counter(self._parts)

    def union(self, other: "Partition") -> "Partition":
        """Multiset union of parts."""
        return Partition._wrap(tuple(sorted(self._parts + other._parts, reverse=True)))

    def difference(self, other: "Partition") -> "Partition":
        """Multiset difference; `other` must be a sub-multiset of self."""
        counts = Counter(self._parts)
        for x in other._parts:
            if counts[x] <= 0:
                raise SubMultisetViolation(f"part {x} not available for removal")
            counts[x] -= 1
        out: list[int] = []
        for v in sorted(counts, reverse=True):
            out.extend([v] * counts[v])
        return Partition._wrap(tuple(out))

    def divide(self, k: int) -> "Partition":
        """Divide every part by k; every part must be a multiple of k."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        for x in self._parts:
            if x % k:
                raise NotDivisible(f"part {x} is not a multiple of {k}")
        return Partition._wrap(tuple(x // k for x in self._parts))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: part j of the result counts parts >= j."""
        if not self._parts:
            return self
        cols = [0] * self._parts[0]
        for x in self._parts:
            for i in range(x):
                cols[i] += 1
        return Partition._wrap(tuple(cols))

    def __iter__(self):
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"


@dataclass(frozen=True)
class PartSource:
    """Domain of allowed part values: all, odd, powers of two, or an explicit set."""

    kind: str
    values: tuple[int, ...] = ()

    def contains(self, a: int) -> bool:
        if a < 1:
            return False
        if self.kind == "all":
            return True
        if self.kind == "odd":
            return a % 2 == 1
        if self.kind == "binary":
            return a & (a - 1) == 0
        return a in self.values

    def parts_up_to(self, bound: int) -> list[int]:
        """Allowed part values <= bound, ascending."""
        if bound < 1:
            return []
        if self.kind == "all":
            return list(range(1, bound + 1))
        if self.kind == "odd":
            return list(range(1, bound + 1, 2))
        if self.kind == "binary":
            out = []
            a = 1
            while a <= bound:
                out.append(a)
                a <<= 1
            return out
        return [v for v in self.values if v <= bound]

    @property
    def label(self) -> str:
        if self.kind == "finite":
            return "finite(" + ",".join(map(str, self.values)) + ")"
        return self.kind


ALL = PartSource("all")
ODD = PartSource("odd")
BINARY = PartSource("binary")


def finite_source(values: Sequence[int]) -> PartSource:
    """Source restricted to an explicit ascending list of distinct positive parts."""
    t = tuple(values)
    for i, v in enumerate(t):
        if not isinstance(v, int) or v < 1:
            raise ValueError("finite source values must be positive integers")
        if i and t[i - 1] >= v:
            raise ValueError("finite source values must be strictly ascending")
    return PartSource("finite", t)


def _check_length(length: int | None) -> None:
    if length is not None and (not isinstance(length, int) or length < 1):
        raise ValueError("exact length constraint must be a positive integer")


def _iter_all_any(n: int) -> Iterator[tuple[int, ...]]:
    # Iterative next-partition walk, decreasing lexicographic; parts unrestricted.
    if n == 0:
        yield ()
        return
    r = (n,)
    yield r
    while True:
        i = len(r) - 1
        while i >= 0 and r[i] == 1:
            i -= 1
        if i < 0:
            return
        s = len(r) - i  # units freed by decrementing r[i] and dropping the tail of 1s
        r = r[:i] + (r[i] - 1,)
        m = r[-1]
        while s > m:
            r += (m,)
            s -= m
        r += (s,)
        yield r


def _iter_tuples(n: int, src: PartSource, length: int | None) -> Iterator[tuple[int, ...]]:
    if n < 0:
        return
    if length is None and src.kind == "all":
        yield from _iter_all_any(n)
        return
    if n == 0:
        if length is None or length == 0:
            yield ()
        return
    if length == 0:
        return

    desc_cache: dict[int, list[int]] = {}

    def desc_parts(bound: int) -> list[int]:
        lst = desc_cache.get(bound)
        if lst is None:
            lst = src.parts_up_to(bound)
            lst.reverse()
            desc_cache[bound] = lst
        return lst

    acc: list[int] = []

    def rec(remaining: int, bound: int, slots: int | None) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            if slots is None or slots == 0:
                yield tuple(acc)
            return
        if slots == 0:
            return
        for a in desc_parts(min(bound, remaining)):
            if slots is not None:
                if a * slots < remaining:
                    break  # descending: no smaller part can reach `remaining` either
                if remaining - a < slots - 1:
                    continue  # not enough left for the remaining slots
                rest = slots - 1
            else:
                rest = None
            acc.append(a)
            yield from rec(remaining - a, a, rest)
            acc.pop()

    yield from rec(n, n, length)


def iter_partitions(n: int, src: PartSource = ALL, length: int | None = None) -> Iterator[Partition]:
    """Yield each partition of n with parts from src exactly once.

    Order is decreasing lexicographic on the part sequence.  `length=None`
    places no constraint; `length=m` keeps only partitions with exactly m
    parts.  The number of items equals count_partitions(n, src, length).
    """
    _check_length(length)
    for t in _iter_tuples(n, src, length):
        yield Partition._wrap(t)


def count_partitions_upto(n_max: int, src: PartSource = ALL, length: int | None = None) -> list[int]:
    """Table of partition counts for 0..n_max, by bounded-part dynamic programming."""
    _check_length(length)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    parts = src.parts_up_to(n_max)
    if length is None:
        table = [0] * (n_max + 1)
        table[0] = 1
        for a in parts:
            for s in range(a, n_max + 1):
                table[s] += table[s - a]
        return table
    m = length
    # dp[s][c]: partitions of s with exactly c parts from the values seen so far
    dp = [[0] * (m + 1) for _ in range(n_max + 1)]
    dp[0][0] = 1
    for a in parts:
        for s in range(a, n_max + 1):
            row, prev = dp[s], dp[s - a]
            for c in range(m, 0, -1):
                if prev[c - 1]:
                    row[c] += prev[c - 1]
    return [dp[s][m] for s in range(n_max + 1)]


def count_partitions(n: int, src: PartSource = ALL, length: int | None = None) -> int:
    """Number of partitions of n with parts from src (total on n >= 0).

    Callers wanting the `0 for negative arguments` convention guard at the
    call site, e.g. in convolution sums.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return count_partitions_upto(n, src, length)[n]
