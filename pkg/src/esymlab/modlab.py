"""Residue sequences: period detection, linear-recurrence checks, parity laws.

The order-22 recurrence for the e2p4 sequence is carried with its exact
coefficient list; residue extensions beyond an exactly-computed prefix are
marked as such so reports can distinguish proven from conditional ranges.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .aggregates import ejp_dp
from .errors import NoPeriodFound, PrefixTooShort
from .partitions import BINARY, Partition, count_partitions_upto


@dataclass(frozen=True)
class LinRecurrence:
    """y[n + order] = sum(coeffs[i] * y[n + i]), homogeneous with integer coefficients."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)


# Conjectured recurrence for the sum of e_2 over 4-part partitions; offsets 2
# and 20 carry coefficient 0.
E2P4_RECURRENCE = LinRecurrence(
    (-1, -1, 0, 3, 6, 3, -3, -12, -12, -2, 10, 18, 10, -2, -12, -12, -3, 3, 6, 3, 0, -1)
)


@dataclass(frozen=True)
class ResidueSeq:
    """Contiguous residues from index 0; the first exact_prefix values come
    from exact reduction, anything beyond from a recurrence extension."""

    modulus: int
    values: tuple[int, ...]
    exact_prefix: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if any(not 0 <= v < self.modulus for v in self.values):
            raise ValueError("residues must lie in [0, modulus)")

    @classmethod
    def from_exact(cls, values: Sequence[int], modulus: int) -> "ResidueSeq":
        vals = tuple(v % modulus for v in values)
        return cls(modulus, vals, len(vals))


@dataclass(frozen=True)
class PeriodReport:
    modulus: int
    window: int
    period: int
    start: int  # earliest index from which the period holds
    exact_prefix: int

    @property
    def pure(self) -> bool:
        return self.start == 0

    @property
    def conditional(self) -> bool:
        """True when part of the window came from a recurrence extension."""
        return self.exact_prefix < self.window


def detect_period(seq: ResidueSeq, burn_in_max: int | None = None) -> PeriodReport:
    """Smallest p with seq[n + p] == seq[n] for all n >= some n0 <= burn_in_max.

    A candidate is only accepted when the window still contains at least
    three full periods after the burn-in, which guards against spurious
    matches on short windows.  Raises NoPeriodFound when no p up to
    window // 4 qualifies.
    """
    vals = seq.values
    n = len(vals)
    if burn_in_max is None:
        burn_in_max = n // 4
    tail_probe = 64
    for p in range(1, n // 4 + 1):
        if any(vals[n - 1 - i] != vals[n - 1 - i - p] for i in range(min(tail_probe, n - p))):
            continue
        start = 0
        for i in range(n - 1, p - 1, -1):
            if vals[i] != vals[i - p]:
                start = i - p + 1
                break
        if start <= burn_in_max and n - p - start >= 3 * p:
            return PeriodReport(seq.modulus, n, p, start, seq.exact_prefix)
    raise NoPeriodFound(f"no period up to {n // 4} within a window of {n} values (mod {seq.modulus})")


def verify_linear_recurrence(
    values: Sequence[int], rec: LinRecurrence, start: int = 0, end: int | None = None
) -> int | None:
    """First n in [start, end] where the recurrence fails, or None if it holds.

    Checked exactly over the integers; values must cover indices up to
    end + order.
    """
    order = rec.order
    if end is None:
        end = len(values) - order - 1
    if end + order >= len(values):
        raise ValueError(f"need values up to index {end + order}, have {len(values)}")
    coeffs = rec.coeffs
    for n in range(start, end + 1):
        acc = 0
        for i, c in enumerate(coeffs):
            if c:
                acc += c * values[n + i]
        if acc != values[n + order]:
            return n
    return None


def extend_mod(prefix: Sequence[int], rec: LinRecurrence, m: int, n_last: int) -> ResidueSeq:
    """Residues of the sequence through index n_last, extending by recurrence.

    The prefix is exact integer values starting at index 0; it must contain
    at least `order` entries and must itself satisfy the recurrence (checked,
    since everything downstream silently depends on it).
    """
    if len(prefix) < rec.order:
        raise PrefixTooShort(f"need at least {rec.order} seed values, got {len(prefix)}")
    bad = verify_linear_recurrence(prefix, rec)
    if bad is not None:
        raise ValueError(f"prefix violates the recurrence at index {bad}")
    vals = [v % m for v in prefix]
    coeffs = rec.coeffs
    order = rec.order
    for n in range(len(vals), n_last + 1):
        acc = 0
        base = n - order
        for i, c in enumerate(coeffs):
            if c:
                acc += c * vals[base + i]
        vals.append(acc % m)
    return ResidueSeq(m, tuple(vals[: n_last + 1]), min(len(prefix), n_last + 1))


# -- residue-class law for e_2 on 4-part partitions -------------------------

_MOD4_ONE = frozenset(
    [
        (1, 1, 1, 2),
        (0, 0, 1, 1),
        (1, 1, 2, 2),
        (0, 1, 1, 2),
        (1, 1, 2, 3),
        (2, 3, 3, 3),
        (0, 0, 3, 3),
        (2, 2, 3, 3),
        (0, 2, 3, 3),
        (1, 2, 3, 3),
    ]
)
_MOD4_TWO = frozenset(
    [
        (1, 1, 1, 1),
        (1, 2, 2, 2),
        (0, 0, 1, 2),
        (1, 1, 3, 3),
        (3, 3, 3, 3),
        (2, 2, 2, 3),
        (0, 0, 2, 3),
    ]
)
_MOD4_THREE = frozenset(
    [
        (0, 1, 1, 1),
        (0, 1, 1, 3),
        (0, 0, 1, 3),
        (0, 1, 2, 3),
        (0, 3, 3, 3),
        (0, 1, 3, 3),
        (1, 2, 2, 3),
    ]
)


def e2_residue_class(p: Partition | Sequence[int], m: int) -> int:
    """Residue of e_2 mod m for a 4-part partition, from part residues alone.

    mod 2: odd exactly when one or two parts are even.
    mod 3: 1 when two residues occur twice each, 2 when three distinct
    residues occur, else 0.
    mod 4: table lookup on the sorted residue multiset.
    """
    parts = tuple(p)
    if len(parts) != 4:
        raise ValueError("residue classification applies to 4-part partitions")
    if m == 2:
        evens = sum(1 for x in parts if x % 2 == 0)
        return 1 if evens in (1, 2) else 0
    if m == 3:
        res = sorted(x % 3 for x in parts)
        counts = sorted(res.count(r) for r in set(res))
        if counts == [2, 2]:
            return 1
        if len(counts) == 3:
            return 2
        return 0
    if m == 4:
        key = tuple(sorted(x % 4 for x in parts))
        if key in _MOD4_ONE:
            return 1
        if key in _MOD4_TWO:
            return 2
        if key in _MOD4_THREE:
            return 3
        return 0
    raise ValueError(f"no classification for modulus {m}")


# -- parity and mod-4 checks for binary-partition aggregates ----------------


def comb_parity(n: int, k: int) -> int:
    """binomial(n, k) mod 2 via the subset-of-bits criterion."""
    if k < 0 or k > n:
        return 0
    return 1 if (n & k) == k else 0


@functools.lru_cache(maxsize=None)
def _binary_ejp_table(j: int, n_hi: int) -> tuple[int, ...]:
    return tuple(ejp_dp(n_hi, j, BINARY))


def _table_hi(n: int) -> int:
    return max(256, 1 << n.bit_length())


@dataclass(frozen=True)
class ParityCheck:
    n: int
    j: int
    value: int
    binom_parity: int

    @property
    def passed(self) -> bool:
        return self.value % 2 == self.binom_parity


def binary_ejp_parity_check(n: int, j: int) -> ParityCheck:
    """Check that the e_j sum over binary partitions of n has the parity of
    binomial(n-2, j-2)."""
    if n < 2 or j < 2:
        raise ValueError("need n >= 2 and j >= 2")
    value = _binary_ejp_table(j, _table_hi(n))[n]
    return ParityCheck(n, j, value, comb_parity(n - 2, j - 2))


@dataclass(frozen=True)
class Mod4SumCheck:
    n: int
    residual: int

    @property
    def passed(self) -> bool:
        return self.residual % 4 == 0


def binary_sum_mod4_check(n: int, b_values: Sequence[int] | None = None) -> Mod4SumCheck:
    """For even n the sum of binary-partition counts B(2)..B(n-1) is 0 mod 4;
    for odd n the same holds for B(n) minus that sum."""
    if n < 3:
        raise ValueError("need n >= 3")
    b = b_values if b_values is not None else count_partitions_upto(n, BINARY)
    tail = sum(b[n - k] for k in range(1, n - 1))
    residual = tail if n % 2 == 0 else b[n] - tail
    return Mod4SumCheck(n, residual)
