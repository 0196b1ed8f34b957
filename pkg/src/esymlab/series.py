"""Truncated formal power series in q over exact integers or residues mod m.

A series keeps coefficients for exponents 0..order and never consults
anything beyond the truncation; binary operations carry the smaller order of
the two operands.  Residue-ring coefficients are stored canonically in
[0, m).  Division is only available by factors (1 - q^a)^e, implemented as
e passes of the prefix recurrence c[i] += c[i-a], which is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSupported, RingMismatch
from .partitions import PartSource


class TruncatedSeries:
    __slots__ = ("order", "modulus", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None, modulus: int | None = None):
        lst = list(coeffs)
        if order is None:
            order = max(len(lst) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        if modulus is not None and modulus < 2:
            raise ValueError("modulus must be >= 2")
        if len(lst) < order + 1:
            lst.extend([0] * (order + 1 - len(lst)))
        else:
            del lst[order + 1 :]
        if modulus is not None:
            lst = [c % modulus for c in lst]
        self.order = order
        self.modulus = modulus
        self.coeffs = lst

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, modulus: int | None = None) -> "TruncatedSeries":
        return cls([0], order, modulus)

    @classmethod
    def constant(cls, value: int, order: int, modulus: int | None = None) -> "TruncatedSeries":
        return cls([value], order, modulus)

    @classmethod
    def one(cls, order: int, modulus: int | None = None) -> "TruncatedSeries":
        return cls([1], order, modulus)

    @classmethod
    def monomial(cls, exponent: int, order: int, modulus: int | None = None, coeff: int = 1) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order, modulus)

    # -- ring plumbing -----------------------------------------------------

    def _red(self, value: int) -> int:
        return value % self.modulus if self.modulus is not None else value

    def _align(self, other: "TruncatedSeries") -> int:
        if self.modulus != other.modulus:
            raise RingMismatch(f"cannot combine rings {self.modulus!r} and {other.modulus!r}")
        return min(self.order, other.order)

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def reduce_mod(self, m: int) -> "TruncatedSeries":
        """Reduce an exact series coefficientwise into the residue ring mod m."""
        if self.modulus is not None:
            raise RingMismatch("series is already over a residue ring")
        return TruncatedSeries(self.coeffs, self.order, m)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order, self.modulus)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._align(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs[: k + 1], other.coeffs[: k + 1])], k, self.modulus
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._align(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs[: k + 1], other.coeffs[: k + 1])], k, self.modulus
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.modulus)

    def scale(self, value: int) -> "TruncatedSeries":
        return TruncatedSeries([value * c for c in self.coeffs], self.order, self.modulus)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._align(other)
        res = [0] * (k + 1)
        oc = other.coeffs
        for i, a in enumerate(self.coeffs[: k + 1]):
            if not a:
                continue
            lim = k - i
            for e, b in enumerate(oc[: lim + 1]):
                if b:
                    res[i + e] += a * b
        return TruncatedSeries(res, k, self.modulus)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        result = TruncatedSeries.one(self.order, self.modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return TruncatedSeries([0] * k + self.coeffs[: self.order + 1 - k], self.order, self.modulus)

    def divide_one_minus(self, a: int, e: int = 1) -> "TruncatedSeries":
        """Divide by (1 - q^a)^e, i.e. multiply by the geometric expansion."""
        if a < 1 or e < 1:
            raise ValueError("need a >= 1 and e >= 1")
        c = list(self.coeffs)
        m = self.modulus
        for _ in range(e):
            for i in range(a, self.order + 1):
                c[i] += c[i - a]
                if m is not None:
                    c[i] %= m
        return TruncatedSeries(c, self.order, m)

    # -- misc --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.modulus, tuple(self.coeffs)))

    def __repr__(self) -> str:
        ring = "Z" if self.modulus is None else f"Z/{self.modulus}"
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries[{ring}; order {self.order}]({head}{tail})"


@dataclass(frozen=True)
class FirstMismatch:
    exponent: int
    lhs: int
    rhs: int


def check_identity(lhs: TruncatedSeries, rhs: TruncatedSeries) -> FirstMismatch | None:
    """Compare retained coefficients up to the smaller order.

    Returns None on a match, else the first mismatching exponent with both
    coefficients.  The rings must agree exactly.
    """
    if lhs.modulus != rhs.modulus:
        raise RingMismatch(f"cannot compare rings {lhs.modulus!r} and {rhs.modulus!r}")
    k = min(lhs.order, rhs.order)
    for n in range(k + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return FirstMismatch(n, lhs.coeffs[n], rhs.coeffs[n])
    return None


def product_over_source(
    src: PartSource,
    order: int,
    modulus: int | None = None,
    plus_numerator: bool = False,
) -> TruncatedSeries:
    """Expand the product over allowed parts a of 1/(1 - q^a), truncated.

    The coefficient of q^n is then the number of partitions of n with parts
    from the source.  With plus_numerator=True each factor becomes
    (1 + q^a)/(1 - q^a) instead.  Parts above the truncation order cannot
    contribute and are skipped, which also truncates infinite sources.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c = [0] * (order + 1)
    c[0] = 1
    for a in src.parts_up_to(order):
        if plus_numerator:
            for i in range(order, a - 1, -1):
                c[i] += c[i - a]
        for i in range(a, order + 1):
            c[i] += c[i - a]
        if modulus is not None:
            c = [x % modulus for x in c]
    return TruncatedSeries(c, order, modulus)


def divisor_power_series(j: int, src: PartSource, order: int, modulus: int | None = None) -> TruncatedSeries:
    """Expand the sum over allowed parts a of a^j q^a/(1 - q^a), truncated.

    The coefficient of q^n is the restricted divisor sum of n for exponent j.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if j < 1:
        raise ValueError("j must be >= 1")
    c = [0] * (order + 1)
    for a in src.parts_up_to(order):
        w = a**j
        for e in range(a, order + 1, a):
            c[e] += w
    return TruncatedSeries(c, order, modulus)


def substitute_power(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """Replace q by q^k; the coefficient at n moves to k*n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    order = s.order * k
    c = [0] * (order + 1)
    for n, v in enumerate(s.coeffs):
        c[n * k] = v
    return TruncatedSeries(c, order, s.modulus)


def extract_power(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """Inverse of substitute_power: keep exponents divisible by k, divide them by k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for n, v in enumerate(s.coeffs):
        if v and n % k:
            raise NotSupported(f"nonzero coefficient at exponent {n}, not a multiple of {k}")
    order = s.order // k
    return TruncatedSeries([s.coeffs[n * k] for n in range(order + 1)], order, s.modulus)


def series_from_values(values: Sequence[int], order: int | None = None, modulus: int | None = None) -> TruncatedSeries:
    """Series whose coefficient of q^n is values[n]."""
    return TruncatedSeries(values, order if order is not None else len(values) - 1, modulus)
