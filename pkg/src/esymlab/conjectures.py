"""Log-concavity scanners over exact integer sequences.

All inequalities are decided by exact cross-multiplication; a scan returns
the list of violating indices so a claim of the form "holds for n > N" is
checked as max(violations) <= N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .aggregates import ejp_dp
from .partitions import ALL, count_partitions_upto


@dataclass(frozen=True)
class ViolationReport:
    name: str
    start: int
    end: int
    violations: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def logconcavity_scan(values: Sequence[int], start: int, end: int, name: str = "") -> ViolationReport:
    """Indices n in [start, end] with values[n]^2 < values[n-1] * values[n+1].

    The sequence must be indexable on [start-1, end+1] and non-negative, so
    zero neighbours compare exactly (0 >= 0 passes).
    """
    if start < 1:
        raise ValueError("start must be >= 1 so n-1 is a valid index")
    if end + 1 >= len(values):
        raise ValueError(f"values must cover index {end + 1}")
    bad = [n for n in range(start, end + 1) if values[n] ** 2 < values[n - 1] * values[n + 1]]
    return ViolationReport(name, start, end, tuple(bad))


def ratio_logconcavity_scan(
    j: int,
    variant: str,
    start: int,
    end: int,
    ejp_values: Sequence[int] | None = None,
    p_values: Sequence[int] | None = None,
) -> ViolationReport:
    """Log-concavity of the per-partition average of e_j, exactly.

    variant "F" tests (e(n)/p(n))^2 >= (e(n-1)/p(n-1)) * (e(n+1)/p(n+1)) via
    e(n)^2 p(n-1) p(n+1) >= e(n-1) e(n+1) p(n)^2; variant "F/n" additionally
    weights the left side by (n-1)(n+1) and the right by n^2.  The scan
    starts at n >= 2 because the ratio at n = 0 is degenerate.
    """
    if variant not in ("F", "F/n"):
        raise ValueError(f"variant must be 'F' or 'F/n', got {variant!r}")
    if start < 2:
        raise ValueError("start must be >= 2")
    e = ejp_values if ejp_values is not None else ejp_dp(end + 1, j, ALL)
    p = p_values if p_values is not None else count_partitions_upto(end + 1, ALL)
    if end + 1 >= len(e) or end + 1 >= len(p):
        raise ValueError(f"tables must cover index {end + 1}")
    bad: list[int] = []
    for n in range(start, end + 1):
        lhs = e[n] ** 2 * p[n - 1] * p[n + 1]
        rhs = e[n - 1] * e[n + 1] * p[n] ** 2
        if variant == "F/n":
            lhs *= (n - 1) * (n + 1)
            rhs *= n * n
        if lhs < rhs:
            bad.append(n)
    return ViolationReport(f"e{j}p/p" + ("/n" if variant == "F/n" else ""), start, end, tuple(bad))
