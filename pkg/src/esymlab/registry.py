"""Registry of named sequences and named series builtins.

The sequence names here are the public ones accepted by the CLI and stored
in cache files: p, pQ, pB, p4, e2p, e3p, e2Q, e3Q, e2B, e3B, e2p4, e3p4,
sigma, b12, b22.  The builtin names are the ones usable as #name inside
q-expressions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import prelab
from .aggregates import ejp_dp, sigma_restricted
from .cache import cache_filename, read_cache_file, write_cache_file
from .errors import BadRange, UnknownSequence
from .partitions import ALL, BINARY, ODD, PartSource, count_partitions_upto
from .series import TruncatedSeries, product_over_source

# Exact values of the e2p4 sequence are kept to this many indices; longer
# residue windows go through the registered recurrence extension.
E2P4_EXACT_LEN = 600

_SRC_BY_LABEL = {"all": ALL, "odd": ODD, "binary": BINARY}


def source_by_label(label: str) -> PartSource:
    try:
        return _SRC_BY_LABEL[label]
    except KeyError:
        raise BadRange(f"unknown source {label!r}; use all, odd or binary") from None


@dataclass(frozen=True)
class SeqDef:
    start: int
    takes_params: bool
    compute: Callable[..., list[int]]  # (hi[, j, src]) -> values for start..hi


SEQUENCES: dict[str, SeqDef] = {
    "p": SeqDef(0, False, lambda hi: count_partitions_upto(hi, ALL)),
    "pQ": SeqDef(0, False, lambda hi: count_partitions_upto(hi, ODD)),
    "pB": SeqDef(0, False, lambda hi: count_partitions_upto(hi, BINARY)),
    "p4": SeqDef(0, False, lambda hi: count_partitions_upto(hi, ALL, length=4)),
    "e2p": SeqDef(0, False, lambda hi: ejp_dp(hi, 2, ALL)),
    "e3p": SeqDef(0, False, lambda hi: ejp_dp(hi, 3, ALL)),
    "e2Q": SeqDef(0, False, lambda hi: ejp_dp(hi, 2, ODD)),
    "e3Q": SeqDef(0, False, lambda hi: ejp_dp(hi, 3, ODD)),
    "e2B": SeqDef(0, False, lambda hi: ejp_dp(hi, 2, BINARY)),
    "e3B": SeqDef(0, False, lambda hi: ejp_dp(hi, 3, BINARY)),
    "e2p4": SeqDef(0, False, lambda hi: ejp_dp(hi, 2, ALL, length=4)),
    "e3p4": SeqDef(0, False, lambda hi: ejp_dp(hi, 3, ALL, length=4)),
    "sigma": SeqDef(1, True, lambda hi, j, src: [sigma_restricted(n, j, src) for n in range(1, hi + 1)]),
    "b12": SeqDef(0, False, lambda hi: [prelab.b12_recurrence(n) for n in range(hi + 1)]),
    "b22": SeqDef(0, False, lambda hi: prelab.b22_fast_upto(hi)),
}


def canonical_params(name: str, j: int | None = None, src: PartSource | None = None) -> str:
    sd = SEQUENCES.get(name)
    if sd is None:
        raise UnknownSequence(name)
    if not sd.takes_params:
        return "-"
    if j is None or src is None:
        raise BadRange(f"sequence {name!r} needs both j and src parameters")
    return f"j={j},src={src.label}"


class SequenceStore:
    """Computes registered sequences, optionally backed by a cache directory.

    When a cache directory is set, a read hit is trusted as-is (the verify
    suites are exactly the mechanism that would expose a corrupted file) and
    a miss triggers a compute-and-write.
    """

    def __init__(self, cache_dir: str | Path | None = None):
        self.cache_dir = Path(cache_dir) if cache_dir else None

    def get(self, name: str, hi: int, j: int | None = None, src: PartSource | None = None) -> list[int]:
        """Values for indices start..hi of the named sequence."""
        sd = SEQUENCES.get(name)
        if sd is None:
            raise UnknownSequence(name)
        if hi < sd.start:
            raise BadRange(f"sequence {name!r} starts at index {sd.start}")
        params = canonical_params(name, j, src)
        want = hi - sd.start + 1
        if self.cache_dir is not None:
            path = self.cache_dir / cache_filename(name, params)
            if path.exists():
                fname, fparams, fstart, values = read_cache_file(path)
                if fname == name and fparams == params and fstart == sd.start and len(values) >= want:
                    return values[:want]
        values = sd.compute(hi, j, src) if sd.takes_params else sd.compute(hi)
        if self.cache_dir is not None:
            write_cache_file(self.cache_dir, name, params, sd.start, values)
        return values


@functools.lru_cache(maxsize=None)
def e2p4_exact(hi: int = E2P4_EXACT_LEN) -> tuple[int, ...]:
    """Exact e2p4 values 0..hi, memoized for reuse across checks."""
    return tuple(ejp_dp(hi, 2, ALL, length=4))


# -- series builtins for the q-expression language ---------------------------


def _series_of(values, order: int, modulus: int | None) -> TruncatedSeries:
    return TruncatedSeries(list(values[: order + 1]), order, modulus)


def _builtin_e2p4(order: int, modulus: int | None) -> TruncatedSeries:
    vals = e2p4_exact() if order < E2P4_EXACT_LEN else e2p4_exact(order)
    return _series_of(vals, order, modulus)


def _builtin_b12(order: int, modulus: int | None) -> TruncatedSeries:
    return _series_of([prelab.b12_recurrence(n) for n in range(order + 1)], order, modulus)


def _builtin_b22(order: int, modulus: int | None) -> TruncatedSeries:
    return _series_of(prelab.b22_fast_upto(order), order, modulus)


SERIES_BUILTINS: dict[str, Callable[[int, int | None], TruncatedSeries]] = {
    "e2p4": _builtin_e2p4,
    "b12": _builtin_b12,
    "b22": _builtin_b22,
    "allprod": lambda order, modulus: product_over_source(ALL, order, modulus),
    "oddprod": lambda order, modulus: product_over_source(ODD, order, modulus),
    "binaryprod": lambda order, modulus: product_over_source(BINARY, order, modulus),
    "binaryOddProd": lambda order, modulus: product_over_source(BINARY, order, modulus, plus_numerator=True),
}
