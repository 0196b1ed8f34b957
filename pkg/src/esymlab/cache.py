"""On-disk sequence cache: one file per (name, params), decimal values.

Format::

    # esymlab-cache v1 name=<name> params=<canonical>
    <n><TAB><decimal value>
    ...

Indices are contiguous; values are decimal strings, so files round-trip
bit-exactly and stay auditable across languages.
"""

from __future__ import annotations

import os
import re
from pathlib import Path

from .errors import CacheError

FORMAT_TAG = "esymlab-cache v1"
_HEADER_RE = re.compile(r"^# esymlab-cache v1 name=(?P<name>\S+) params=(?P<params>\S+)$")


def cache_filename(name: str, params: str) -> str:
    safe = params.replace("/", "_")
    return f"{name}.cache" if params == "-" else f"{name}__{safe}.cache"


def write_cache_file(directory: str | Path, name: str, params: str, start: int, values: list[int]) -> Path:
    """Write atomically (temp file + rename); returns the final path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / cache_filename(name, params)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"# {FORMAT_TAG} name={name} params={params}\n")
        for i, v in enumerate(values):
            fh.write(f"{start + i}\t{v}\n")
    os.replace(tmp, path)
    return path


def read_cache_file(path: str | Path) -> tuple[str, str, int, list[int]]:
    """Parse a cache file; returns (name, params, start, values)."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CacheError(f"cannot read cache file {path}: {exc}") from exc
    if not lines:
        raise CacheError(f"empty cache file {path}")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise CacheError(f"bad cache header in {path}: {lines[0]!r}")
    name, params = m.group("name"), m.group("params")
    start: int | None = None
    values: list[int] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        try:
            n_str, v_str = line.split("\t")
            n, v = int(n_str), int(v_str)
        except ValueError as exc:
            raise CacheError(f"bad cache line {lineno} in {path}: {line!r}") from exc
        if start is None:
            start = n
        elif n != start + len(values):
            raise CacheError(f"non-contiguous index {n} at line {lineno} in {path}")
        values.append(v)
    if start is None:
        raise CacheError(f"cache file {path} holds no values")
    return name, params, start, values
