"""Command-line interface: seq, verify, period, gf.

Exit codes: 0 success / all checks pass; 1 proven-statement failure or
series mismatch; 2 unknown sequence, unknown suite or parse error; 3 bad
range; 4 no period found; 10 conjecture violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import BadRange, CacheError, NoPeriodFound, ParseError, UnknownSequence
from .modlab import E2P4_RECURRENCE, ResidueSeq, detect_period, extend_mod
from .qparser import eval_expr, parse_expr
from .registry import E2P4_EXACT_LEN, SEQUENCES, SequenceStore, source_by_label
from .series import check_identity
from .suites import SUITES, exit_code_for, run_suite

_EXTENDABLE = {"e2p4": E2P4_RECURRENCE}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="esymlab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--cache-dir", default=os.environ.get("ESYMLAB_CACHE"),
                       help="directory for sequence cache files (env ESYMLAB_CACHE)")

    ps = sub.add_parser("seq", help="print a registered sequence over an index range")
    add_common(ps)
    ps.add_argument("--name", required=True)
    ps.add_argument("--from", dest="lo", type=int, required=True)
    ps.add_argument("--to", dest="hi", type=int, required=True)
    ps.add_argument("--mod", type=int, default=None)
    ps.add_argument("--format", choices=("csv", "json"), default="csv")
    ps.add_argument("--j", type=int, default=None, help="exponent parameter (sigma)")
    ps.add_argument("--src", choices=("all", "odd", "binary"), default=None, help="part source (sigma)")
    ps.add_argument("--jobs", type=int, default=1, help="compute the range in parallel chunks")

    pv = sub.add_parser("verify", help="run a verification suite")
    add_common(pv)
    pv.add_argument("--suite", required=True)
    pv.add_argument("--n-max", dest="n_max", type=int, default=None)
    pv.add_argument("--order", type=int, default=None)

    pp = sub.add_parser("period", help="detect the minimal eventual period of a sequence mod m")
    add_common(pp)
    pp.add_argument("--name", required=True)
    pp.add_argument("--mod", type=int, required=True)
    pp.add_argument("--window", type=int, default=500)
    pp.add_argument("--burn-in", dest="burn_in", type=int, default=None)
    pp.add_argument("--extend", action="store_true",
                    help="extend beyond the exact prefix with the registered recurrence")

    pg = sub.add_parser("gf", help="compare two q-series expressions coefficientwise")
    pg.add_argument("--lhs", required=True)
    pg.add_argument("--rhs", required=True)
    pg.add_argument("--order", type=int, default=200)
    pg.add_argument("--mod", type=int, default=None)
    return ap


def _seq_chunk(args: tuple) -> list[int]:
    name, lo, hi, j, src_label = args
    sd = SEQUENCES[name]
    src = source_by_label(src_label) if src_label else None
    values = sd.compute(hi, j, src) if sd.takes_params else sd.compute(hi)
    return values[lo - sd.start : hi - sd.start + 1]


def cmd_seq(args) -> int:
    name = args.name
    sd = SEQUENCES.get(name)
    if sd is None:
        print(f"unknown sequence {name!r}; known: {', '.join(sorted(SEQUENCES))}", file=sys.stderr)
        return 2
    if args.lo > args.hi or args.lo < sd.start:
        print(f"bad range [{args.lo}, {args.hi}]; sequence {name!r} starts at {sd.start}", file=sys.stderr)
        return 3
    src = source_by_label(args.src) if args.src else None
    if sd.takes_params and (args.j is None or src is None):
        print(f"sequence {name!r} needs --j and --src", file=sys.stderr)
        return 3
    if args.jobs > 1:
        bounds = []
        step = (args.hi - args.lo) // args.jobs + 1
        lo = args.lo
        while lo <= args.hi:
            hi = min(lo + step - 1, args.hi)
            bounds.append((name, lo, hi, args.j, args.src))
            lo = hi + 1
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            values = [v for chunk in pool.map(_seq_chunk, bounds) for v in chunk]
    else:
        store = SequenceStore(args.cache_dir)
        values = store.get(name, args.hi, args.j, src)[args.lo - sd.start :]
    if args.mod is not None:
        if args.mod < 2:
            print("--mod must be >= 2", file=sys.stderr)
            return 3
        values = [v % args.mod for v in values]
    rows = list(zip(range(args.lo, args.hi + 1), values))
    if args.format == "json":
        print(json.dumps([{"n": n, "value": str(v)} for n, v in rows]))
    else:
        print("n,residue" if args.mod is not None else "n,value")
        for n, v in rows:
            print(f"{n},{v}")
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}", file=sys.stderr)
        return 2
    store = SequenceStore(args.cache_dir)
    results = run_suite(args.suite, store, args.n_max, args.order)
    for r in results:
        mark = "  ok" if r.passed else "FAIL"
        detail = f"  [{r.detail}]" if (r.detail and not r.passed) else ""
        print(f"{mark}  {r.kind:<10}  {r.name}{detail}")
    code = exit_code_for(results)
    summary = {
        "suite": args.suite,
        "checks": len(results),
        "failed": [r.name for r in results if not r.passed],
        "exit_code": code,
    }
    print(json.dumps(summary))
    return code


def cmd_period(args) -> int:
    name = args.name
    sd = SEQUENCES.get(name)
    if sd is None:
        print(f"unknown sequence {name!r}", file=sys.stderr)
        return 2
    if args.mod < 2:
        print("--mod must be >= 2", file=sys.stderr)
        return 3
    if args.window < 8:
        print("--window too small", file=sys.stderr)
        return 3
    store = SequenceStore(args.cache_dir)
    if args.extend:
        rec = _EXTENDABLE.get(name)
        if rec is None:
            print(f"no recurrence registered for {name!r}; cannot --extend", file=sys.stderr)
            return 2
        prefix_hi = min(args.window - 1, E2P4_EXACT_LEN)
        prefix = store.get(name, prefix_hi)
        seq = extend_mod(prefix, rec, args.mod, args.window - 1)
    else:
        if name == "e2p4" and args.window - 1 > E2P4_EXACT_LEN:
            print(f"window exceeds the exact prefix ({E2P4_EXACT_LEN + 1} values); pass --extend",
                  file=sys.stderr)
            return 3
        values = store.get(name, args.window - 1 + sd.start)
        seq = ResidueSeq.from_exact(values, args.mod)
    try:
        rep = detect_period(seq, args.burn_in)
    except NoPeriodFound as exc:
        print(f"no period found: {exc}", file=sys.stderr)
        return 4
    provenance = "exact values"
    if rep.conditional:
        provenance = (f"exact to index {rep.exact_prefix - 1}, then recurrence extension "
                      "(conditional on conjectured recurrence)")
    print(f"sequence {name} mod {rep.modulus}: minimal period {rep.period}, "
          f"burn-in {rep.start} ({'pure' if rep.pure else 'eventual'}), window {rep.window}")
    print(f"provenance: {provenance}")
    return 0


def cmd_gf(args) -> int:
    if args.order < 1:
        print("--order must be >= 1", file=sys.stderr)
        return 3
    if args.mod is not None and args.mod < 2:
        print("--mod must be >= 2", file=sys.stderr)
        return 3
    try:
        lhs = eval_expr(parse_expr(args.lhs), args.order, args.mod)
        rhs = eval_expr(parse_expr(args.rhs), args.order, args.mod)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    mm = check_identity(lhs, rhs)
    if mm is None:
        print(f"Match to order {min(lhs.order, rhs.order)}"
              + (f" (mod {args.mod})" if args.mod is not None else ""))
        return 0
    print(f"Mismatch at exponent {mm.exponent}: lhs {mm.lhs} != rhs {mm.rhs}")
    return 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "seq":
            return cmd_seq(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "period":
            return cmd_period(args)
        return cmd_gf(args)
    except UnknownSequence as exc:
        print(f"unknown sequence: {exc}", file=sys.stderr)
        return 2
    except BadRange as exc:
        print(f"bad range: {exc}", file=sys.stderr)
        return 3
    except NoPeriodFound as exc:
        print(f"no period found: {exc}", file=sys.stderr)
        return 4
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
