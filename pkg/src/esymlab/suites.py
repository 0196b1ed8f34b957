"""Named verification suites behind the `verify` CLI command.

Each check is tagged as `theorem` (a proven statement or an internal
consistency requirement; failing means a bug somewhere, exit code 1) or
`conjecture` (an open statement scanned at desk scale; a failure is a
discovery, exit code 10).  Every suite pulls at least one sequence through
the SequenceStore, so a corrupted cache file surfaces as a failed check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import prelab
from .aggregates import ejp_bruteforce, ejp_closed_form, ejp_dp, power_sum_dp, sigma_restricted
from .conjectures import logconcavity_scan, ratio_logconcavity_scan
from .errors import NoPeriodFound
from .modlab import (
    E2P4_RECURRENCE,
    ResidueSeq,
    binary_ejp_parity_check,
    binary_sum_mod4_check,
    detect_period,
    e2_residue_class,
    verify_linear_recurrence,
)
from .partitions import ALL, BINARY, ODD, _iter_tuples
from .qparser import eval_expr, parse_expr
from .registry import SequenceStore
from .series import check_identity, divisor_power_series, product_over_source, series_from_values
from .symfun import elem_sym

THEOREM = "theorem"
CONJECTURE = "conjecture"

MOD2_E2P4_RHS = "q^6/((1-q^2)^2*(1-q^4)^2)+q^5/((1-q^2)^2*(1-q^4)*(1-q^6))"
MOD3_E2P4_RHS = "(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)"
B12_RHS = "q^2/(1-q)*#binaryOddProd"


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str
    passed: bool
    detail: str = ""


def _check(name: str, kind: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, kind, bool(passed), detail)


def suite_theorem1(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 30
    out: list[CheckResult] = []
    names = {(2, "all"): "e2p", (3, "all"): "e3p", (2, "odd"): "e2Q", (3, "odd"): "e3Q",
             (2, "binary"): "e2B", (3, "binary"): "e3B"}
    for src in (ALL, ODD, BINARY):
        for j in (2, 3):
            seq = store.get(names[(j, src.label)], n_max)
            bad = None
            for n in range(1, n_max + 1):
                bf = ejp_bruteforce(n, j, src)
                cf = ejp_closed_form(n, j, src)
                if not (bf == cf == seq[n]):
                    bad = (n, bf, cf, seq[n])
                    break
            out.append(_check(
                f"{names[(j, src.label)]}: enumeration = closed form = DP (n <= {n_max})",
                THEOREM, bad is None, "" if bad is None else f"first divergence {bad}"))
    anchors = {("e2p", 4): 18, ("e3p", 4): 6, ("e2Q", 5): 17, ("e2B", 6): 71}
    for (nm, n), want in anchors.items():
        if n <= n_max:
            got = store.get(nm, n)[n]
            out.append(_check(f"anchor {nm}({n}) = {want}", THEOREM, got == want, f"got {got}"))
    return out


def suite_th0(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    # the period-96 detection needs a window of at least 4 * 96 values
    n_max = max(n_max or 600, 400)
    vals = store.get("e2p4", n_max)
    out: list[CheckResult] = []
    for shift, m in ((48, 2), (54, 3), (96, 4)):
        ok = all(vals[n + shift] % m == vals[n] % m for n in range(0, n_max - shift + 1))
        out.append(_check(f"e2p4(n+{shift}) = e2p4(n) mod {m} on [0, {n_max}]", THEOREM, ok))
    for m, want in ((2, 48), (3, 54), (4, 96)):
        try:
            rep = detect_period(ResidueSeq.from_exact(vals, m), burn_in_max=0)
            ok = rep.period == want and rep.start == 0
            detail = f"detected {rep.period} from {rep.start}"
        except NoPeriodFound as exc:
            ok, detail = False, str(exc)
        out.append(_check(f"minimal period mod {m} is {want} (pure)", THEOREM, ok, detail))
    bad = verify_linear_recurrence(vals, E2P4_RECURRENCE)
    out.append(_check(
        f"order-22 recurrence holds on [0, {n_max - 22}]", THEOREM, bad is None,
        "" if bad is None else f"first failure at {bad}"))
    return out


def suite_th3(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 150
    e2b = store.get("e2B", n_max)
    e3b = store.get("e3B", n_max)
    pb = store.get("pB", n_max)
    out: list[CheckResult] = []
    out.append(_check(f"e2B(n) odd for 2 <= n <= {n_max}", THEOREM,
                      all(e2b[n] % 2 == 1 for n in range(2, n_max + 1))))
    out.append(_check(f"e3B(n) = n mod 2 for 2 <= n <= {n_max}", THEOREM,
                      all(e3b[n] % 2 == n % 2 for n in range(2, n_max + 1))))
    bad = next((n_j for n_j in ((n, j) for j in range(2, 9) for n in range(2, n_max + 1))
                if not binary_ejp_parity_check(*n_j).passed), None)
    out.append(_check(f"e_jB parity matches binomial(n-2, j-2) mod 2 (j <= 8, n <= {n_max})",
                      THEOREM, bad is None, "" if bad is None else f"fails at {bad}"))
    bad4 = next((n for n in range(3, n_max + 1) if not binary_sum_mod4_check(n, pb).passed), None)
    out.append(_check(f"mod-4 sums of B(n) for 3 <= n <= {n_max}", THEOREM, bad4 is None,
                      "" if bad4 is None else f"fails at {bad4}"))
    return out


def suite_residue_classes(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 60
    e2p4 = store.get("e2p4", n_max)
    bad = None
    sums_ok = True
    for n in range(4, n_max + 1):
        total = 0
        for t in _iter_tuples(n, ALL, 4):
            e2 = elem_sym(t, 2)
            total += e2
            for m in (2, 3, 4):
                if e2_residue_class(t, m) != e2 % m:
                    bad = bad or (n, t, m)
        if total != e2p4[n]:
            sums_ok = False
    out = [_check(f"residue classes match e_2 mod 2/3/4 on 4-part partitions (n <= {n_max})",
                  THEOREM, bad is None, "" if bad is None else f"fails at {bad}"),
           _check(f"sum of e_2 over 4-part partitions matches e2p4 (n <= {n_max})", THEOREM, sums_ok)]
    return out


def suite_gf_identities(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    order = order or 200
    out: list[CheckResult] = []
    for label, src, name in (("all", ALL, "p"), ("odd", ODD, "pQ"), ("binary", BINARY, "pB")):
        counts = store.get(name, order)
        prod = product_over_source(src, order)
        mm = check_identity(prod, series_from_values(counts, order))
        out.append(_check(f"product over {label} parts = partition counts (order {order})",
                          THEOREM, mm is None, "" if mm is None else str(mm)))
        for j in (1, 2, 3):
            sig = divisor_power_series(j, src, order)
            ok = all(sig.coeff(n) == sigma_restricted(n, j, src) for n in range(1, order + 1))
            out.append(_check(f"divisor series j={j} over {label} matches sigma", THEOREM, ok))
            lhs = series_from_values(power_sum_dp(order, j, src), order)
            mm = check_identity(lhs, prod * sig)
            out.append(_check(f"power-sum totals j={j} over {label}: product formula",
                              THEOREM, mm is None, "" if mm is None else str(mm)))
    e2p4 = store.get("e2p4", order)
    for m, rhs_text in ((2, MOD2_E2P4_RHS), (3, MOD3_E2P4_RHS)):
        lhs = series_from_values(e2p4, order, modulus=m)
        rhs = eval_expr(parse_expr(rhs_text), order, modulus=m)
        mm = check_identity(lhs, rhs)
        out.append(_check(f"e2p4 series congruence mod {m} (order {order})", THEOREM,
                          mm is None, "" if mm is None else str(mm)))
    b12_vals = store.get("b12", order)
    rhs = eval_expr(parse_expr(B12_RHS), order)
    mm = check_identity(series_from_values(b12_vals, order), rhs)
    out.append(_check(f"b12 generating function product form (order {order})", THEOREM,
                      mm is None, "" if mm is None else str(mm)))
    return out


def suite_b12(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 40
    seq = store.get("b12", n_max)
    out = [_check("b12(1) = 0 and b12(2) = 1", THEOREM, seq[1] == 0 and seq[2] == 1)]
    bad = next((n for n in range(1, n_max + 1)
                if not (prelab.b12(n) == prelab.b12_recurrence(n) == seq[n])), None)
    out.append(_check(f"b12 enumeration = recurrence = stored values (n <= {n_max})",
                      THEOREM, bad is None, "" if bad is None else f"fails at n={bad}"))
    return out


def suite_b22(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 40
    fast_hi = max(250, n_max)
    seq = store.get("b22", 2 * fast_hi + 2)
    fast = prelab.b22_fast_upto(2 * fast_hi + 2)
    out = [_check(f"stored b22 equals fast table (n <= {2 * fast_hi + 2})", THEOREM, seq == fast)]
    bad = next((n for n in range(0, n_max + 1) if prelab.b22(n) != fast[n]), None)
    out.append(_check(f"b22 by explicit images = fast path (n <= {n_max})", THEOREM,
                      bad is None, "" if bad is None else f"fails at n={bad}"))
    badd = next((n for n in range(0, fast_hi + 1) if not prelab.b22_delta_check(n, fast).passed), None)
    out.append(_check(f"delta b22 at 2n and 2n+1 equals b12(n+1) (n <= {fast_hi})", THEOREM,
                      badd is None, "" if badd is None else f"fails at n={badd}"))
    return out


def suite_injectivity(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 20
    out: list[CheckResult] = []
    p_counts = store.get("p", n_max)
    coll = None
    counts_ok = True
    for n in range(0, n_max + 1):
        iset = prelab.image_set(n, 2, ALL)
        if iset.collisions:
            coll = coll or (n, iset.collisions[0])
        if iset.preimage_count != p_counts[n]:
            counts_ok = False
    out.append(_check(f"pair-product map is injective on all partitions (n <= {n_max})",
                      CONJECTURE, coll is None, "" if coll is None else f"collision at {coll}"))
    out.append(_check(f"preimage counts match stored p(n) (n <= {n_max})", THEOREM, counts_ok))
    nb = max(40, n_max)
    pb_counts = store.get("pB", nb)
    collb = None
    counts_ok_b = True
    for n in range(0, nb + 1):
        iset = prelab.image_set(n, 2, BINARY)
        if iset.collisions:
            collb = collb or (n, iset.collisions[0])
        if iset.preimage_count != pb_counts[n]:
            counts_ok_b = False
    out.append(_check(f"pair-product map is injective on binary partitions (n <= {nb})",
                      THEOREM, collb is None, "" if collb is None else f"collision at {collb}"))
    out.append(_check(f"preimage counts match stored pB(n) (n <= {nb})", THEOREM, counts_ok_b))
    nl = max(60, n_max)
    bad3 = next((n for n in range(0, nl + 1)
                 if prelab.injectivity_scan(n, 2, ALL, max_length=3) is not None), None)
    out.append(_check(f"pair-product map is injective on partitions of length <= 3 (n <= {nl})",
                      THEOREM, bad3 is None, "" if bad3 is None else f"collision at n={bad3}"))
    n3 = min(16, n_max)
    bad4 = next((n for n in range(0, n3 + 1)
                 if prelab.injectivity_scan(n, 3, ALL, min_length=4) is not None), None)
    out.append(_check(f"triple-product map is injective on partitions of length >= 4 (n <= {n3})",
                      CONJECTURE, bad4 is None, "" if bad4 is None else f"collision at n={bad4}"))
    return out


def suite_odd_distinct(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 26
    pq = store.get("pQ", n_max)
    out: list[CheckResult] = []
    o1 = []
    d1 = []
    for n in range(0, n_max + 1):
        c = prelab.odd_distinct_counts(n, 1)
        o1.append(c.odd)
        d1.append(c.distinct)
    out.append(_check(f"o1(n) = d1(n) (Euler, n <= {n_max})", THEOREM,
                      all(o1[n] == d1[n] for n in range(n_max + 1))))
    out.append(_check(f"o1(n) equals stored odd-part counts (n <= {n_max})", THEOREM,
                      all(o1[n] == pq[n] for n in range(n_max + 1))))
    o2 = []
    d2 = []
    for n in range(0, n_max + 1):
        c = prelab.odd_distinct_counts(n, 2)
        o2.append(c.odd)
        d2.append(c.distinct)
    out.append(_check(f"o2(n) >= d2(n) (n <= {n_max})", CONJECTURE,
                      all(o2[n] >= d2[n] for n in range(n_max + 1))))
    out.append(_check(f"o2(n) - o1(n) = [n even] (1 <= n <= {n_max})", CONJECTURE,
                      all(o2[n] - o1[n] == (1 if n % 2 == 0 else 0) for n in range(1, n_max + 1))))
    if n_max >= 21:
        hi3 = min(n_max, 30)
        ok3 = True
        for n in range(21, hi3 + 1):
            c = prelab.odd_distinct_counts(n, 3)
            if c.odd < c.distinct:
                ok3 = False
        out.append(_check(f"o3(n) >= d3(n) (21 <= n <= {hi3})", CONJECTURE, ok3))
    return out


def suite_logconcavity(store: SequenceStore, n_max: int | None, order: int | None) -> list[CheckResult]:
    n_max = n_max or 100
    p = store.get("p", n_max + 1)
    e2p = store.get("e2p", n_max + 1)
    e3p = store.get("e3p", n_max + 1)
    out: list[CheckResult] = []
    rep = logconcavity_scan(p, 26, n_max, "p")
    out.append(_check(f"p(n) log-concave on [26, {n_max}]", THEOREM, rep.holds, str(rep.violations)))
    e1p = [n * p[n] for n in range(n_max + 2)]
    rep = logconcavity_scan(e1p, 1, n_max, "e1p")
    out.append(_check("e1p violations confined to n <= 23", CONJECTURE,
                      bool(rep.violations) and max(rep.violations) <= 23, str(rep.violations)))
    rep = logconcavity_scan(e2p, 1, n_max, "e2p")
    out.append(_check("e2p violations confined to n <= 17", CONJECTURE,
                      bool(rep.violations) and max(rep.violations) <= 17, str(rep.violations)))
    tables = {2: e2p, 3: e3p}
    for j in (3, 4, 5):
        vals = tables.get(j) or ejp_dp(n_max + 1, j, ALL)
        tables[j] = vals
        rep = logconcavity_scan(vals, 1, n_max, f"e{j}p")
        out.append(_check(f"e{j}p log-concave on [1, {n_max}]", CONJECTURE, rep.holds, str(rep.violations)))
    tables[1] = e1p
    for j in (1, 2, 3, 4, 5):
        for variant in ("F", "F/n"):
            rep = ratio_logconcavity_scan(j, variant, 2, n_max, ejp_values=tables[j], p_values=p)
            out.append(_check(f"ratio variant {variant} log-concave for j={j} on [2, {n_max}]",
                              CONJECTURE, rep.holds, str(rep.violations)))
    return out


SuiteFn = Callable[[SequenceStore, "int | None", "int | None"], list[CheckResult]]

SUITES: dict[str, SuiteFn] = {
    "theorem1": suite_theorem1,
    "th0": suite_th0,
    "th3": suite_th3,
    "residue-classes": suite_residue_classes,
    "gf-identities": suite_gf_identities,
    "b12": suite_b12,
    "b22": suite_b22,
    "injectivity": suite_injectivity,
    "odd-distinct": suite_odd_distinct,
    "logconcavity": suite_logconcavity,
}


def run_suite(name: str, store: SequenceStore, n_max: int | None = None, order: int | None = None) -> list[CheckResult]:
    if name == "all":
        results: list[CheckResult] = []
        for key in SUITES:
            results.extend(run_suite(key, store, n_max, order))
        return results
    return SUITES[name](store, n_max, order)


def exit_code_for(results: list[CheckResult]) -> int:
    if any(not r.passed and r.kind == THEOREM for r in results):
        return 1
    if any(not r.passed for r in results):
        return 10
    return 0
