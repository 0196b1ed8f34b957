"""Exact partition statistics from elementary symmetric polynomials.

Partition enumeration, aggregate e_j sums with independent evaluation
routes, a truncated q-series engine with a small expression language,
residue-period tooling, subset-product image statistics and log-concavity
scanners, plus a CLI (`esymlab`) and an on-disk sequence cache.
"""

from .aggregates import (
    ejp_bruteforce,
    ejp_closed_form,
    ejp_dp,
    power_sum_dp,
    power_sum_total,
    sigma_restricted,
)
from .conjectures import ViolationReport, logconcavity_scan, ratio_logconcavity_scan
from .modlab import (
    E2P4_RECURRENCE,
    LinRecurrence,
    PeriodReport,
    ResidueSeq,
    binary_ejp_parity_check,
    binary_sum_mod4_check,
    comb_parity,
    detect_period,
    e2_residue_class,
    extend_mod,
    verify_linear_recurrence,
)
from .partitions import (
    ALL,
    BINARY,
    ODD,
    Partition,
    PartSource,
    count_partitions,
    count_partitions_upto,
    finite_source,
    iter_partitions,
)
from .prelab import (
    ImageSet,
    OddDistinctCount,
    b12,
    b12_recurrence,
    b22,
    b22_delta_check,
    b22_fast_upto,
    image_set,
    injectivity_scan,
    odd_distinct_counts,
)
from .qparser import eval_expr, format_expr, parse_expr
from .series import (
    FirstMismatch,
    TruncatedSeries,
    check_identity,
    divisor_power_series,
    extract_power,
    product_over_source,
    series_from_values,
    substitute_power,
)
from .symfun import (
    DEFAULT_EXPANSION_CAP,
    elem_sym,
    elem_sym_newton,
    elem_sym_subsets,
    elem_vector,
    power_sum,
    subset_products,
)

__version__ = "0.1.0"
