"""Nested Fibonacci-interval certificates with exact verification of
Littlewood-type product bounds."""

from .bounds import (
    ErrorBudget,
    LittlewoodResult,
    MinRecord,
    ProxyTooShallow,
    ScanCapExceeded,
    check_min_product_bound,
    check_nonconvergent_gap,
    convergent_gap,
    limit_table,
    limit_table_csv,
    littlewood_lower_bound,
    min_product,
    star_discrepancy,
    star_discrepancy_of_points,
)
from .exact import Rat, UnitInterval, dist_int, frac, rat_decimal, rat_str, trim
from .fib import (
    ZeckendorfRep,
    cf_expand,
    cf_value,
    fib,
    fib_gcd,
    fib_index_at_least,
    golden_convergent,
    zeckendorf,
)
from .nest import (
    Certificate,
    DeltaSchedule,
    DepthUnreachable,
    Stage,
    approximants,
    build,
    certificate_from_json,
    certificate_to_json,
    schedule_by_name,
    seed_stage,
    verify_certificate,
)
from .report import BoundReport, ReportBundle
from .search import (
    LemmaWitness,
    RangeTooLarge,
    SearchConfig,
    TwoScaleExhausted,
    find_brute,
    find_two_scale,
    find_witness,
    select_kstar,
    verify_witness,
)
from .surd import GOLDEN, GOLDEN_INV_SQ, GOLDEN_SQ, SQRT5, Quad

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Certificate",
    "DeltaSchedule",
    "DepthUnreachable",
    "ErrorBudget",
    "GOLDEN",
    "GOLDEN_INV_SQ",
    "GOLDEN_SQ",
    "LemmaWitness",
    "LittlewoodResult",
    "MinRecord",
    "ProxyTooShallow",
    "Quad",
    "RangeTooLarge",
    "Rat",
    "ReportBundle",
    "SQRT5",
    "ScanCapExceeded",
    "SearchConfig",
    "Stage",
    "TwoScaleExhausted",
    "UnitInterval",
    "ZeckendorfRep",
    "approximants",
    "build",
    "cf_expand",
    "cf_value",
    "certificate_from_json",
    "certificate_to_json",
    "check_min_product_bound",
    "check_nonconvergent_gap",
    "convergent_gap",
    "dist_int",
    "fib",
    "fib_gcd",
    "fib_index_at_least",
    "find_brute",
    "find_two_scale",
    "find_witness",
    "frac",
    "golden_convergent",
    "limit_table",
    "limit_table_csv",
    "littlewood_lower_bound",
    "min_product",
    "rat_decimal",
    "rat_str",
    "schedule_by_name",
    "seed_stage",
    "select_kstar",
    "star_discrepancy",
    "star_discrepancy_of_points",
    "trim",
    "verify_certificate",
    "verify_witness",
    "zeckendorf",
]
