"""Exhaustive oracles and certified bounds for the golden rotation.

The central scan is min_product: for coprime a, the exact minimum over
x = 1..F_n - 1 of dist(a x / F_n) * dist(F_{n-1} a x / F_n), where dist
is the distance to the nearest integer. Everything downstream compares
such minima against the threshold 2/(3+sqrt5) = (3-sqrt5)/2 exactly.

Scans are integer arithmetic throughout (numpy int64 under a scan cap
that keeps every intermediate below 2^63); results are converted to
Fractions only at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exact import Rat, dist_int, rat_decimal, rat_str
from .fib import fib, golden_convergent
from .nest import Certificate, approximants
from .report import BoundReport, ReportBundle, bound_report, equality_report
from .surd import GOLDEN_INV_SQ, GOLDEN_SQ, Quad, THRESHOLD_LABEL

SCAN_CAP = 10**6


class ScanCapExceeded(ValueError):
    pass


class ProxyTooShallow(ValueError):
    """The proxy error budget swallows the whole product; bound vacuous."""


@dataclass(frozen=True)
class MinRecord:
    n: int
    a: int
    x_min: int
    value: Rat  # the minimum product itself
    scaled: Rat  # F_n * value


@dataclass(frozen=True)
class ErrorBudget:
    x_max: int
    per_x_error: Rat  # bound on |alpha - proxy| * x over the scan
    product_error: Rat  # bound on the product drift over the scan


def _require_scan_size(fn: int, scan_cap: int) -> None:
    if fn > scan_cap:
        raise ScanCapExceeded(f"F_n = {fn} exceeds scan cap {scan_cap}")


def min_product(n: int, a: int, scan_cap: int = SCAN_CAP) -> MinRecord:
    """Exact minimum of the distance product over x = 1..F_n - 1.

    Requires n >= 3, 1 <= a < F_n and gcd(a, F_n) = 1. Ties break to the
    smallest x.
    """
    if n < 3:
        raise ValueError(f"min_product needs n >= 3, got {n}")
    fn = fib(n)
    _require_scan_size(fn, scan_cap)
    if not 1 <= a < fn:
        raise ValueError(f"need 1 <= a < F_{n} = {fn}, got a = {a}")
    if math.gcd(a, fn) != 1:
        raise ValueError(f"a = {a} is not coprime to F_{n} = {fn}")
    b = (a * fib(n - 1)) % fn
    # int64 bounds: operands < F_n <= scan_cap <= 10^6, so products < 10^12
    x = np.arange(1, fn, dtype=np.int64)
    r1 = (a * x) % fn
    r2 = (b * x) % fn
    np.minimum(r1, fn - r1, out=r1)
    np.minimum(r2, fn - r2, out=r2)
    products = r1 * r2
    idx = int(np.argmin(products))  # first occurrence = smallest x
    best = int(products[idx])
    return MinRecord(
        n=n,
        a=a,
        x_min=idx + 1,
        value=Fraction(best, fn * fn),
        scaled=Fraction(best, fn),
    )


def check_min_product_bound(
    n: int, a: int, scan_cap: int = SCAN_CAP
) -> tuple[BoundReport, MinRecord]:
    """Compare F_n * min_product against 2/(3+sqrt5), exactly."""
    rec = min_product(n, a, scan_cap)
    implied = Quad.of(Fraction(1) / rec.scaled) - GOLDEN_SQ
    if implied.sign() < 0:
        implied = Quad.of(0)
    report = bound_report(
        f"min-product-bound[n={n}, a={a}]",
        rec.scaled,
        GOLDEN_INV_SQ,
        witness=rec.x_min,
        rhs_label=THRESHOLD_LABEL,
        notes=f"implied epsilon {implied.decimal(50)}",
    )
    return report, rec


def convergent_family(n: int) -> set[Rat]:
    """All convergents of F_{n-1}/F_n: 0/1, 1/1, 1/2, 2/3, ..., F_{n-1}/F_n."""
    family = {Fraction(0, 1)}
    for k in range(2, n + 1):
        family.add(golden_convergent(k))
    return family


def check_nonconvergent_gap(n: int, x_max: int) -> BoundReport:
    """Over reduced y/x in [0, 1] with x <= x_max, excluding the
    convergent family, check min x^2 |F_{n-1}/F_n - y/x| >= 1/2."""
    if n < 3:
        raise ValueError(f"check_nonconvergent_gap needs n >= 3, got {n}")
    fn = fib(n)
    if not 2 <= x_max < fn:
        raise ValueError(f"need 2 <= x_max < F_{n} = {fn}, got {x_max}")
    p = fib(n - 1)
    family = convergent_family(n)
    best_units: Optional[int] = None  # best of x * |p x - fn y|, scaled by fn
    best_pair = (0, 1)
    for x in range(1, x_max + 1):
        for y in range(0, x + 1):
            if math.gcd(y, x) != 1:
                continue
            if Fraction(y, x) in family:
                continue
            units = x * abs(p * x - fn * y)
            if best_units is None or units < best_units:
                best_units = units
                best_pair = (y, x)
    if best_units is None:
        raise ValueError(f"no non-convergent fraction with x <= {x_max}")
    lhs = Fraction(best_units, fn)
    return bound_report(
        f"nonconvergent-gap[n={n}, x_max={x_max}]",
        lhs,
        Fraction(1, 2),
        witness=best_pair,
        notes=f"minimizing fraction {best_pair[0]}/{best_pair[1]}",
    )


def convergent_gap(n: int, k: int) -> ReportBundle:
    """Exact gap between the n-th and k-th convergents.

    The subtraction must reproduce the closed form F_{n-k}/(F_n F_k);
    the identity is verified, never assumed. The gap is then compared
    against 1/(F_k^2 * golden^2) exactly in Q(sqrt5)."""
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got k={k}, n={n}")
    gap = abs(golden_convergent(n) - golden_convergent(k))
    closed = Fraction(fib(n - k), fib(n) * fib(k))
    identity = equality_report(
        f"convergent-gap-identity[n={n}, k={k}]",
        gap,
        closed,
        notes="subtraction equals F_{n-k}/(F_n F_k)",
    )
    fk2 = Fraction(fib(k)) ** 2
    implied = Quad.of(1 / (gap * fk2)) - GOLDEN_SQ
    if implied.sign() < 0:
        implied = Quad.of(0)
    bound = bound_report(
        f"convergent-gap-bound[n={n}, k={k}]",
        gap,
        GOLDEN_INV_SQ / fk2,
        rhs_label=f"1/(F_{k}^2*(golden+1))",
        notes=f"implied epsilon {implied.decimal(50)}",
    )
    return ReportBundle(name=f"convergent-gap[n={n}, k={k}]", items=(identity, bound))


@dataclass(frozen=True)
class LittlewoodResult:
    report: BoundReport
    budget: ErrorBudget
    record: MinRecord  # certified lower-bound scan record (x_min, values)


def littlewood_lower_bound(
    cert: Certificate,
    level: int,
    proxy_level: int,
    zero_error: bool = False,
    scan_cap: int = SCAN_CAP,
) -> LittlewoodResult:
    """Certified lower bound for Q * min over 1 <= x < Q of
    dist(alpha x) dist(beta x), with Q = F_{n_level}.

    The scan runs on the level stage's exact rationals; the proxy stage
    supplies the deviation radius err (its window width delta/F_n^2), and
    each factor is lowered pointwise: dist(alpha x) >= max(0,
    dist(alpha_level x) - x err) for any alpha within err of the stage
    value. Deeper proxies shrink err, so the certified lhs is
    non-decreasing in proxy_level. With zero_error=True the drift term is
    dropped (err = 0) and proxy_level = level reproduces the min_product
    scan verbatim.
    """
    if not 1 <= level < len(cert.stages):
        raise ValueError(f"level must be in [1, {len(cert.stages) - 1}], got {level}")
    low = level if zero_error else level + 1
    if not low <= proxy_level < len(cert.stages):
        raise ValueError(
            f"proxy_level must be in [{low}, {len(cert.stages) - 1}], got {proxy_level}"
        )
    st = cert.stages[level]
    q = fib(st.n)
    _require_scan_size(q, scan_cap)
    p_alpha, p_beta = st.alpha, st.beta
    err = approximants(cert, proxy_level)[2]
    if zero_error:
        err = Fraction(0)
    if err * (q - 1) >= Fraction(1, 2):
        raise ProxyTooShallow(
            f"err * (Q-1) = {err * (q - 1)} >= 1/2; proxy level {proxy_level} "
            f"is too shallow for Q = F_{st.n} = {q}"
        )
    best: Optional[Fraction] = None
    best_x = 1
    zero = Fraction(0)
    for x in range(1, q):
        drift = x * err
        d1 = max(zero, dist_int(p_alpha * x) - drift)
        d2 = max(zero, dist_int(p_beta * x) - drift)
        prod = d1 * d2
        if best is None or prod < best:
            best = prod
            best_x = x
    assert best is not None
    budget = ErrorBudget(
        x_max=q - 1,
        per_x_error=(q - 1) * err,
        product_error=(q - 1) * err,
    )
    lhs = q * best
    report = bound_report(
        f"littlewood-lower-bound[level={level}, proxy={proxy_level}]",
        lhs,
        GOLDEN_INV_SQ,
        witness=best_x,
        rhs_label=THRESHOLD_LABEL,
        notes=(
            f"Q = F_{st.n} = {q}, err = {rat_str(err)}, "
            f"product drift <= {rat_str(budget.product_error)}"
        ),
    )
    record = MinRecord(n=st.n, a=st.a, x_min=best_x, value=best, scaled=lhs)
    return LittlewoodResult(report=report, budget=budget, record=record)


# ---- star discrepancy ----


def star_discrepancy_of_points(points: Sequence[Rat]) -> Rat:
    """Exact star discrepancy of a finite point set in [0, 1], by the
    sorted-points formula
        D*_N = max_i max(x_(i) - (i-1)/N, i/N - x_(i))."""
    if not points:
        raise ValueError("empty point set")
    pts = sorted(Fraction(p) for p in points)
    if pts[0] < 0 or pts[-1] > 1:
        raise ValueError("points must lie in [0, 1]")
    n = len(pts)
    best = Fraction(0)
    for i, p in enumerate(pts, start=1):
        best = max(best, p - Fraction(i - 1, n), Fraction(i, n) - p)
    return best


def star_discrepancy(
    n: int,
    count: int,
    cap: Optional[Rat] = None,
    scan_cap: int = SCAN_CAP,
) -> BoundReport:
    """Star discrepancy of {frac(F_{n-1} x / F_n) : x = 1..count}.

    D* and count * D* are exact rationals. The logarithmic quotient
    count * D* / ln(count + 1) needs a transcendental denominator, so a
    cap on it is checked against the rational snapshot cap * ln(count+1)
    rounded to 12 places (the snapshot is recorded in the notes; caps
    are measured constants with wide margins, not sharp thresholds).
    """
    if n < 3:
        raise ValueError(f"star_discrepancy needs n >= 3, got {n}")
    fn = fib(n)
    _require_scan_size(fn, scan_cap)
    if not 1 <= count < fn:
        raise ValueError(f"need 1 <= count < F_{n} = {fn}, got {count}")
    step = fib(n - 1) % fn
    residues = sorted((step * x) % fn for x in range(1, count + 1))
    # scale everything by count * F_n to stay in integers
    worst = 0
    for i, r in enumerate(residues, start=1):
        worst = max(worst, r * count - (i - 1) * fn, i * fn - r * count)
    d_star = Fraction(worst, count * fn)
    scaled = count * d_star
    ratio = float(scaled) / math.log(count + 1)
    notes = (
        f"D* = {rat_str(d_star)}, count*D* = {rat_str(scaled)}, "
        f"count*D*/ln(count+1) = {ratio:.6f}"
    )
    if cap is None:
        return bound_report(
            f"star-discrepancy[n={n}, count={count}]",
            scaled,
            Fraction(0),
            notes=notes,
        )
    cap = Fraction(cap)
    snapshot = Fraction(format(float(cap) * math.log(count + 1), ".12f"))
    return bound_report(
        f"star-discrepancy[n={n}, count={count}]",
        snapshot,
        scaled,
        notes=notes + f"; cap {rat_decimal(cap, 6)} via snapshot {rat_str(snapshot)}",
    )


# ---- tabulation ----

PRIOR_BOUND = Fraction(5326, 10**6)  # 0.005326, the bound this construction beats


@dataclass(frozen=True)
class LimitRow:
    n: int
    fib_n: int
    scaled: Rat
    strict_pass: bool
    x_min: int


def limit_table(n_from: int, n_to: int, scan_cap: int = SCAN_CAP) -> list[LimitRow]:
    if not 3 <= n_from <= n_to:
        raise ValueError(f"need 3 <= n_from <= n_to, got {n_from}..{n_to}")
    rows = []
    for n in range(n_from, n_to + 1):
        rec = min_product(n, 1, scan_cap)
        rows.append(
            LimitRow(
                n=n,
                fib_n=fib(n),
                scaled=rec.scaled,
                strict_pass=(Quad.of(rec.scaled) - GOLDEN_INV_SQ).sign() >= 0,
                x_min=rec.x_min,
            )
        )
    return rows


def limit_table_footer(rows: Sequence[LimitRow]) -> str:
    """Footer contrasting the achieved constants with the prior bound."""
    smallest = min(row.scaled for row in rows)
    factor = smallest / PRIOR_BOUND
    return (
        f"# smallest scaled minimum = {rat_decimal(smallest, 12)}; "
        f"prior bound = 0.005326; improvement factor = {rat_decimal(factor, 2)}"
    )


def limit_table_csv(rows: Sequence[LimitRow]) -> str:
    lines = ["n,fib_n,scaled_min,decimal,strict_pass"]
    for row in rows:
        lines.append(
            f"{row.n},{row.fib_n},{rat_str(row.scaled)},"
            f"{rat_decimal(row.scaled, 12)},{'true' if row.strict_pass else 'false'}"
        )
    lines.append(limit_table_footer(rows))
    return "\n".join(lines) + "\n"
