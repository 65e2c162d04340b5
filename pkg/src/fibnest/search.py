"""Witness search for coprime numerator placement.

Given an index n and two target windows, find a with 1 <= a < F_n,
gcd(a, F_n) = 1, such that a/F_n lands in I and frac(F_{n-1} a / F_n)
lands in J.

Two strategies are provided:

* find_brute scans every admissible position in increasing order. It is
  exhaustive (authoritative) but the candidate count grows like
  len(I) * F_n.

* find_two_scale corrects the fractional part greedily. A step of F_k
  on a moves the residue F_{n-1} a mod F_n by exactly (-1)^(k-1) F_{n-k},
  so coarse-to-fine Fibonacci steps steer the residue into the middle
  third of J while the position stays in the left half of I; multiples
  of F_{k*} for a near-half index k* coprime to n then restore
  coprimality without leaving either window. All conditions are
  re-verified exactly before a witness is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Rat, UnitInterval, frac
from .fib import fib
from .report import ReportBundle, bound_report, equality_report, membership_report


class RangeTooLarge(RuntimeError):
    """Brute candidate count exceeds the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"brute scan of {count} candidates exceeds cap {cap}")
        self.count = count
        self.cap = cap


class TwoScaleExhausted(RuntimeError):
    """No coprimality adjustment j <= j_max worked in stage 2."""


@dataclass(frozen=True)
class SearchConfig:
    strategy: str = "auto"  # brute | two_scale | auto
    brute_cap: int = 10_000_000
    j_max: int = 64
    sigma_hint: Rat = Fraction(1, 10)

    def __post_init__(self) -> None:
        if self.strategy not in ("brute", "two_scale", "auto"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.brute_cap < 1:
            raise ValueError("brute_cap must be >= 1")
        if self.j_max < 0:
            raise ValueError("j_max must be >= 0")

    def effective_j_max(self, n: int) -> int:
        """j_max, enlarged to floor(F_n ** sigma_hint) when that is bigger."""
        sigma = Fraction(self.sigma_hint)
        if sigma <= 0:
            return self.j_max
        grown = _iroot(fib(n) ** sigma.numerator, sigma.denominator)
        return max(self.j_max, grown)


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class LemmaWitness:
    n: int
    a: int
    alpha_n: Rat
    beta_n: Rat
    strategy_used: str


def _iroot(x: int, r: int) -> int:
    """floor(x ** (1/r)) for x >= 0, r >= 1, by integer Newton."""
    if x < 0 or r < 1:
        raise ValueError("need x >= 0 and r >= 1")
    if x == 0 or r == 1:
        return x
    g = 1 << (x.bit_length() // r + 1)
    while True:
        ng = ((r - 1) * g + x // g ** (r - 1)) // r
        if ng >= g:
            break
        g = ng
    while g**r > x:
        g -= 1
    while (g + 1) ** r <= x:
        g += 1
    return g


def select_kstar(n: int) -> int:
    """The index k in [2, n) coprime to n nearest to n/2, ties to larger k."""
    if n < 4:
        raise ValueError(f"select_kstar needs n >= 4, got {n}")
    # |2k - n| takes values of the parity of n; enumerate outward, larger k first
    t = 0 if n % 2 == 0 else 1
    while t <= n:
        for k in ((n + t) // 2, (n - t) // 2):
            if 2 <= k < n and math.gcd(k, n) == 1 and abs(2 * k - n) == t:
                return k
        t += 2
    raise RuntimeError(f"no admissible k for n={n}")  # unreachable for n >= 4


def _position_range(n: int, span: UnitInterval) -> tuple[int, int]:
    """Integer positions a with a/F_n in span, clamped to 1 <= a < F_n."""
    fn = fib(n)
    lo = max(math.ceil(span.lo * fn), 1)
    hi = min(math.floor(span.hi * fn), fn - 1)
    return lo, hi


def candidate_count(n: int, region: UnitInterval) -> int:
    lo, hi = _position_range(n, region)
    return max(0, hi - lo + 1)


def _residue_window(n: int, span: UnitInterval) -> tuple[int, int]:
    """Integer residues r with r/F_n in span (residues live in [0, F_n))."""
    fn = fib(n)
    lo = max(math.ceil(span.lo * fn), 0)
    hi = min(math.floor(span.hi * fn), fn - 1)
    return lo, hi


def _make_witness(n: int, a: int, strategy: str) -> LemmaWitness:
    fn = fib(n)
    return LemmaWitness(
        n=n,
        a=a,
        alpha_n=Fraction(a, fn),
        beta_n=Fraction((fib(n - 1) * a) % fn, fn),
        strategy_used=strategy,
    )


def find_brute(
    n: int, I: UnitInterval, J: UnitInterval, cfg: SearchConfig = DEFAULT_CONFIG
) -> LemmaWitness | None:
    """Exhaustive scan: the smallest qualifying a, or None if none exists.

    Raises RangeTooLarge when the candidate count exceeds cfg.brute_cap;
    the caller should switch strategy or raise n.
    """
    if n < 2:
        raise ValueError(f"find_brute needs n >= 2, got {n}")
    fn = fib(n)
    a_lo, a_hi = _position_range(n, I)
    if a_lo > a_hi:
        return None
    count = a_hi - a_lo + 1
    if count > cfg.brute_cap:
        raise RangeTooLarge(count, cfg.brute_cap)
    w_lo, w_hi = _residue_window(n, J)
    if w_lo > w_hi:
        return None
    step = fib(n - 1) % fn
    a = a_lo
    r = (step * a_lo) % fn
    for _ in range(count):
        if w_lo <= r <= w_hi and math.gcd(a, fn) == 1:
            return _make_witness(n, a, "brute")
        a += 1
        r += step
        if r >= fn:
            r -= fn
    return None


def find_two_scale(
    n: int, I: UnitInterval, J: UnitInterval, cfg: SearchConfig = DEFAULT_CONFIG
) -> LemmaWitness | None:
    """Two-scale search; None when the greedy stepping cannot land.

    Stage 1 walks a from the bottom of the position range, correcting the
    residue with steps F_k (k = 2, 3, ...) whenever the forward distance
    to the window start admits the step without overshooting past the
    window end. Stage 2 restores coprimality with a = a0 + j*F_{k*}.
    The budget for stage 2 never moves a past the right end of I; drift
    of the fractional part is caught by the final exact verification.
    """
    if n < 4:
        raise ValueError(f"find_two_scale needs n >= 4, got {n}")
    if I.length != J.length or I.length == 0:
        raise ValueError("find_two_scale needs equal positive window lengths")
    fn = fib(n)
    fnm1 = fib(n - 1)
    eta = I.length

    # stage 1: positions restricted to the left half of I, residues to the
    # middle third of J
    half = UnitInterval(I.lo, I.lo + eta / 2)
    a_lo, a_hi = _position_range(n, half)
    # a = 0 is admissible as a stage-1 start; stage 2 must fix it up
    if I.lo == 0:
        a_lo = 0
    if a_lo > a_hi:
        return None
    third = UnitInterval(J.lo + eta / 3, J.lo + 2 * eta / 3)
    w_lo, w_hi = _residue_window(n, third)
    if w_lo > w_hi:
        return None
    width = w_hi - w_lo

    a = a_lo
    r = (fnm1 * a) % fn
    k = 2
    while not w_lo <= r <= w_hi:
        if k > n - 2:
            return None  # granularity exhausted
        f_k = fib(k)
        if a + f_k > a_hi:
            return None  # all remaining steps are unaffordable
        d = (fnm1 * f_k) % fn
        need = (w_lo - r) % fn
        if 0 < d <= need + width:
            a += f_k
            r = (r + d) % fn
        else:
            k += 1

    # stage 2: coprimality adjustment within the right half of I
    a0 = a
    if math.gcd(a0, fn) != 1:
        f_kstar = fib(select_kstar(n))
        budget = (min(math.floor(I.hi * fn), fn - 1) - a0) // f_kstar
        j_cap = min(cfg.effective_j_max(n), budget)
        for j in range(1, j_cap + 1):
            if math.gcd(a0 + j * f_kstar, fn) == 1:
                a = a0 + j * f_kstar
                break
        else:
            raise TwoScaleExhausted(
                f"no coprime adjustment within j <= {j_cap} at n={n}"
            )

    if not 1 <= a < fn:
        return None
    witness = _make_witness(n, a, "two_scale")
    if witness.alpha_n in I and witness.beta_n in J:
        return witness
    return None


def find_witness(
    n: int, I: UnitInterval, J: UnitInterval, cfg: SearchConfig = DEFAULT_CONFIG
) -> LemmaWitness | None:
    """Strategy dispatch. auto scans exhaustively while the candidate
    count fits the cap and falls back to the two-scale search beyond it."""
    if cfg.strategy == "brute":
        return find_brute(n, I, J, cfg)
    if cfg.strategy == "two_scale":
        try:
            return find_two_scale(n, I, J, cfg)
        except TwoScaleExhausted:
            return None
    if candidate_count(n, I) <= cfg.brute_cap:
        return find_brute(n, I, J, cfg)
    try:
        return find_two_scale(n, I, J, cfg)
    except TwoScaleExhausted:
        return None


def verify_witness(w: LemmaWitness, I: UnitInterval, J: UnitInterval) -> ReportBundle:
    """Re-derive both coordinates from (n, a) and check every condition."""
    fn = fib(w.n)
    alpha = Fraction(w.a, fn)
    beta = frac(Fraction(fib(w.n - 1) * w.a, fn))
    items = (
        bound_report(
            "a-range",
            Fraction(min(w.a - 1, fn - 1 - w.a)),
            Fraction(0),
            witness=w.a,
            notes=f"1 <= a < F_{w.n} = {fn}",
        ),
        bound_report(
            "coprime",
            Fraction(1),
            Fraction(math.gcd(w.a, fn)),
            witness=w.a,
            notes=f"gcd(a, F_{w.n})",
        ),
        membership_report("alpha-in-I", alpha, I),
        membership_report("beta-in-J", beta, J),
        equality_report("alpha-consistent", w.alpha_n, alpha),
        equality_report("beta-consistent", w.beta_n, beta),
    )
    return ReportBundle(name=f"witness[n={w.n}, a={w.a}]", items=items)
