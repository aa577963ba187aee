"""Certified checks of Robin's and Lagarias's inequalities.

The quantities on the transcendental side (e^gamma * ln ln n, and
e^{H_n} * ln H_n + H_n) are enclosed in intervals; the arithmetic side
(I(n), sigma(n), H_n for moderate n) is exact.  A verdict is only issued
when the exact value clears the whole enclosure, so Holds/Violates are
certificates; Undecided means the enclosure still straddles the value at
the precision cap, which for a rational-vs-transcendental comparison is a
reporting state, not a mathematical possibility.

Range scans use a monotonicity filter: both bounds are increasing in n (the
augmented Robin bound from n >= 7), so inside a block [a, b) any n whose
exact left side sits below a certified lower bound at a is a certified
Holds without further work.  Only the survivors get the full per-n check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .arith import abundancy_index, factorize, sigma, sigma_range
from .bounds import BoundInterval, enclose, fraction_in, interval_to_fractions
from .superabundant import superabundant_structured

DEFAULT_PRECISION = 50
PRECISION_CAP = 400
EXACT_HARMONIC_LIMIT = 10**4
EXCEPTION_SCAN_CAP = 10**6

_FILTER_DIGITS = 20
_FILTER_SCALE = 10**12
_ROBIN_CONSTANT = Fraction(6483, 10000)  # additive term coefficient, exact


class Verdict(Enum):
    HOLDS = "Holds"
    VIOLATES = "Violates"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class RobinReport:
    n: int
    index: Fraction
    bound: BoundInterval
    verdict: Verdict


@dataclass(frozen=True)
class HarmonicValue:
    n: int
    exact: Fraction | None
    enclosure: BoundInterval


def euler_gamma(precision_digits: int = DEFAULT_PRECISION) -> BoundInterval:
    """Certified enclosure of the Euler-Mascheroni constant."""
    if not 10 <= precision_digits <= 1000:
        raise ValueError(f"precision_digits must be in [10, 1000], got {precision_digits}")
    return enclose(lambda ctx: +ctx.euler, precision_digits)


def _require_loglog_domain(n: int) -> None:
    if n <= 2:
        raise ValueError(f"need n >= 3 (ln ln n undefined or <= 0 for n = {n})")


def _sharp_bound_iv(ctx: MPIntervalContext, n: int):
    return ctx.exp(ctx.euler) * ctx.log(ctx.log(ctx.mpf(n)))


def _augmented_bound_iv(ctx: MPIntervalContext, n: int):
    loglog = ctx.log(ctx.log(ctx.mpf(n)))
    return ctx.exp(ctx.euler) * loglog + fraction_in(ctx, _ROBIN_CONSTANT) / loglog


def robin_bound(n: int, precision_digits: int = DEFAULT_PRECISION) -> BoundInterval:
    """Certified enclosure of e^gamma * ln ln n."""
    _require_loglog_domain(n)
    return enclose(lambda ctx: _sharp_bound_iv(ctx, n), precision_digits)


def _verdict_against(
    exact,
    bound_fn: Callable[[int], BoundInterval],
    precision_digits: int,
    strict: bool,
) -> tuple[Verdict, BoundInterval]:
    """Compare an exact value against an escalating enclosure.

    strict=True checks exact < bound (Robin); strict=False checks
    exact <= bound (Lagarias).  Precision doubles while undecided, up to
    the cap.
    """
    digits = precision_digits
    while True:
        bound = bound_fn(digits)
        below = exact < bound.lo if strict else exact <= bound.lo
        if below:
            return Verdict.HOLDS, bound
        if exact > bound.hi:
            return Verdict.VIOLATES, bound
        if digits >= PRECISION_CAP:
            return Verdict.UNDECIDED, bound
        digits = min(2 * digits, PRECISION_CAP)


def robin_check(n: int, precision_digits: int = DEFAULT_PRECISION) -> RobinReport:
    """Certified verdict on I(n) < e^gamma * ln ln n."""
    _require_loglog_domain(n)
    index = abundancy_index(factorize(n))
    return _robin_report(n, index, precision_digits, unconditional=False)


def robin_unconditional_check(
    n: int, precision_digits: int = DEFAULT_PRECISION
) -> RobinReport:
    """Certified verdict on I(n) < e^gamma * ln ln n + 0.6483 / ln ln n,
    which holds for every n >= 3."""
    _require_loglog_domain(n)
    index = abundancy_index(factorize(n))
    return _robin_report(n, index, precision_digits, unconditional=True)


def _robin_report(
    n: int, index: Fraction, precision_digits: int, unconditional: bool
) -> RobinReport:
    iv_fn = _augmented_bound_iv if unconditional else _sharp_bound_iv
    verdict, bound = _verdict_against(
        index,
        lambda digits: enclose(lambda ctx: iv_fn(ctx, n), digits),
        precision_digits,
        strict=True,
    )
    return RobinReport(n, index, bound, verdict)


@lru_cache(maxsize=64)
def _harmonic_exact(n: int) -> Fraction:
    """H_n as an exact fraction, by balanced divide and conquer."""

    def rec(a: int, b: int) -> Fraction:
        if a == b:
            return Fraction(1, a)
        mid = (a + b) // 2
        return rec(a, mid) + rec(mid + 1, b)

    return rec(1, n)


def _harmonic_iv(ctx: MPIntervalContext, n: int):
    """Enclosure of H_n in the given context.

    Exact summation up to EXACT_HARMONIC_LIMIT; beyond that the
    Euler-Maclaurin expansion with exact Bernoulli coefficients, truncated
    where terms drop below the context's precision, with the remainder
    (bounded by the first omitted term) folded into the interval.
    """
    if n <= EXACT_HARMONIC_LIMIT:
        return fraction_in(ctx, _harmonic_exact(n))
    total = ctx.log(ctx.mpf(n)) + ctx.euler + fraction_in(ctx, Fraction(1, 2 * n))
    tail_target = Fraction(1, 10 ** (ctx.dps + 2))
    k = 1
    npow = n * n
    prev_mag = None
    while True:
        num, den = mpmath.bernfrac(2 * k)
        term = Fraction(int(num), int(den) * 2 * k * npow)
        mag = abs(term)
        if mag < tail_target:
            remainder = mag
            break
        if prev_mag is not None and mag >= prev_mag:
            raise ArithmeticError(
                f"harmonic expansion diverges before reaching precision for n={n}"
            )
        prev_mag = mag
        total -= fraction_in(ctx, term)
        k += 1
        npow *= n * n
    return total + ctx.mpf([-1, 1]) * fraction_in(ctx, remainder)


def harmonic(n: int, precision_digits: int = DEFAULT_PRECISION) -> HarmonicValue:
    """H_n: exact up to 1e4, a certified enclosure always."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    exact = _harmonic_exact(n) if n <= EXACT_HARMONIC_LIMIT else None
    enclosure = enclose(lambda ctx: _harmonic_iv(ctx, n), precision_digits)
    return HarmonicValue(n, exact, enclosure)


def _lagarias_bound_iv(ctx: MPIntervalContext, n: int):
    h = _harmonic_iv(ctx, n)
    return ctx.exp(h) * ctx.log(h) + h


def lagarias_report(
    n: int, precision_digits: int = DEFAULT_PRECISION
) -> tuple[Verdict, BoundInterval]:
    """Certified verdict on sigma(n) <= e^{H_n} * ln(H_n) + H_n, with the
    bound enclosure that settled it.

    n = 1 is the equality case (both sides exactly 1) and is decided
    exactly; interval separation can never certify an equality.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        one = Fraction(1)
        return Verdict.HOLDS, BoundInterval(one, one, precision_digits)
    sig = sigma(factorize(n))
    return _verdict_against(
        sig,
        lambda digits: enclose(lambda ctx: _lagarias_bound_iv(ctx, n), digits),
        precision_digits,
        strict=False,
    )


def lagarias_check(n: int, precision_digits: int = DEFAULT_PRECISION) -> Verdict:
    """Certified verdict on sigma(n) <= e^{H_n} * ln(H_n) + H_n."""
    return lagarias_report(n, precision_digits)[0]


def gronwall_ratio(n: int, precision_digits: int = DEFAULT_PRECISION) -> BoundInterval:
    """Certified enclosure of I(n) / (e^gamma * ln ln n)."""
    _require_loglog_domain(n)
    index = abundancy_index(factorize(n))
    return enclose(
        lambda ctx: fraction_in(ctx, index) / _sharp_bound_iv(ctx, n),
        precision_digits,
    )


def _blocks(start: int, stop: int):
    a = start
    while a < stop:
        b = min(stop, a + max(256, a >> 4))
        yield a, b
        a = b


def scan_robin_violations(
    start: int,
    stop: int,
    precision_digits: int = DEFAULT_PRECISION,
    unconditional: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> list[tuple[int, Verdict]]:
    """Every n in [start, stop) whose Robin verdict is not Holds.

    The monotone block filter certifies the overwhelming majority as Holds
    from a single bound evaluation per block; survivors get the full
    escalating check.  The augmented bound is only monotone from n = 7, so
    smaller n are always checked individually.
    """
    start = max(start, 3)
    if stop <= start:
        return []
    table = sigma_range(stop - 1)
    check = robin_unconditional_check if unconditional else robin_check
    iv_fn = _augmented_bound_iv if unconditional else _sharp_bound_iv
    bad: list[tuple[int, Verdict]] = []

    def full_check(n: int) -> None:
        report = check(n, precision_digits)
        if report.verdict is not Verdict.HOLDS:
            bad.append((n, report.verdict))

    filter_from = max(start, 7 if unconditional else 3)
    for n in range(start, min(filter_from, stop)):
        full_check(n)
    for a, b in _blocks(filter_from, stop):
        threshold = enclose(lambda ctx: iv_fn(ctx, a), _FILTER_DIGITS).lo
        tq = threshold.numerator * _FILTER_SCALE // threshold.denominator
        for n in range(a, b):
            # sigma(n)/n < tq/SCALE <= bound(a) <= bound(n): certified Holds
            if table[n] * _FILTER_SCALE < tq * n:
                continue
            full_check(n)
        if progress is not None:
            progress(b - start, stop - start)
    return bad


def scan_lagarias_violations(
    start: int,
    stop: int,
    precision_digits: int = DEFAULT_PRECISION,
    progress: Callable[[int, int], None] | None = None,
) -> list[tuple[int, Verdict]]:
    """Every n in [start, stop) whose Lagarias verdict is not Holds.

    Same block-filter idea as the Robin scan; e^H * ln H + H is increasing
    in H >= 1, hence in n.  H_n is carried through the sweep as a running
    interval in one shared context.
    """
    start = max(start, 1)
    if stop <= start:
        return []
    table = sigma_range(stop - 1)
    bad: list[tuple[int, Verdict]] = []

    ctx = MPIntervalContext()
    ctx.dps = max(40, _FILTER_DIGITS + 10)
    h = ctx.mpf(0)
    one = ctx.mpf(1)
    h_at = 0  # h currently encloses H_{h_at}

    def advance_to(n: int):
        nonlocal h, h_at
        while h_at < n:
            h_at += 1
            h += one / ctx.mpf(h_at)
        return h

    # n = 1 is the exact equality case: Holds by definition, never scanned
    for a, b in _blocks(max(start, 2), stop):
        ha = advance_to(a)
        threshold = interval_to_fractions(ctx.exp(ha) * ctx.log(ha) + ha)[0]
        tq = threshold.numerator * _FILTER_SCALE // threshold.denominator
        for n in range(a, b):
            # sigma(n) < bound(block start) <= bound(n): certified Holds
            if table[n] * _FILTER_SCALE < tq:
                continue
            hn = advance_to(n)
            lo, hi = interval_to_fractions(ctx.exp(hn) * ctx.log(hn) + hn)
            sig = table[n]
            if sig <= lo:
                continue
            if sig > hi:
                bad.append((n, Verdict.VIOLATES))
            else:
                verdict = lagarias_check(n, precision_digits)
                if verdict is not Verdict.HOLDS:
                    bad.append((n, verdict))
        if progress is not None:
            progress(b - start, stop - start)
    return bad


def exceptions_below(
    threshold: int,
    precision_digits: int = DEFAULT_PRECISION,
    progress: Callable[[int, int], None] | None = None,
) -> list[int]:
    """All n in [3, threshold) where Robin's sharp inequality is violated."""
    if threshold < 1:
        raise ValueError(f"need threshold >= 1, got {threshold}")
    if threshold > EXCEPTION_SCAN_CAP:
        raise ValueError(f"exception scan is capped at {EXCEPTION_SCAN_CAP}")
    flagged = scan_robin_violations(3, threshold, precision_digits, progress=progress)
    return [n for n, verdict in flagged if verdict is Verdict.VIOLATES]


def akbary_scan(
    limit: int,
    precision_digits: int = DEFAULT_PRECISION,
    progress: Callable[[int, int], None] | None = None,
) -> list[RobinReport]:
    """Robin reports for every superabundant n in (5040, limit].

    If Robin's inequality fails anywhere, it fails first at a superabundant
    number, so this scan is the economical counterexample hunt; a Violates
    entry here is a Riemann Hypothesis counterexample candidate.
    """
    if limit < 5041:
        raise ValueError(f"need limit >= 5041, got {limit}")
    records = [r for r in superabundant_structured(limit) if r.n > 5040]
    reports = []
    for i, rec in enumerate(records):
        reports.append(_robin_report(rec.n, rec.index, precision_digits, False))
        if progress is not None:
            progress(i + 1, len(records))
    return reports
