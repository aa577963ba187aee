"""Certified enclosures of transcendental quantities.

Everything downstream (Robin and Lagarias verdicts) compares an exact
rational against a bracketed transcendental value, so the one thing this
module must guarantee is: the true value lies in [lo, hi].  Interval
arithmetic with directed rounding (mpmath's interval context) provides
that; endpoints are pulled out as exact binary rationals so that all final
comparisons happen in `Fraction` arithmetic, never in floats.

Each computation gets a fresh interval context: no global precision state,
safe to run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, localcontext
from fractions import Fraction
from typing import Callable

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

_GUARD_DIGITS = 12
_MAX_WORKING_DPS = 40_000


@dataclass(frozen=True)
class BoundInterval:
    """Enclosure [lo, hi] of a real value, endpoints exact rationals.

    `precision_digits` is the requested decimal precision; construction
    guarantees hi - lo <= 10^(2 - precision_digits).
    """

    lo: Fraction
    hi: Fraction
    precision_digits: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "BoundInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "BoundInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def lo_decimal(self) -> str:
        """lo as a decimal string, rounded down (outward)."""
        return _directed_decimal(self.lo, self.precision_digits, ROUND_FLOOR)

    def hi_decimal(self) -> str:
        """hi as a decimal string, rounded up (outward)."""
        return _directed_decimal(self.hi, self.precision_digits, ROUND_CEILING)

    def midpoint_float(self) -> float:
        return float((self.lo + self.hi) / 2)


def _directed_decimal(value: Fraction, digits: int, rounding) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def interval_to_fractions(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an mpmath interval value."""
    lo_mpf, hi_mpf = x._mpi_
    lo_p, lo_q = to_rational(lo_mpf)
    hi_p, hi_q = to_rational(hi_mpf)
    # mpmath's gmpy backend hands back mpz, which Decimal later refuses
    return Fraction(int(lo_p), int(lo_q)), Fraction(int(hi_p), int(hi_q))


def enclose(
    compute: Callable[[MPIntervalContext], object],
    precision_digits: int,
) -> BoundInterval:
    """Run `compute` in interval arithmetic until the enclosure is narrow
    enough for `precision_digits`, doubling the working precision as needed."""
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    target = Fraction(1, 10 ** (precision_digits - 2)) if precision_digits >= 2 else Fraction(10)
    dps = precision_digits + _GUARD_DIGITS
    while True:
        ctx = MPIntervalContext()
        ctx.dps = dps
        lo, hi = interval_to_fractions(compute(ctx))
        if hi - lo <= target:
            return BoundInterval(lo, hi, precision_digits)
        if dps > _MAX_WORKING_DPS:
            raise ArithmeticError(
                f"enclosure would not converge below width {float(hi - lo)}"
            )
        dps *= 2


def fraction_in(ctx: MPIntervalContext, value: Fraction | int):
    """An interval enclosing an exact rational, in the given context."""
    if isinstance(value, int):
        return ctx.mpf(value)
    return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)
