"""Exact divisor-sum arithmetic.

The central objects are a prime-power factorization and the abundancy index
sigma(n)/n held as an exact `fractions.Fraction`.  Nothing in this module
touches floating point: Perfect vs Abundant is decided on a knife-edge and
every comparison is integer-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .primes import (
    is_prime,
    lucas_lehmer,
    mersenne_prime_exponents,
    primes_up_to,
    sigma_table,
)

_TRIAL_DIVISION_TIERS = (1_000, 1_000_000)


@dataclass(frozen=True)
class Factorization:
    """n = prod p_i^e_i with strictly increasing certified primes.

    The empty tuple represents n = 1.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.pairs:
            if p <= prev:
                raise ValueError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise ValueError(f"exponent {e} < 1 for prime {p}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


class ClassTag(Enum):
    PERFECT = "Perfect"
    ABUNDANT = "Abundant"
    DEFICIENT = "Deficient"


@dataclass(frozen=True)
class Classification:
    """Knife-edge class of n, plus the multiperfect order when I(n) is integral."""

    tag: ClassTag
    multiperfect_order: int | None = None


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant).

    Deterministic parameter sweep so repeated runs factor identically.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def factorize(n: int) -> Factorization:
    """Prime-power factorization of n >= 1.

    Trial division by sieved primes (tiered, up to 1e6), then Brent-Pollard
    splitting; every reported prime passes `is_prime`.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    pairs = []
    m = n
    for tier in _TRIAL_DIVISION_TIERS:
        for p in primes_up_to(tier):
            if p * p > m:
                break
            if m % p == 0:
                e = 1
                m //= p
                while m % p == 0:
                    e += 1
                    m //= p
                pairs.append((p, e))
        if m == 1 or m < tier * tier or is_prime(m):
            break
    # m is now 1, prime, or composite with no factor <= 1e6
    stack = [m] if m > 1 else []
    found: dict[int, int] = {}
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    for p in sorted(found):
        e = found[p]
        pairs.append((p, e))
    pairs.sort()
    return Factorization(tuple(pairs))


def sigma(f: Factorization) -> int:
    """Sum of all positive divisors, via sigma(p^e) = (p^(e+1)-1)/(p-1)."""
    total = 1
    for p, e in f:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def sigma_by_divisor_enumeration(n: int) -> int:
    """Divisor-sum by explicit divisor walk; the independent cross-check.

    O(sqrt(n)) per call, intended for n up to ~1e7.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
    return total


def abundancy_index(f: Factorization) -> Fraction:
    """I(n) = sigma(n)/n as an exact reduced fraction."""
    return Fraction(sigma(f), f.value())


def classify(f: Factorization) -> Classification:
    index = abundancy_index(f)
    if index == 2:
        tag = ClassTag.PERFECT
    elif index > 2:
        tag = ClassTag.ABUNDANT
    else:
        tag = ClassTag.DEFICIENT
    order = index.numerator if index.denominator == 1 else None
    return Classification(tag, order)


def index_bounds(f: Factorization) -> tuple[Fraction, Fraction]:
    """Bracket I(n) by prod (p+1)/p <= I(n) <= prod p/(p-1) over prime support."""
    lo = hi = Fraction(1)
    for p, _ in f:
        lo *= Fraction(p + 1, p)
        hi *= Fraction(p, p - 1)
    return lo, hi


def index_of_reciprocal_sum(n_terms: int) -> Fraction:
    """I(lcm(1..N)): the index of the classical divergence witness.

    lcm(1..N) = prod p^floor(log_p N), so the index is computed straight from
    that factorization without materializing the (huge) lcm itself.
    """
    if n_terms < 1:
        raise ValueError(f"need N >= 1, got {n_terms}")
    result = Fraction(1)
    for p in primes_up_to(n_terms):
        pe = p
        while pe * p <= n_terms:
            pe *= p
        result *= Fraction((pe * p - 1) // (p - 1), pe)  # sigma(p^e) / p^e
    return result


def even_perfect_numbers(count: int) -> list[tuple[int, int]]:
    """The first `count` even perfect numbers as (p, 2^(p-1) * (2^p - 1)).

    Each Mersenne factor 2^p - 1 is certified prime by the Lucas-Lehmer test.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for p in mersenne_prime_exponents(count):
        assert lucas_lehmer(p)
        out.append((p, (1 << (p - 1)) * ((1 << p) - 1)))
    return out


@lru_cache(maxsize=2)
def sigma_range(limit: int):
    """Cached sigma table for range scans (witness search, sweeps)."""
    return sigma_table(limit)
