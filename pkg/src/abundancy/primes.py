"""Primality testing and prime generation.

Everything here is integer-exact.  `is_prime` is deterministic for all
n < 3.317e24 (fixed Miller-Rabin witness set); beyond that it falls back to
a strong Baillie-PSW test, which has no known counterexample.
"""

from __future__ import annotations

from array import array
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with these witnesses is a proven primality test below this
# bound (Sorenson-Webster).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if `a` witnesses the compositeness of odd n > 2."""
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    # find D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4

    # factor n+1 = s * 2^r with s odd
    m = n + 1
    r = (m & -m).bit_length() - 1
    s = m >> r

    # compute U_s, V_s by binary chain
    u, v, qk = 1, p, q
    for bit in bin(s)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(r - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test, exact for n < 3.317e24, strong BPSW beyond."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < _MR_DETERMINISTIC_BOUND:
        return not any(_miller_rabin_witness(n, a) for a in _SMALL_PRIMES)
    if _miller_rabin_witness(n, 2):
        return False
    return _strong_lucas_prp(n)


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i in range(2, limit + 1) if sieve[i])


def prime_iterator() -> Iterator[int]:
    """Yield 2, 3, 5, 7, ... indefinitely."""
    yield from (2, 3)
    n = 5
    while True:
        if is_prime(n):
            yield n
        n += 2
        if is_prime(n):
            yield n
        n += 4


def nth_primes(k: int) -> tuple[int, ...]:
    """The first k primes."""
    out = []
    it = prime_iterator()
    for _ in range(k):
        out.append(next(it))
    return tuple(out)


def lucas_lehmer(p: int) -> bool:
    """True iff 2^p - 1 is prime, for prime exponent p.

    The Lucas-Lehmer recurrence s -> s^2 - 2 (mod 2^p - 1) starting from 4
    reaches 0 after p-2 steps exactly when 2^p - 1 is prime.  p = 2 is the
    one exponent the recurrence does not cover; 2^2 - 1 = 3 is prime.
    """
    if not is_prime(p):
        raise ValueError(f"exponent {p} is not prime")
    if p == 2:
        return True
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = s * s - 2
        # fast reduction mod 2^p - 1: fold the high bits down
        s = (s & m) + (s >> p)
        if s >= m:
            s -= m
    return s == 0


def mersenne_prime_exponents(count: int) -> list[int]:
    """The first `count` prime exponents p with 2^p - 1 prime."""
    if count < 1:
        raise ValueError("count must be >= 1")
    found = []
    for p in prime_iterator():
        if lucas_lehmer(p):
            found.append(p)
            if len(found) == count:
                return found
    raise AssertionError("unreachable")


def sigma_table(limit: int) -> array:
    """sigma(n) for all n <= limit as an int64 array (index 0 unused).

    Linear sieve: every composite is produced once from its smallest prime
    factor, and sigma is accumulated multiplicatively from
    sigma(p^e) = 1 + p + ... + p^e.  Values fit int64 for limit <= 1e7.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    sig = array("q", bytes(8 * (limit + 1)))
    geo = array("q", bytes(8 * (limit + 1)))  # sigma of the spf-power part
    sig[1] = geo[1] = 1
    primes = []
    append = primes.append
    for i in range(2, limit + 1):
        if sig[i] == 0:
            append(i)
            sig[i] = geo[i] = i + 1
        si, gi = sig[i], geo[i]
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            if i % p == 0:
                g = gi * p + 1
                geo[ip] = g
                sig[ip] = si // gi * g
                break
            geo[ip] = p + 1
            sig[ip] = si * (p + 1)
    return sig
