import random

import pytest

from abundancy.primes import (
    is_prime,
    lucas_lehmer,
    mersenne_prime_exponents,
    nth_primes,
    prime_iterator,
    primes_up_to,
    sigma_table,
)


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_matches_trial_division_small():
    for n in range(0, 3000):
        assert is_prime(n) == naive_is_prime(n), n


def test_is_prime_random_midsize():
    rng = random.Random(20240817)
    for _ in range(300):
        n = rng.randrange(2, 10**7)
        assert is_prime(n) == naive_is_prime(n), n


def test_is_prime_large_known():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # Cole: 193707721 * 761838257287
    assert is_prime(2**89 - 1)  # beyond deterministic MR range, BPSW path
    assert not is_prime((2**61 - 1) * (2**31 - 1))


def test_primes_up_to_agrees():
    ps = primes_up_to(1000)
    assert ps[:5] == (2, 3, 5, 7, 11)
    assert ps == tuple(n for n in range(2, 1001) if naive_is_prime(n))


def test_prime_iterator_prefix():
    it = prime_iterator()
    got = [next(it) for _ in range(25)]
    assert tuple(got) == primes_up_to(97)
    assert nth_primes(10) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def test_lucas_lehmer_known_exponents():
    mersenne = {2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127}
    for p in primes_up_to(130):
        assert lucas_lehmer(p) == (p in mersenne), p


def test_lucas_lehmer_rejects_composite_exponent():
    with pytest.raises(ValueError):
        lucas_lehmer(9)


def test_mersenne_prime_exponents():
    assert mersenne_prime_exponents(8) == [2, 3, 5, 7, 13, 17, 19, 31]


def test_sigma_table_small_values():
    table = sigma_table(30)
    # sigma by hand: 1, 3, 4, 7, 6, 12, 8, 15, 13, 18, ...
    expected = {1: 1, 2: 3, 6: 12, 10: 18, 12: 28, 16: 31, 28: 56, 30: 72}
    for n, s in expected.items():
        assert table[n] == s, n


def test_sigma_table_rejects_zero():
    with pytest.raises(ValueError):
        sigma_table(0)
