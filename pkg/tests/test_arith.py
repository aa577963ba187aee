import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from abundancy.arith import (
    Classification,
    ClassTag,
    Factorization,
    abundancy_index,
    classify,
    even_perfect_numbers,
    factorize,
    index_bounds,
    index_of_reciprocal_sum,
    sigma,
    sigma_by_divisor_enumeration,
    sigma_range,
)
from abundancy.primes import primes_up_to


def divisors_of(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# --- factorize -------------------------------------------------------------


def test_factorize_unit_is_empty():
    assert factorize(1).pairs == ()
    assert factorize(1).value() == 1


def test_factorize_examples():
    assert factorize(12).pairs == ((2, 2), (3, 1))
    f = factorize(5040)
    assert f.pairs == ((2, 4), (3, 2), (5, 1), (7, 1))
    assert f.value() == 5040


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_roundtrip_random():
    rng = random.Random(1729)
    for _ in range(400):
        n = rng.randrange(1, 10**9)
        f = factorize(n)
        assert f.value() == n
        primes = [p for p, _ in f.pairs]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)


def test_factorize_large_semiprime():
    p, q = 1_000_000_007, 999_999_937
    f = factorize(p * q)
    assert f.pairs == ((q, 1), (p, 1))


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(((4, 1),))  # not prime
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))  # not increasing
    with pytest.raises(ValueError):
        Factorization(((2, 0),))  # exponent < 1


def test_factorization_str():
    assert str(factorize(12)) == "2^2*3"
    assert str(factorize(1)) == "1"


# --- sigma -----------------------------------------------------------------


def test_sigma_examples():
    assert sigma(factorize(6)) == 12  # perfect: sigma(n) = 2n
    assert sigma(factorize(1)) == 1
    assert sigma(factorize(496)) == 992
    assert sigma(factorize(12)) == 28  # 1+2+3+4+6+12


def test_sigma_by_divisor_enumeration_examples():
    assert sigma_by_divisor_enumeration(6) == 12
    assert sigma_by_divisor_enumeration(1) == 1
    assert sigma_by_divisor_enumeration(28) == 56


def test_sigma_agrees_with_divisor_walk():
    for n in range(1, 2000):
        assert sigma(factorize(n)) == sigma_by_divisor_enumeration(n), n


def test_sigma_agrees_random():
    rng = random.Random(28)
    for _ in range(200):
        n = rng.randrange(1, 10**6)
        assert sigma(factorize(n)) == sigma_by_divisor_enumeration(n), n


def test_sigma_range_matches_pointwise():
    table = sigma_range(3000)
    for n in range(1, 3001):
        assert table[n] == sigma(factorize(n)), n


def test_reciprocal_divisor_identity():
    # n * sum_{d|n} 1/d = sigma(n), exactly
    for n in range(1, 500):
        total = sum(Fraction(1, d) for d in divisors_of(n))
        assert n * total == sigma(factorize(n)), n


# --- abundancy index and classification ------------------------------------


def test_abundancy_index_examples():
    assert abundancy_index(factorize(6)) == Fraction(2)
    assert abundancy_index(factorize(1)) == Fraction(1)
    assert abundancy_index(factorize(7)) == Fraction(8, 7)
    assert abundancy_index(factorize(12)) == Fraction(7, 3)


def test_index_at_least_one():
    for n in range(1, 400):
        q = abundancy_index(factorize(n))
        assert q >= 1
        assert (q == 1) == (n == 1)


def test_classify_examples():
    assert classify(factorize(6)) == Classification(ClassTag.PERFECT, 2)
    assert classify(factorize(12)) == Classification(ClassTag.ABUNDANT, None)
    assert classify(factorize(7)) == Classification(ClassTag.DEFICIENT, None)
    assert classify(factorize(120)) == Classification(ClassTag.ABUNDANT, 3)
    assert sigma_by_divisor_enumeration(120) == 360


def test_classify_one_is_deficient():
    assert classify(factorize(1)).tag is ClassTag.DEFICIENT


def test_all_primes_deficient():
    for p in primes_up_to(500):
        assert classify(factorize(p)).tag is ClassTag.DEFICIENT


def test_every_proper_multiple_of_perfect_is_abundant():
    for perfect in (6, 28, 496):
        for k in range(2, 30):
            assert classify(factorize(k * perfect)).tag is ClassTag.ABUNDANT


def test_multiplicativity_exact():
    rng = random.Random(440)
    done = 0
    while done < 500:
        m = rng.randrange(2, 10**4)
        n = rng.randrange(2, 10**4)
        if gcd(m, n) != 1:
            continue
        lhs = abundancy_index(factorize(m * n))
        rhs = abundancy_index(factorize(m)) * abundancy_index(factorize(n))
        assert lhs == rhs, (m, n)
        done += 1


def test_monotone_under_multiples():
    rng = random.Random(54)
    for _ in range(500):
        n = rng.randrange(1, 10**4)
        k = rng.randrange(2, 51)
        assert abundancy_index(factorize(k * n)) > abundancy_index(factorize(n))
    assert abundancy_index(factorize(1 * 360)) == abundancy_index(factorize(360))


# --- index bounds ----------------------------------------------------------


def test_index_bounds_examples():
    assert index_bounds(factorize(12)) == (Fraction(2), Fraction(3))
    assert index_bounds(factorize(1)) == (Fraction(1), Fraction(1))
    lo, hi = index_bounds(factorize(8))
    assert (lo, hi) == (Fraction(3, 2), Fraction(2))
    assert lo <= abundancy_index(factorize(8)) <= hi


def test_index_bounds_bracket():
    for n in range(1, 2000):
        f = factorize(n)
        lo, hi = index_bounds(f)
        assert lo <= abundancy_index(f) <= hi, n


def test_prime_power_bounds():
    for p in primes_up_to(100):
        for alpha in range(1, 21):
            q = abundancy_index(Factorization(((p, alpha),)))
            assert Fraction(p + 1, p) <= q <= Fraction(p, p - 1), (p, alpha)


# --- unboundedness witnesses ------------------------------------------------


def test_index_of_reciprocal_sum_examples():
    assert index_of_reciprocal_sum(1) == Fraction(1)
    assert index_of_reciprocal_sum(3) == Fraction(2)
    assert Fraction(2) >= Fraction(11, 6)
    v10 = index_of_reciprocal_sum(10)
    assert v10 == abundancy_index(factorize(2520))
    assert v10 >= Fraction(7381, 2520)


def test_reciprocal_sum_dominates_harmonic():
    h = Fraction(0)
    for n_terms in range(1, 101):
        h += Fraction(1, n_terms)
        assert index_of_reciprocal_sum(n_terms) >= h, n_terms


def test_reciprocal_sum_matches_direct_lcm():
    for n_terms in range(1, 30):
        value = lcm(*range(1, n_terms + 1))
        assert index_of_reciprocal_sum(n_terms) == abundancy_index(factorize(value))


def test_primorial_witness():
    primes = primes_up_to(50)  # first 15 primes
    assert len(primes) == 15
    product = Fraction(1)
    recip = Fraction(0)
    for k, p in enumerate(primes, start=1):
        product *= Fraction(p + 1, p)
        recip += Fraction(1, p)
        primorial_pairs = tuple((pp, 1) for pp in primes[:k])
        assert abundancy_index(Factorization(primorial_pairs)) == product
        assert product > recip, k


# --- even perfect numbers ----------------------------------------------------


def test_even_perfect_examples():
    assert even_perfect_numbers(4) == [(2, 6), (3, 28), (5, 496), (7, 8128)]
    assert even_perfect_numbers(1) == [(2, 6)]


def test_even_perfect_classify_crosscheck():
    for _, n in even_perfect_numbers(7):
        assert classify(factorize(n)).tag is ClassTag.PERFECT


def test_even_perfect_rejects_bad_count():
    with pytest.raises(ValueError):
        even_perfect_numbers(0)
