from fractions import Fraction

import pytest

from abundancy.arith import abundancy_index, factorize
from abundancy.primes import primes_up_to
from abundancy.superabundant import (
    SuperabundantRecord,
    count_superabundant,
    parse_record_line,
    read_cache,
    record_to_line,
    superabundant_bruteforce,
    superabundant_structured,
)

GOLDEN_200 = [1, 2, 4, 6, 12, 24, 36, 48, 60, 120, 180]


def test_golden_list_to_200():
    assert [r.n for r in superabundant_bruteforce(200)] == GOLDEN_200
    assert [r.n for r in superabundant_structured(200)] == GOLDEN_200


def test_tiny_limits():
    assert [r.n for r in superabundant_bruteforce(1)] == [1]
    assert [r.n for r in superabundant_structured(1)] == [1]
    assert [r.n for r in superabundant_bruteforce(5)] == [1, 2, 4]
    assert [r.n for r in superabundant_structured(5)] == [1, 2, 4]


def test_rejects_bad_limits():
    with pytest.raises(ValueError):
        superabundant_bruteforce(0)
    with pytest.raises(ValueError):
        superabundant_bruteforce(10**7 + 1)
    with pytest.raises(ValueError):
        superabundant_structured(0)


def test_record_fields_consistent():
    for rec in superabundant_structured(10**4):
        assert rec.factorization.value() == rec.n
        assert abundancy_index(rec.factorization) == rec.index


def test_methods_agree_midscale():
    for limit in (10**3, 10**4):
        assert superabundant_structured(limit) == superabundant_bruteforce(limit)


def test_bruteforce_is_the_definition():
    # independent oracle: recompute I over every n with Fractions, no sieve
    limit = 300
    best = Fraction(0)
    expected = []
    for n in range(1, limit + 1):
        q = abundancy_index(factorize(n))
        if q > best:
            expected.append(n)
            best = q
    assert [r.n for r in superabundant_bruteforce(limit)] == expected


def test_index_strictly_increasing():
    records = superabundant_structured(10**6)
    for a, b in zip(records, records[1:]):
        assert a.n < b.n and a.index < b.index


def test_doubling_gap():
    # between any record and 2x that record there is another record
    records = superabundant_structured(10**6)
    for a, b in zip(records, records[1:]):
        assert b.n <= 2 * a.n, a.n


def test_exponents_non_increasing_prefix_of_primes():
    # validates the structured generator's candidate set against brute force
    for rec in superabundant_bruteforce(10**5):
        primes = [p for p, _ in rec.factorization]
        exps = [e for _, e in rec.factorization]
        assert primes == list(primes_up_to(primes[-1])) if primes else True
        assert exps == sorted(exps, reverse=True)


def test_count_superabundant():
    assert count_superabundant(180) == (11, True)
    assert count_superabundant(1) == (1, True)
    count, holds = count_superabundant(10**6)
    assert holds and count == len(superabundant_structured(10**6))


def test_count_rejects_zero():
    with pytest.raises(ValueError):
        count_superabundant(0)


# --- cache file ---------------------------------------------------------------


def test_cache_line_roundtrip():
    records = superabundant_structured(10**4)
    for rec in records:
        assert parse_record_line(record_to_line(rec)) == rec
    one = SuperabundantRecord(1, factorize(1), Fraction(1))
    assert record_to_line(one) == "1\t1\t1/1"
    assert parse_record_line("1\t1\t1/1") == one


def test_cache_write_and_read(tmp_path):
    path = tmp_path / "records.cache"
    records = superabundant_structured(10**5, cache_path=path)
    assert read_cache(path) == records


def test_cache_content_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.cache", tmp_path / "b.cache"
    superabundant_structured(10**5, cache_path=p1)
    superabundant_structured(10**5, cache_path=p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_resume_extends_to_identical_list(tmp_path):
    path = tmp_path / "resume.cache"
    superabundant_structured(10**3, cache_path=path)
    resumed = superabundant_structured(10**5, cache_path=path, resume=True)
    fresh = superabundant_structured(10**5)
    assert resumed == fresh
    assert read_cache(path) == fresh


def test_resume_with_larger_cache_truncates_view(tmp_path):
    path = tmp_path / "big.cache"
    superabundant_structured(10**5, cache_path=path)
    small = superabundant_structured(10**3, cache_path=path, resume=True)
    assert small == superabundant_structured(10**3)


def test_read_cache_rejects_corruption(tmp_path):
    path = tmp_path / "bad.cache"
    path.write_text("6\t2*3\t2/1\n4\t2^2\t7/4\n")  # out of order
    with pytest.raises(ValueError):
        read_cache(path)
    path.write_text("8\t2^2\t7/4\n")  # value mismatch
    with pytest.raises(ValueError):
        read_cache(path)
