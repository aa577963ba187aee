"""Superabundant number enumeration, two independent ways.

A number is superabundant when its abundancy index strictly exceeds that of
every smaller number, i.e. the superabundants are the record-setters of I.

* brute force: sigma-sieve every n up to the limit and sweep a running max
  (the definition, verbatim; capped at 1e7);
* structured: generate only candidates 2^a1 * 3^a2 * ... * p_k^ak with
  a1 >= a2 >= ... >= ak >= 1 over a prefix of the primes, sort, and run the
  same sweep.  Every record-setter has that shape (Alaoglu-Erdos), which the
  test suite re-validates against brute force instead of taking on faith.

All index comparisons are exact integer cross-multiplications; near-ties
between large candidates are precisely the cases where floats would lie.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .arith import Factorization, factorize, sigma_range
from .bounds import enclose
from .primes import prime_iterator

BRUTEFORCE_LIMIT_CAP = 10**7
_CACHE_FLUSH_EVERY = 1000


@dataclass(frozen=True)
class SuperabundantRecord:
    n: int
    factorization: Factorization
    index: Fraction


def _record(n: int, pairs: tuple[tuple[int, int], ...], sig: int) -> SuperabundantRecord:
    return SuperabundantRecord(n, Factorization(pairs), Fraction(sig, n))


def superabundant_bruteforce(
    limit: int, progress: Callable[[int, int], None] | None = None
) -> list[SuperabundantRecord]:
    """All superabundant n <= limit by direct sweep with a running maximum."""
    if limit < 1:
        raise ValueError(f"need limit >= 1, got {limit}")
    if limit > BRUTEFORCE_LIMIT_CAP:
        raise ValueError(
            f"brute force is capped at {BRUTEFORCE_LIMIT_CAP}; "
            "use superabundant_structured beyond that"
        )
    table = sigma_range(max(limit, 1))
    records = []
    best_num, best_den = 0, 1
    for n in range(1, limit + 1):
        sig = table[n]
        if sig * best_den > best_num * n:
            records.append(_record(n, factorize(n).pairs, sig))
            best_num, best_den = sig, n
        if progress is not None and n % 262144 == 0:
            progress(n, limit)
    return records


def _candidates(limit: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All n <= limit whose exponent vector over the prime prefix is
    non-increasing, as (value, factor pairs), unsorted."""
    primes = []
    product = 1
    for p in prime_iterator():
        product *= p
        primes.append(p)
        if product > limit:
            break
    out = [(1, ())]

    def descend(idx: int, value: int, cap: int, pairs: tuple[tuple[int, int], ...]):
        p = primes[idx]
        v = value
        for exp in range(1, cap + 1):
            v *= p
            if v > limit:
                return
            here = pairs + ((p, exp),)
            out.append((v, here))
            if idx + 1 < len(primes) and v * primes[idx + 1] <= limit:
                descend(idx + 1, v, exp, here)

    if limit >= 2:
        descend(0, 1, limit.bit_length(), ())
    return out


def _sigma_from_pairs(pairs: Iterable[tuple[int, int]]) -> int:
    total = 1
    for p, e in pairs:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def superabundant_structured(
    limit: int,
    cache_path: str | os.PathLike | None = None,
    resume: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> list[SuperabundantRecord]:
    """Superabundant n <= limit from the structured candidate set.

    Matches superabundant_bruteforce record-for-record where both run, and
    scales far beyond it.  With `cache_path`, records stream to a cache file
    in batches; with `resume`, a previous cache is loaded and the sweep
    continues after its last record (sound because the sweep state is just
    the last record's index).
    """
    if limit < 1:
        raise ValueError(f"need limit >= 1, got {limit}")

    records: list[SuperabundantRecord] = []
    fresh_from = 0  # index into records of the first not-yet-persisted record
    if resume and cache_path is not None and os.path.exists(cache_path):
        records = read_cache(cache_path)
        if records and records[-1].n > limit:
            kept = [r for r in records if r.n <= limit]
            return kept
        fresh_from = len(records)

    candidates = sorted(_candidates(limit))
    if records:
        last = records[-1]
        best_num, best_den = last.index.numerator, last.index.denominator
        start_after = last.n
    else:
        best_num, best_den = 0, 1
        start_after = 0

    for i, (n, pairs) in enumerate(candidates):
        if n <= start_after:
            continue
        sig = _sigma_from_pairs(pairs)
        if sig * best_den > best_num * n:
            records.append(_record(n, pairs, sig))
            best_num, best_den = sig, n
            if cache_path is not None and len(records) - fresh_from >= _CACHE_FLUSH_EVERY:
                _append_cache(cache_path, records[fresh_from:], fresh=fresh_from == 0)
                fresh_from = len(records)
        if progress is not None and i % 4096 == 0:
            progress(i, len(candidates))

    if cache_path is not None and (fresh_from < len(records) or fresh_from == 0):
        _append_cache(cache_path, records[fresh_from:], fresh=fresh_from == 0 and not resume)
    return records


def count_superabundant(x: int) -> tuple[int, bool]:
    """S(x) and whether the lower bound S(x) >= ln x holds.

    The comparison is certified: ln x is enclosed in an interval and the
    precision escalates in the (never yet observed) undecided case.
    """
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    count = len(superabundant_structured(x))
    digits = 15
    while True:
        ln_x = enclose(lambda ctx: ctx.log(ctx.mpf(x)), digits)
        if count >= ln_x.hi:
            return count, True
        if count < ln_x.lo:
            return count, False
        digits *= 2


# cache file: one record per line, "n<TAB>p^a*...<TAB>num/den"


def record_to_line(rec: SuperabundantRecord) -> str:
    return f"{rec.n}\t{rec.factorization}\t{rec.index.numerator}/{rec.index.denominator}"


def parse_record_line(line: str) -> SuperabundantRecord:
    n_str, fac_str, index_str = line.rstrip("\n").split("\t")
    pairs = []
    if fac_str != "1":
        for term in fac_str.split("*"):
            p, _, e = term.partition("^")
            pairs.append((int(p), int(e) if e else 1))
    num, _, den = index_str.partition("/")
    rec = SuperabundantRecord(int(n_str), Factorization(tuple(pairs)), Fraction(int(num), int(den)))
    if rec.factorization.value() != rec.n:
        raise ValueError(f"corrupt cache line: {line!r}")
    return rec


def read_cache(path: str | os.PathLike) -> list[SuperabundantRecord]:
    records = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                records.append(parse_record_line(line))
    for prev, cur in zip(records, records[1:]):
        if not (prev.n < cur.n and prev.index < cur.index):
            raise ValueError(f"cache at {path} is not a valid record sequence")
    return records


def _append_cache(path, records, fresh: bool) -> None:
    mode = "w" if fresh else "a"
    with open(path, mode, encoding="ascii") as fh:
        for rec in records:
            fh.write(record_to_line(rec) + "\n")
