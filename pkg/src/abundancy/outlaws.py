"""Deciding whether a rational q > 1 is an abundancy index or an outlaw.

A rational q > 1 in lowest terms r/s is:

  * an *index* if I(n) = q for some n (we exhibit the witness),
  * an *outlaw* if no such n exists (we cite the certifying rule),
  * *unknown* when no rule applies and no witness exists below a search bound.

Witness searches only visit multiples of s: from I(n) = r/s we get
s * sigma(n) = r * n, and gcd(r, s) = 1 forces s | n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd

from .arith import abundancy_index, classify, ClassTag, factorize, sigma, sigma_range
from .primes import is_prime

DEFAULT_SEARCH_BOUND = 10**6
_SIEVE_CAP = 4_000_000


class OutlawStatus(Enum):
    INDEX = "Index"
    OUTLAW = "Outlaw"
    UNKNOWN = "Unknown"


class OutlawRule(Enum):
    WEINER_RANGE = "WeinerRange"
    FAMILY_2P = "Family2p"
    FAMILY_PQ = "FamilyPQ"
    FAMILY_EVEN_PERFECT = "FamilyEvenPerfect"


@dataclass(frozen=True)
class OutlawVerdict:
    """Three-way verdict; exactly one of witness/rule/search_bound is set.

    For Outlaw verdicts, `evidence` records the certifying rule's checked
    preconditions so the certificate can be re-verified independently.
    """

    status: OutlawStatus
    witness: int | None = None
    rule: OutlawRule | None = None
    search_bound: int | None = None
    evidence: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        populated = [
            self.witness is not None,
            self.rule is not None,
            self.search_bound is not None,
        ]
        if sum(populated) != 1:
            raise ValueError("exactly one of witness/rule/search_bound must be set")
        expected = {
            OutlawStatus.INDEX: self.witness,
            OutlawStatus.OUTLAW: self.rule,
            OutlawStatus.UNKNOWN: self.search_bound,
        }[self.status]
        if expected is None:
            raise ValueError(f"field does not match status {self.status}")


def _require_prime(p: int, name: str = "p") -> None:
    if not is_prime(p):
        raise ValueError(f"{name} = {p} is not prime")


def weiner_outlaw_check(q: Fraction) -> bool:
    """True iff q = k/m in lowest terms has m < k < sigma(m).

    Any such q is an outlaw: an index r/s must satisfy r >= sigma(s).
    """
    if q <= 1:
        raise ValueError(f"need q > 1, got {q}")
    k, m = q.numerator, q.denominator
    return m < k < sigma(factorize(m))


def family_2p(p: int) -> tuple[Fraction, OutlawVerdict]:
    """(sigma(2p) + 1) / 2p: outlaw for prime p > 3, index for p = 2, 3."""
    _require_prime(p)
    value = Fraction(sigma(factorize(2 * p)) + 1, 2 * p)
    if p == 2:
        verdict = OutlawVerdict(OutlawStatus.INDEX, witness=6)
    elif p == 3:
        verdict = OutlawVerdict(OutlawStatus.INDEX, witness=18)
    else:
        verdict = OutlawVerdict(
            OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_2P, evidence={"p": p}
        )
    if verdict.witness is not None:
        assert abundancy_index(factorize(verdict.witness)) == value
    return value, verdict


def family_pq(p: int, q: int) -> tuple[Fraction, OutlawVerdict] | None:
    """(sigma(pq) + 1) / pq for primes with q > 3, q > p and the two
    coprimality conditions; None when the conditions fail (in particular
    for twin primes q = p + 2, where the value collapses to (p+2)/p).
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if not (q > 3 and q > p and gcd(p, q + 2) == 1 and gcd(q, p + 2) == 1):
        return None
    value = Fraction(sigma(factorize(p * q)) + 1, p * q)
    verdict = OutlawVerdict(
        OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_PQ, evidence={"p": p, "q": q}
    )
    return value, verdict


def family_even_perfect(n: int) -> tuple[Fraction, OutlawVerdict]:
    """(sigma(2N) + 1) / 2N for an even perfect N."""
    if n % 2 != 0 or classify(factorize(n)).tag is not ClassTag.PERFECT:
        raise ValueError(f"{n} is not an even perfect number")
    value = Fraction(sigma(factorize(2 * n)) + 1, 2 * n)
    verdict = OutlawVerdict(
        OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_EVEN_PERFECT, evidence={"N": n}
    )
    return value, verdict


def find_index_witness(q: Fraction, bound: int = DEFAULT_SEARCH_BOUND) -> int | None:
    """Smallest n <= bound with I(n) = q, or None.

    Only multiples of the denominator are visited (see module docstring);
    a shared sigma table covers the sieve range, and anything beyond is
    factorized per candidate.
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    r, s = q.numerator, q.denominator
    table_limit = min(max(bound, 10**6), _SIEVE_CAP)
    table = sigma_range(table_limit)
    n = s
    while n <= bound:
        if n <= table_limit:
            sig = table[n]
        else:
            sig = sigma(factorize(n))
        if s * sig == r * n:
            return n
        n += s
    return None


def _matches_semiprime_family(s: int) -> OutlawVerdict | None:
    """Shape s = p*q (distinct primes, q > 3, q > p, coprimality conditions).
    Tagged Family2p when p = 2, FamilyPQ otherwise."""
    f = factorize(s)
    if len(f) != 2 or any(e != 1 for _, e in f):
        return None
    (p, _), (q, _) = f.pairs
    if q > 3 and gcd(p, q + 2) == 1 and gcd(q, p + 2) == 1:
        if p == 2:
            # the 2p family is the p = 2 slice of the pq family
            return OutlawVerdict(
                OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_2P, evidence={"p": q}
            )
        return OutlawVerdict(
            OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_PQ, evidence={"p": p, "q": q}
        )
    return None


def _matches_even_perfect_family(s: int) -> OutlawVerdict | None:
    if s % 2 != 0:
        return None
    half = s // 2
    if half % 2 != 0 or classify(factorize(half)).tag is not ClassTag.PERFECT:
        return None
    return OutlawVerdict(
        OutlawStatus.OUTLAW, rule=OutlawRule.FAMILY_EVEN_PERFECT, evidence={"N": half}
    )


def classify_rational(
    q: Fraction, bound: int = DEFAULT_SEARCH_BOUND
) -> OutlawVerdict:
    """Certify q > 1 as Index, Outlaw, or Unknown at the given search bound.

    Rule order: cheap certificates first (denominator-sigma comparison and
    the outlaw families, each one sigma/gcd away), then the bounded witness
    search.  Rationals of the form (p+2)/p with p, p+2 twin primes match no
    rule and come back Unknown: their status is a genuinely open problem.
    """
    if q <= 1:
        raise ValueError(f"need q > 1, got {q}")
    r, s = q.numerator, q.denominator
    sigma_s = sigma(factorize(s))

    # r >= sigma(s) is necessary for an index; r = sigma(s) means q = I(s).
    if r == sigma_s:
        return OutlawVerdict(OutlawStatus.INDEX, witness=s)
    if r < sigma_s:
        return OutlawVerdict(
            OutlawStatus.OUTLAW,
            rule=OutlawRule.WEINER_RANGE,
            evidence={"m": s, "k": r, "sigma_m": sigma_s},
        )

    if r == sigma_s + 1:
        verdict = _matches_semiprime_family(s) or _matches_even_perfect_family(s)
        if verdict is not None:
            return verdict

    witness = find_index_witness(q, bound)
    if witness is not None:
        return OutlawVerdict(OutlawStatus.INDEX, witness=witness)
    return OutlawVerdict(OutlawStatus.UNKNOWN, search_bound=bound)
