"""Exact abundancy-index arithmetic and its Riemann Hypothesis frontier.

The abundancy index I(n) = sigma(n)/n is computed exactly everywhere; the
package decides abundancy-outlaw status of rationals, enumerates
superabundant numbers two independent ways, and issues certified verdicts
on Robin's and Lagarias's inequalities via interval enclosures.
"""

from .arith import (
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
)
from .bounds import BoundInterval
from .outlaws import (
    OutlawRule,
    OutlawStatus,
    OutlawVerdict,
    classify_rational,
    family_2p,
    family_even_perfect,
    family_pq,
    find_index_witness,
    weiner_outlaw_check,
)
from .robin import (
    HarmonicValue,
    RobinReport,
    Verdict,
    akbary_scan,
    euler_gamma,
    exceptions_below,
    gronwall_ratio,
    harmonic,
    lagarias_check,
    robin_bound,
    robin_check,
    robin_unconditional_check,
)
from .superabundant import (
    SuperabundantRecord,
    count_superabundant,
    superabundant_bruteforce,
    superabundant_structured,
)

__version__ = "0.1.0"

__all__ = [
    "BoundInterval",
    "Classification",
    "ClassTag",
    "Factorization",
    "HarmonicValue",
    "OutlawRule",
    "OutlawStatus",
    "OutlawVerdict",
    "RobinReport",
    "SuperabundantRecord",
    "Verdict",
    "abundancy_index",
    "akbary_scan",
    "classify",
    "classify_rational",
    "count_superabundant",
    "euler_gamma",
    "even_perfect_numbers",
    "exceptions_below",
    "factorize",
    "family_2p",
    "family_even_perfect",
    "family_pq",
    "find_index_witness",
    "gronwall_ratio",
    "harmonic",
    "index_bounds",
    "index_of_reciprocal_sum",
    "lagarias_check",
    "robin_bound",
    "robin_check",
    "robin_unconditional_check",
    "sigma",
    "sigma_by_divisor_enumeration",
    "superabundant_bruteforce",
    "superabundant_structured",
    "weiner_outlaw_check",
]
