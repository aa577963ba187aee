"""Command-line surface.

One subcommand per paper-facing operation.  Results go to stdout in one of
three formats (text, json, csv); json output is one object per line so scan
output can be consumed as JSONL.  Progress chatter, reduction notices and
errors go to stderr only.  Exit codes: 0 success, 1 domain error, 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from fractions import Fraction
from math import gcd

from .arith import (
    ClassTag,
    abundancy_index,
    classify,
    even_perfect_numbers,
    factorize,
    index_bounds,
    sigma,
)
from .outlaws import (
    DEFAULT_SEARCH_BOUND,
    OutlawStatus,
    OutlawVerdict,
    classify_rational,
    family_2p,
    family_even_perfect,
    family_pq,
    find_index_witness,
)
from .robin import (
    DEFAULT_PRECISION,
    RobinReport,
    Verdict,
    akbary_scan,
    exceptions_below,
    gronwall_ratio,
    harmonic,
    lagarias_report,
    robin_check,
    robin_unconditional_check,
)
from .superabundant import (
    SuperabundantRecord,
    count_superabundant,
    superabundant_bruteforce,
    superabundant_structured,
)

DEFAULT_CACHE_PATH = "./superabundant.cache"


class _Progress:
    """Time-gated progress lines on stderr; stdout stays machine-readable."""

    def __init__(self, label: str, every: float = 5.0):
        self.label = label
        self.every = every
        self._next = time.monotonic() + every

    def __call__(self, done: int, total: int) -> None:
        now = time.monotonic()
        if now >= self._next:
            print(f"{self.label}: {done}/{total}", file=sys.stderr, flush=True)
            self._next = now + self.every


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _rational(text: str) -> Fraction:
    """Parse 'r/s' or an integer; reduce with a notice if not in lowest terms."""
    num_str, slash, den_str = text.partition("/")
    try:
        num = int(num_str)
        den = int(den_str) if slash else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")
    if den == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    if den < 0 or num < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    g = gcd(num, den)
    if g > 1:
        print(
            f"notice: {text} reduced to {num // g}/{den // g}",
            file=sys.stderr,
        )
    return Fraction(num, den)


def _emit(rows: list[dict], text_lines: list[str], fmt: str) -> None:
    if fmt == "text":
        for line in text_lines:
            print(line)
    elif fmt == "json":
        for row in rows:
            print(json.dumps(row))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if rows:
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow("" if v is None else v for v in row.values())


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _robin_rows(reports: list[RobinReport]) -> list[dict]:
    rows = []
    for rep in reports:
        rows.append(
            {
                "n": rep.n,
                "sigma": rep.index.numerator * (rep.n // rep.index.denominator),
                "index_num": rep.index.numerator,
                "index_den": rep.index.denominator,
                "bound_lo": rep.bound.lo_decimal(),
                "bound_hi": rep.bound.hi_decimal(),
                "verdict": rep.verdict.value,
                "precision": rep.bound.precision_digits,
            }
        )
    return rows


def _verdict_text(rep: RobinReport) -> str:
    approx = f"{float(rep.index):.4f}"
    return (
        f"n = {rep.n}: I(n) = {_frac_str(rep.index)} ≈ {approx} vs "
        f"bound in [{rep.bound.lo_decimal()[:12]}…, {rep.bound.hi_decimal()[:12]}…]"
        f" -> {rep.verdict.value}"
    )


def _outlaw_text(q: Fraction, verdict: OutlawVerdict) -> str:
    if verdict.status is OutlawStatus.INDEX:
        w = verdict.witness
        return f"{_frac_str(q)}: Index (witness {w}: I({w}) = {_frac_str(q)})"
    if verdict.status is OutlawStatus.OUTLAW:
        ev = verdict.evidence
        rule = verdict.rule.value
        if rule == "WeinerRange":
            detail = f"Weiner: {ev['m']} < {ev['k']} < σ({ev['m']})={ev['sigma_m']}"
        elif rule in ("Family2p", "FamilyPQ"):
            detail = f"{rule}: p={ev['p']}" + (f", q={ev['q']}" if "q" in ev else "")
        else:
            detail = f"{rule}: N={ev['N']}"
        return f"{_frac_str(q)}: Outlaw ({detail})"
    return f"{_frac_str(q)}: Unknown (no witness found up to {verdict.search_bound})"


def _outlaw_row(q: Fraction, verdict: OutlawVerdict) -> dict:
    return {
        "q_num": q.numerator,
        "q_den": q.denominator,
        "status": verdict.status.value,
        "witness": verdict.witness,
        "rule": verdict.rule.value if verdict.rule else None,
        "search_bound": verdict.search_bound,
        "evidence": json.dumps(verdict.evidence, sort_keys=True) if verdict.evidence else None,
    }


def _record_rows(records: list[SuperabundantRecord]) -> list[dict]:
    return [
        {
            "n": rec.n,
            "factorization": str(rec.factorization),
            "index_num": rec.index.numerator,
            "index_den": rec.index.denominator,
        }
        for rec in records
    ]


# --- subcommand handlers -------------------------------------------------


def _cmd_index(args) -> None:
    f = factorize(args.n)
    q = abundancy_index(f)
    tag = classify(f).tag.value
    _emit(
        [{"n": args.n, "index_num": q.numerator, "index_den": q.denominator,
          "approx": f"{float(q):.4f}", "class": tag}],
        [f"{_frac_str(q)} ≈ {float(q):.4f}, {tag}"],
        args.format,
    )


def _cmd_sigma(args) -> None:
    value = sigma(factorize(args.n))
    _emit([{"n": args.n, "sigma": value}], [f"σ({args.n}) = {value}"], args.format)


def _cmd_classify(args) -> None:
    c = classify(factorize(args.n))
    order = c.multiperfect_order
    text = f"{args.n}: {c.tag.value}"
    if order is not None:
        text += f" (multiperfect order {order})"
    _emit(
        [{"n": args.n, "class": c.tag.value, "multiperfect_order": order}],
        [text],
        args.format,
    )


def _cmd_bounds(args) -> None:
    f = factorize(args.n)
    lo, hi = index_bounds(f)
    q = abundancy_index(f)
    _emit(
        [{
            "n": args.n,
            "lower_num": lo.numerator, "lower_den": lo.denominator,
            "index_num": q.numerator, "index_den": q.denominator,
            "upper_num": hi.numerator, "upper_den": hi.denominator,
        }],
        [f"{_frac_str(lo)} ≤ I({args.n}) = {_frac_str(q)} ≤ {_frac_str(hi)}"],
        args.format,
    )


def _cmd_outlaw(args) -> None:
    verdict = classify_rational(args.q, args.search_bound)
    _emit([_outlaw_row(args.q, verdict)], [_outlaw_text(args.q, verdict)], args.format)


def _cmd_outlaw_family(args) -> None:
    if args.family == "2p":
        if args.p is None:
            raise ValueError("--p is required for family 2p")
        value, verdict = family_2p(args.p)
        params = {"p": args.p}
    elif args.family == "pq":
        if args.p is None or args.q is None:
            raise ValueError("--p and --q are required for family pq")
        result = family_pq(args.p, args.q)
        if result is None:
            _emit(
                [{"family": "pq", "p": args.p, "q": args.q, "value_num": None,
                  "value_den": None, "status": None, "note": "conditions not met"}],
                [f"pq family conditions not met for p={args.p}, q={args.q} "
                 "(twin primes and small cases are excluded)"],
                args.format,
            )
            return
        value, verdict = result
        params = {"p": args.p, "q": args.q}
    else:
        if args.n is None:
            raise ValueError("--n is required for family even-perfect")
        value, verdict = family_even_perfect(args.n)
        params = {"N": args.n}
    row = {"family": args.family, **params,
           "value_num": value.numerator, "value_den": value.denominator,
           "status": verdict.status.value}
    if verdict.witness is not None:
        row["witness"] = verdict.witness
    _emit([row], [_outlaw_text(value, verdict)], args.format)


def _cmd_witness(args) -> None:
    w = find_index_witness(args.q, args.search_bound)
    text = (
        f"I(n) = {_frac_str(args.q)} first at n = {w}"
        if w is not None
        else f"no n ≤ {args.search_bound} with I(n) = {_frac_str(args.q)}"
    )
    _emit(
        [{"q_num": args.q.numerator, "q_den": args.q.denominator,
          "search_bound": args.search_bound, "witness": w}],
        [text],
        args.format,
    )


def _cmd_superabundant(args) -> None:
    progress = _Progress("superabundant")
    if args.method in ("structured", "both"):
        structured = superabundant_structured(
            args.limit, cache_path=args.cache_path, resume=args.resume,
            progress=progress,
        )
    if args.method in ("bruteforce", "both"):
        brute = superabundant_bruteforce(args.limit, progress=progress)
    if args.method == "both":
        if structured != brute:
            raise RuntimeError(
                "structured and brute-force enumerations disagree; this is a bug"
            )
        records = structured
        note = " (both methods agree)"
    else:
        records = structured if args.method == "structured" else brute
        note = ""
    rows = _record_rows(records)
    text = [
        f"{row['n']} = {row['factorization']}  I = {row['index_num']}/{row['index_den']}"
        for row in rows
    ]
    text.append(f"{len(records)} superabundant numbers ≤ {args.limit}{note}")
    _emit(rows, text, args.format)


def _cmd_count(args) -> None:
    count, holds = count_superabundant(args.x)
    _emit(
        [{"x": args.x, "count": count, "log_lower_bound_holds": holds}],
        [f"S({args.x}) = {count}; S(x) ≥ ln x {'holds' if holds else 'FAILS'}"],
        args.format,
    )


def _cmd_robin(args) -> None:
    rep = robin_check(args.n, args.precision)
    _emit(_robin_rows([rep]), [_verdict_text(rep), rep.verdict.value], args.format)


def _cmd_robin_unconditional(args) -> None:
    rep = robin_unconditional_check(args.n, args.precision)
    _emit(_robin_rows([rep]), [_verdict_text(rep), rep.verdict.value], args.format)


def _cmd_exceptions(args) -> None:
    ns = exceptions_below(args.threshold, args.precision,
                          progress=_Progress("exceptions scan"))
    reports = [robin_check(n, args.precision) for n in ns]
    rows = _robin_rows(reports)
    text = [_verdict_text(rep) for rep in reports]
    text.append(f"{len(ns)} exceptions below {args.threshold}")
    _emit(rows, text, args.format)


def _cmd_lagarias(args) -> None:
    verdict, bound = lagarias_report(args.n, args.precision)
    f = factorize(args.n)
    sig = sigma(f)
    q = abundancy_index(f)
    row = {
        "n": args.n,
        "sigma": sig,
        "index_num": q.numerator,
        "index_den": q.denominator,
        "bound_lo": bound.lo_decimal(),
        "bound_hi": bound.hi_decimal(),
        "verdict": verdict.value,
        "precision": bound.precision_digits,
    }
    _emit(
        [row],
        [f"σ({args.n}) = {sig} vs e^H·ln H + H in "
         f"[{bound.lo_decimal()[:12]}…, {bound.hi_decimal()[:12]}…] -> {verdict.value}",
         verdict.value],
        args.format,
    )


def _cmd_gronwall(args) -> None:
    if args.superabundant_limit is not None:
        records = [r for r in superabundant_structured(args.superabundant_limit)
                   if r.n >= 3]
        rows = []
        for rec in records:
            ratio = gronwall_ratio(rec.n, args.precision)
            rows.append({
                "n": rec.n,
                "index_num": rec.index.numerator,
                "index_den": rec.index.denominator,
                "ratio_lo": ratio.lo_decimal(),
                "ratio_hi": ratio.hi_decimal(),
                "precision": ratio.precision_digits,
            })
        text = [f"n = {r['n']}: I/(e^γ ln ln n) ≈ {r['ratio_lo'][:10]}" for r in rows]
        _emit(rows, text, args.format)
        return
    ratio = gronwall_ratio(args.n, args.precision)
    q = abundancy_index(factorize(args.n))
    _emit(
        [{"n": args.n, "index_num": q.numerator, "index_den": q.denominator,
          "ratio_lo": ratio.lo_decimal(), "ratio_hi": ratio.hi_decimal(),
          "precision": ratio.precision_digits}],
        [f"I({args.n})/(e^γ ln ln {args.n}) ∈ [{ratio.lo_decimal()[:12]}…, "
         f"{ratio.hi_decimal()[:12]}…]"],
        args.format,
    )


def _cmd_akbary_scan(args) -> None:
    reports = akbary_scan(args.limit, args.precision,
                          progress=_Progress("akbary scan"))
    rows = _robin_rows(reports)
    text = [_verdict_text(rep) for rep in reports]
    candidates = [rep.n for rep in reports if rep.verdict is Verdict.VIOLATES]
    if candidates:
        text.append(
            f"RIEMANN HYPOTHESIS COUNTEREXAMPLE CANDIDATES: {candidates}"
        )
    else:
        text.append(
            f"Robin's inequality holds at every superabundant n in (5040, {args.limit}]"
        )
    _emit(rows, text, args.format)


def _cmd_even_perfect(args) -> None:
    pairs = even_perfect_numbers(args.count)
    rows = [{"p": p, "n": n} for p, n in pairs]
    _emit(rows, [f"p = {p}: {n}" for p, n in pairs], args.format)


def _cmd_harmonic(args) -> None:
    h = harmonic(args.n, args.precision)
    row = {
        "n": args.n,
        "exact_num": h.exact.numerator if h.exact else None,
        "exact_den": h.exact.denominator if h.exact else None,
        "lo": h.enclosure.lo_decimal(),
        "hi": h.enclosure.hi_decimal(),
        "precision": h.enclosure.precision_digits,
    }
    if h.exact is not None:
        text = f"H_{args.n} = {_frac_str(h.exact)} ≈ {h.enclosure.lo_decimal()[:14]}…"
    else:
        text = f"H_{args.n} ∈ [{h.enclosure.lo_decimal()[:14]}…, {h.enclosure.hi_decimal()[:14]}…]"
    _emit([row], [text], args.format)


# --- parser --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--precision", type=_positive_int, default=DEFAULT_PRECISION,
                        help="decimal digits for certified bounds (default 50)")
    common.add_argument("--search-bound", type=_positive_int,
                        default=DEFAULT_SEARCH_BOUND,
                        help="witness search bound (default 1000000)")
    common.add_argument("--cache-path", default=DEFAULT_CACHE_PATH,
                        help="superabundant record cache file")
    common.add_argument("--threads", type=_positive_int,
                        default=os.cpu_count() or 1,
                        help="worker budget for scans (scans are currently "
                             "sequential; accepted for interface stability)")

    parser = argparse.ArgumentParser(
        prog="abundancy",
        description="Exact abundancy-index arithmetic, outlaw certification, "
                    "superabundant enumeration, and certified Robin/Lagarias checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, **arguments):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for arg_name, kwargs in arguments.items():
            p.add_argument(arg_name.replace("_", "-"), **kwargs)
        p.set_defaults(handler=handler)
        return p

    add("index", _cmd_index, "abundancy index I(n) with classification",
        n={"type": _positive_int})
    add("sigma", _cmd_sigma, "divisor sum σ(n)", n={"type": _positive_int})
    add("classify", _cmd_classify, "perfect / abundant / deficient",
        n={"type": _positive_int})
    add("bounds", _cmd_bounds, "prime-support bracketing of I(n)",
        n={"type": _positive_int})
    add("outlaw", _cmd_outlaw, "certify a rational as index/outlaw/unknown",
        q={"type": _rational})
    fam = sub.add_parser("outlaw-family", parents=[common],
                         help="evaluate one of the outlaw families")
    fam.add_argument("family", choices=("2p", "pq", "even-perfect"))
    fam.add_argument("--p", type=_positive_int)
    fam.add_argument("--q", type=_positive_int)
    fam.add_argument("--n", type=_positive_int)
    fam.set_defaults(handler=_cmd_outlaw_family)
    add("witness", _cmd_witness, "smallest n with I(n) = q, bounded search",
        q={"type": _rational})
    sab = sub.add_parser("superabundant", parents=[common],
                         help="enumerate superabundant numbers")
    sab.add_argument("--limit", type=_positive_int, required=True)
    sab.add_argument("--method", choices=("structured", "bruteforce", "both"),
                     default="structured")
    sab.add_argument("--resume", action="store_true",
                     help="continue from the cache file")
    sab.set_defaults(handler=_cmd_superabundant)
    add("count", _cmd_count, "S(x) with the ln x lower-bound flag",
        x={"type": _positive_int})
    add("robin", _cmd_robin, "certified check of I(n) < e^γ ln ln n",
        n={"type": _positive_int})
    add("robin-unconditional", _cmd_robin_unconditional,
        "certified check of the augmented (always true) Robin bound",
        n={"type": _positive_int})
    exc = sub.add_parser("exceptions", parents=[common],
                         help="all Robin violations below a threshold")
    exc.add_argument("--threshold", type=_positive_int, required=True)
    exc.set_defaults(handler=_cmd_exceptions)
    add("lagarias", _cmd_lagarias, "certified check of σ(n) ≤ e^H ln H + H",
        n={"type": _positive_int})
    gro = sub.add_parser("gronwall", parents=[common],
                         help="certified I(n)/(e^γ ln ln n) ratio")
    gro.add_argument("n", type=_positive_int, nargs="?")
    gro.add_argument("--superabundant-limit", type=_positive_int,
                     help="emit the ratio for every superabundant n ≤ limit")
    gro.set_defaults(handler=_cmd_gronwall)
    akb = sub.add_parser("akbary-scan", parents=[common],
                         help="Robin check on superabundant numbers only")
    akb.add_argument("--limit", type=_positive_int, required=True)
    akb.set_defaults(handler=_cmd_akbary_scan)
    epf = sub.add_parser("even-perfect", parents=[common],
                         help="first even perfect numbers via Lucas-Lehmer")
    epf.add_argument("--count", type=_positive_int, default=4)
    epf.set_defaults(handler=_cmd_even_perfect)
    add("harmonic", _cmd_harmonic, "harmonic number H_n, exact and enclosed",
        n={"type": _positive_int})
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "command", None) == "gronwall":
        if args.n is None and args.superabundant_limit is None:
            print("error: gronwall needs n or --superabundant-limit", file=sys.stderr)
            return 2
    try:
        args.handler(args)
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
