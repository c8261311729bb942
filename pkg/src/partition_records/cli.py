"""Command-line interface: enumeration, statistics, generating-function
coefficients, exact totals, asymptotics, and the verification suites.

Data goes to stdout, logs and errors to stderr.  Exit codes: 0 success
(verify: all cases passed), 1 verification failures, 2 usage errors.
Output for a given set of flags is deterministic, except for the
``elapsed_ms`` timing field of verify outcomes.

The only environment variable read is PARTITION_RECORDS_CACHE: a
directory holding the optional Bell-number cache file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import verify as verify_mod
from .asymptotics import asymptotic_report
from .closedform import egf_w, load_or_build_tables, total_swrec_formula
from .genfunc import gf_product
from .setpartitions import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_rgs,
    rec_count,
    srec,
    swrec,
)

CACHE_ENV_VAR = "PARTITION_RECORDS_CACHE"

_STATS = {"swrec": swrec, "srec": srec, "rec": rec_count}


def _cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV_VAR) or None


def _tables(max_n: int, stirling_max_n: int | None = None):
    return load_or_build_tables(max_n, cache_dir=_cache_dir(), stirling_max_n=stirling_max_n)


def _format_word(word: tuple[int, ...], n: int) -> str:
    if not word:
        return "ε"
    # Single digits concatenate unambiguously; longer words (labels can
    # reach 10+) are dot-separated across the whole listing.
    if n <= 9:
        return "".join(str(v) for v in word)
    return ".".join(str(v) for v in word)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n > args.cap:
        print(f"error: n={args.n} exceeds the enumeration cap {args.cap}", file=sys.stderr)
        return 2
    stat = _STATS[args.stat] if args.stat else None
    for word in enumerate_rgs(args.n, args.k):
        line = _format_word(word, args.n)
        if stat is not None:
            line = f"{line}\t{stat(word)}"
        print(line)
    return 0


def _cmd_total(args: argparse.Namespace) -> int:
    if args.method == "brute":
        if args.n > args.brute_cap:
            print(
                f"error: n={args.n} exceeds the brute-force cap {args.brute_cap}",
                file=sys.stderr,
            )
            return 2
        from .setpartitions import total_swrec_bruteforce

        print(total_swrec_bruteforce(args.n, cap=args.brute_cap))
        return 0
    if args.n > args.formula_cap:
        print(f"error: n={args.n} exceeds the formula cap {args.formula_cap}", file=sys.stderr)
        return 2
    tables = _tables(args.n + 3, stirling_max_n=0)
    if args.method == "formula":
        print(total_swrec_formula(args.n, tables))
    else:  # egf
        value = egf_w(args.n, tables).egf_coefficient(args.n)
        if value.denominator != 1:
            print(f"error: EGF coefficient for n={args.n} is not an integer", file=sys.stderr)
            return 1
        print(value.numerator)
    return 0


def _cmd_gf(args: argparse.Namespace) -> int:
    series = gf_product(args.k, args.max_n)
    rows = [[n, s, c] for n, s, c in series.terms()]
    if args.format == "csv":
        print("n,s,count")
        for n, s, c in rows:
            print(f"{n},{s},{c}")
    else:
        print(json.dumps(rows))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = verify_mod.SUITES[args.suite]
    kwargs = {}
    if args.suite == "eq1":
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    elif args.suite == "recurrence":
        if args.max_k is not None:
            kwargs["max_k"] = args.max_k
        if args.order is not None:
            kwargs["order"] = args.order
    elif args.suite == "lemma2":
        if args.max_k is not None:
            kwargs["max_k"] = args.max_k
        if args.order is not None:
            kwargs["order"] = args.order
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    elif args.suite == "propn":
        if args.max_k is not None:
            kwargs["max_k"] = args.max_k
        if args.points is not None:
            kwargs["points"] = args.points
    elif args.suite == "thm2":
        if args.max_n is not None:
            kwargs["formula_max_n"] = args.max_n
    elif args.suite == "thm3":
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    outcome = suite(**kwargs)
    print(json.dumps(outcome.to_json_dict(), indent=2))
    return 0 if outcome.passed else 1


def _cmd_asymptotic(args: argparse.Namespace) -> int:
    text = args.ns.strip()
    if not text:
        print("[]")
        return 0
    try:
        ns = [int(part) for part in text.split(",")]
        if any(n < 1 for n in ns):
            raise ValueError
    except ValueError:
        print(f"error: --ns must be a comma-separated list of positive integers, got {args.ns!r}",
              file=sys.stderr)
        return 2
    tables = _tables(max(ns) + 3, stirling_max_n=0)
    reports = asymptotic_report(ns, tables)
    print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-records",
        description="Exact weighted-record statistics on set partitions, "
        "with generating-function and Bell-number cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list restricted growth strings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="restrict to exactly k blocks")
    p.add_argument("--stat", choices=sorted(_STATS), default=None,
                   help="annotate each word with a statistic")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="enumeration size cap (default %(default)s)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("total", help="total of swrec over all partitions of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "brute", "egf"], default="formula")
    p.add_argument("--brute-cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--formula-cap", type=int, default=500)
    p.set_defaults(func=_cmd_total)

    p = sub.add_parser("gf", help="generating-function coefficients (n, s, count)")
    p.add_argument("--k", type=int, required=True, help="number of blocks (>= 1)")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify_mod.SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--points", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asymptotic", help="asymptotic-estimate reports")
    p.add_argument("--ns", type=str, required=True,
                   help="comma-separated sizes; empty string gives []")
    p.add_argument("--json", action="store_true",
                   help="accepted for compatibility; output is always JSON")
    p.set_defaults(func=_cmd_asymptotic)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass that through
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
