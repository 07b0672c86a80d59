"""phistar command line: compute, enumerate, table.

Exit codes: 0 ok, 1 table mismatch, 2 invalid input, 3 factorization budget
exceeded, 4 golden file missing.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import tables
from .cyclotomic import phi_star
from .enumeration import (
    BoundSpec,
    enumerate_M,
    enumerate_Mstar_2,
    enumerate_Mstar_ge3,
)
from .intarith import prime_power_decompose
from .ppdfactor import (
    DEFAULT_BUDGET,
    FactorizationBudgetExceeded,
    PpdFactorization,
    factor_ppd,
    factor_value,
)
from .records import OutputRecord, render

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NO_GOLDEN = 4


def _positive_fraction(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PHISTAR_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phistar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Phi_n(q), Phi*_n(q) and its factorization")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--require-prime-power", action="store_true")
    p.add_argument("--no-factor", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max trial divisors when factoring (default %(default)s)")
    p.add_argument("--format", choices=["text", "csv", "jsonl"], default="text")

    p = sub.add_parser("enumerate", help="all pairs under the bound c*n^k")
    p.add_argument("--set", dest="which", choices=["M", "Mstar3", "Mstar2"], required=True)
    p.add_argument("--c", type=_positive_fraction, required=True)
    p.add_argument("--k", type=_positive_fraction, required=True)
    p.add_argument("--bound", type=int, help="ceiling B on primes q (required for Mstar2)")
    p.add_argument("--format", choices=["text", "csv", "jsonl"], default="text")
    p.add_argument("--no-factor", action="store_true", help="skip factoring (set M only)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default: $PHISTAR_JOBS or 1)")

    p = sub.add_parser("table", help="regenerate a table and diff against its golden file")
    p.add_argument("name", choices=tables.TABLE_NAMES)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--golden-dir", type=Path)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    return parser


def cmd_compute(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    n, q = args.n, args.q
    if n < 1 or q < 2:
        parser.error("need n >= 1 and q >= 2")
    pp = prime_power_decompose(q)
    if pp is None and args.require_prime_power:
        parser.error(f"q={q} is not a prime power")
    base, exp = (pp.base, pp.exponent) if pp else (q, 1)
    res = phi_star(n, q)
    f = None
    if not args.no_factor:
        if n == 1:
            # every prime is 1 mod 1: plain trial division of q - 1
            f = PpdFactorization(1, q, factor_value(1, res.phi_star, args.budget))
        else:
            f = factor_ppd(n, q, args.budget, value=res.phi_star)
    rec = OutputRecord.from_result(res, base, exp, f)
    sys.stdout.write(render([rec], args.format))
    return 0


def cmd_enumerate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    jobs = max(1, args.jobs)
    if args.which == "M":
        ps = enumerate_M(BoundSpec(args.c, args.k), jobs=jobs, factor=not args.no_factor,
                         budget=args.budget)
        records = [OutputRecord.from_pair(r, ps.tag) for r in ps]
    elif args.which == "Mstar3":
        ps = enumerate_Mstar_ge3(args.c, args.k, jobs=jobs, budget=args.budget)
        records = [OutputRecord.from_pair(r, ps.tag) for r in ps]
    else:
        if args.bound is None or args.bound <= 0:
            parser.error("--set Mstar2 needs a positive --bound")
        res = enumerate_Mstar_2(args.c, args.k, args.bound, budget=args.budget)
        records = [OutputRecord.from_pair(r, tag) for r, tag in res.union()]
    sys.stdout.write(render(records, args.format))
    return 0


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    path = tables.golden_path(args.name, args.golden_dir)
    if not path.is_file():
        print(f"golden file missing: {path}", file=sys.stderr)
        return EXIT_NO_GOLDEN
    actual, delta = tables.check(args.name, jobs=max(1, args.jobs), golden_dir=args.golden_dir)
    if args.format == "csv":
        sys.stdout.write(tables.to_csv(actual))
    else:
        sys.stdout.write(tables.to_text(actual))
    if delta:
        print("\n".join(delta))
        print(f"table {args.name}: MISMATCH", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"table {args.name}: matches golden ({len(actual[1])} rows)", file=sys.stderr)
    return 0


COMMANDS = {"compute": cmd_compute, "enumerate": cmd_enumerate, "table": cmd_table}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except FactorizationBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
