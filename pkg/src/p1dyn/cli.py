"""Command line front end.

Subcommands: analyze (reduction data, preperiodic inventory, bound table),
verify (proposition and counting checks), bounds (the bound table alone),
batch (a sweep over the quadratic family z^2 + c).

Exit codes: 0 success, 2 argument or parse error, 3 incomplete inventory,
4 a verification check failed.
"""

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd

from .bounds import BoundInputError, aggregate_bounds
from .intarith import ArithmeticInputError, FactorizationIncompleteError
from .magnitude import Comparison, compare, exact
from .mapparse import MapSyntaxError, parse_map
from .orbits import enumerate_preperiodic
from .ratmap import DegenerateMapError, reduction_profile
from .report import (SCHEMA_VERSION, BOUND_ORDER, analysis_report, analysis_text,
                     batch_rows_csv, bound_rows, report_json, verification_line,
                     verification_to_dict)
from .verify import FAIL, SUITE_NAMES, run_suite

_INPUT_ERRORS = (MapSyntaxError, DegenerateMapError, ArithmeticInputError,
                 FactorizationIncompleteError, BoundInputError)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _parse_s_extra(text: str) -> list[int]:
    primes = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            primes.append(int(tok))
        except ValueError:
            raise ArithmeticInputError(f"--s-extra: {tok!r} is not an integer")
    return primes


def _write_json(path: str, document: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report_json(document))


def cmd_analyze(args) -> int:
    try:
        pair = parse_map(args.map)
        profile = reduction_profile(pair)
        places = profile.places
        if args.s_extra:
            places = places.extended(_parse_s_extra(args.s_extra))
    except _INPUT_ERRORS as e:
        return _fail(str(e))
    if pair.degree_below_2:
        report = analysis_report(pair, profile, places, None)
        sys.stdout.write(analysis_text(report))
        if args.json:
            _write_json(args.json, report)
        return _fail("dynamical analysis needs a map of degree at least 2")
    try:
        inv = enumerate_preperiodic(pair, args.height, max_iters=args.max_iters,
                                    escape_height=args.escape)
    except ArithmeticInputError as e:
        return _fail(str(e))
    report = analysis_report(pair, profile, places, inv)
    sys.stdout.write(analysis_text(report))
    if args.json:
        _write_json(args.json, report)
    return 3 if inv.incomplete else 0


def cmd_verify(args) -> int:
    try:
        pair = parse_map(args.map)
        reports = run_suite(pair, args.suite, height=args.height,
                            max_iters=args.max_iters, escape_height=args.escape)
    except _INPUT_ERRORS as e:
        return _fail(str(e))
    for r in reports:
        print(verification_line(r))
    if args.json:
        _write_json(args.json, {
            "schema_version": SCHEMA_VERSION,
            "map": {"input": str(pair)},
            "suite": args.suite,
            "verifications": [verification_to_dict(r) for r in reports],
        })
    return 4 if any(r.status == FAIL for r in reports) else 0


def cmd_bounds(args) -> int:
    try:
        rows = bound_rows(args.d, args.s, args.which)
    except BoundInputError as e:
        return _fail(str(e))
    for row in rows:
        print(row)
    return 0


def _sweep_entry(task):
    """Inventory counts for one member of z^2 + c, plus the overall bound check."""
    num, den, height, max_iters, escape = task
    c = Fraction(num, den)
    pair = parse_map(f"z^2+{c}" if num >= 0 else f"z^2-{-c}")
    profile = reduction_profile(pair)
    inv = enumerate_preperiodic(pair, height, max_iters=max_iters,
                                escape_height=escape)
    if inv.incomplete:
        status = "SKIPPED"
    else:
        q = aggregate_bounds(2, profile.places.size).preperiodic
        ok = compare(exact(len(inv.preper)), q) is not Comparison.GREATER
        status = "PASS" if ok else FAIL
    return {"c": str(c), "s": profile.places.size,
            "bad_primes": list(profile.bad_primes),
            "preper": len(inv.preper), "per": len(inv.per),
            "tail": len(inv.tail), "per0": len(inv.per0),
            "incomplete": inv.incomplete, "count_le_Q": status}


def cmd_batch(args) -> int:
    family = args.family.replace(" ", "")
    if family not in ("z^2+c", "z**2+c"):
        return _fail(f"unsupported family {args.family!r}; only z^2+c is available")
    if args.c_num_max < 1 or args.c_den_max < 1:
        return _fail("--c-num-max and --c-den-max must be at least 1")
    if args.jobs < 1:
        return _fail("--jobs must be at least 1")
    if args.height < 1 or args.max_iters < 1 or args.escape < 1:
        return _fail("search limits must be positive")
    tasks = [(num, den, args.height, args.max_iters, args.escape)
             for den in range(1, args.c_den_max + 1)
             for num in range(-args.c_num_max, args.c_num_max + 1)
             if gcd(num, den) == 1]
    if args.jobs == 1:
        rows = [_sweep_entry(t) for t in tasks]
    else:
        # map preserves task order, so the CSV is identical for any job count
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunk = max(1, len(tasks) // (8 * args.jobs))
            rows = list(pool.map(_sweep_entry, tasks, chunksize=chunk))
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerows(batch_rows_csv(rows))
    best = max(r["preper"] for r in rows)
    attained = [r["c"] for r in rows if r["preper"] == best]
    print(f"maps analyzed: {len(rows)}")
    print(f"max |PrePer| = {best} at " + ", ".join(f"c = {c}" for c in attained))
    undecided = sum(1 for r in rows if r["incomplete"])
    if undecided:
        print(f"note: {undecided} sweep entries left starting points undecided")
    violations = [r["c"] for r in rows if r["count_le_Q"] == FAIL]
    if violations:
        print("preperiodic count bound violated at " +
              ", ".join(f"c = {c}" for c in violations))
        return 4
    return 0


def _add_search_flags(sp, height_default: int) -> None:
    sp.add_argument("--height", type=int, default=height_default,
                    help=f"height bound for the point search (default {height_default})")
    sp.add_argument("--max-iters", type=int, default=256, dest="max_iters",
                    help="iteration budget per starting point (default 256)")
    sp.add_argument("--escape", type=int, default=10**6,
                    help="height above which an orbit counts as escaped (default 10^6)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="p1dyn",
        description="Exact arithmetic dynamics on the projective line over Q")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze",
                       help="reduction data, preperiodic inventory, bound table")
    a.add_argument("--map", required=True,
                   help="rational map, e.g. 'z^2-29/16' or '[X^3+2*Y^3:X*Y^2]'")
    _add_search_flags(a, 1024)
    a.add_argument("--s-extra", default="", dest="s_extra",
                   help="comma separated primes to add to the place set S")
    a.add_argument("--json", default="",
                   help="also write the JSON document to this path")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify",
                       help="run proposition and counting checks against a map")
    v.add_argument("--map", required=True)
    v.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    _add_search_flags(v, 64)
    v.add_argument("--json", default="")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="print the preperiodic count bound table")
    b.add_argument("--d", type=int, required=True, help="degree of the map, at least 2")
    b.add_argument("--s", type=int, required=True,
                   help="number of places in S including infinity, at least 1")
    b.add_argument("--which", choices=BOUND_ORDER, default=None,
                   help="print a single labelled bound")
    b.set_defaults(func=cmd_bounds)

    bt = sub.add_parser("batch", help="sweep the quadratic family z^2 + c")
    bt.add_argument("--family", required=True, help="only 'z^2+c' is supported")
    bt.add_argument("--c-num-max", type=int, required=True, dest="c_num_max",
                    help="range bound for the numerator of c")
    bt.add_argument("--c-den-max", type=int, required=True, dest="c_den_max",
                    help="range bound for the denominator of c")
    _add_search_flags(bt, 64)
    bt.add_argument("--jobs", type=int, default=1,
                    help="worker processes (default 1)")
    bt.add_argument("--csv", default="", help="write per-map rows to this path")
    bt.set_defaults(func=cmd_batch)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
