"""Command-line interface.

Subcommands:

  count      one value: pk or pf count for a pattern list at a given size
  sequence   a whole row n = 1..n_max (bfile / csv / json)
  classes    generalized-parking class counts by family and m
  bijection  run a tree bijection forward (blocks -> tree) or backward
  verify     formula-vs-oracle sweeps; exit code 2 on any mismatch

Output is deterministic byte-for-byte for identical invocations; timing is
only emitted under --timing.  Exit codes: 0 ok, 1 usage or parse error,
2 verification mismatch, 3 enumeration budget refused.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bijections, generalized, oracle, trees
from .counting import CountResult, pf_count, pk_count
from .parking import format_blocks, parse_blocks
from .permutations import parse_pattern_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

CLASS_FAMILIES = {
    "hyposylvester-multi": lambda n, m: generalized.hyposylvester_multipark(n, m),
    "metasylvester-multi": lambda n, m: generalized.metasylvester_multipark(n, m),
    "metasylvester-m": lambda n, m: generalized.metasylvester_mpark(n, m),
    "hypoplactic-m": lambda n, m: generalized.hypoplactic_mpark(n, m),
    "hyposylvester-m": lambda n, m: generalized.hyposylvester_mpark(n, m),
}


def _count_for(notion: str, patterns_text: str, n: int) -> CountResult:
    patterns = parse_pattern_set(patterns_text)
    if notion == "pk":
        if all(q.n == 3 for q in patterns):
            return pk_count(patterns, n)
        from .counting import generic_weighted_pk

        return generic_weighted_pk(n, patterns)
    if notion == "pf":
        return pf_count(patterns, n)
    raise ValueError(f"unknown notion {notion!r}; use pk or pf")


def _emit_records(records: list[dict], fmt: str, timing: bool, out) -> None:
    if fmt == "bfile":
        for r in records:
            out.write(f"{r['n']} {r['value']}\n")
        return
    if fmt == "csv":
        cols = ["n", "value", "method"] + (["elapsed_ms"] if timing else [])
        out.write(",".join(cols) + "\n")
        for r in records:
            out.write(",".join(str(r[c]) for c in cols) + "\n")
        return
    if fmt == "json":
        if not timing:
            records = [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in records]
        out.write(json.dumps(records, indent=None, separators=(",", ":")) + "\n")
        return
    raise ValueError(f"unknown format {fmt!r}")


def cmd_count(args, out) -> int:
    t0 = time.perf_counter()
    result = _count_for(args.notion, args.patterns, args.n)
    record = {
        "n": args.n,
        "value": result.value,
        "method": result.method,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    if args.format == "plain":
        out.write(f"{result.value}\n")
    else:
        _emit_records([record], args.format, args.timing, out)
    return EXIT_OK


def cmd_sequence(args, out) -> int:
    records = []
    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        result = _count_for(args.notion, args.patterns, n)
        records.append(
            {
                "n": n,
                "value": result.value,
                "method": result.method,
                "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
            }
        )
    _emit_records(records, args.format, args.timing, out)
    return EXIT_OK


def cmd_classes(args, out) -> int:
    fn = CLASS_FAMILIES[args.family]
    records = []
    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        value = fn(n, args.m)
        records.append(
            {
                "n": n,
                "value": value,
                "method": "enumeration" if args.family == "metasylvester-m" else "formula",
                "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
            }
        )
    _emit_records(records, args.format, args.timing, out)
    return EXIT_OK


def cmd_bijection(args, out) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    text = text.strip()
    if args.direction == "forward":
        blocks = parse_blocks(text)
        tree = bijections.forward(blocks, args.family)
        out.write(trees.serialize_tree(tree) + "\n")
    else:
        tree = trees.parse_tree(text)
        blocks = bijections.backward(tree, args.family)
        out.write(format_blocks(blocks) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    suites = args.suite if args.suite != "all" else "formulas,bijections,classes"
    reports = oracle.verify_all(args.n_max, suites)
    bad = 0
    for report in reports:
        if not report.agree or args.verbose:
            out.write(report.line() + "\n")
        if not report.agree:
            bad += 1
    out.write(f"{len(reports)} checks, {bad} mismatches\n")
    return EXIT_OK if bad == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkav",
        description="Exact counts and bijections for pattern-restricted parking functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="one exact count")
    p.add_argument("--notion", choices=["pk", "pf"], required=True)
    p.add_argument("--patterns", required=True, help='comma-separated, e.g. "123,132"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "bfile", "csv", "json"], default="plain")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("sequence", help="values for n = 1..n_max")
    p.add_argument("--notion", choices=["pk", "pf"], required=True)
    p.add_argument("--patterns", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_sequence)

    p = sub.add_parser("classes", help="generalized parking-function class counts")
    p.add_argument("--family", choices=sorted(CLASS_FAMILIES), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("bijection", help="blocks <-> tree")
    p.add_argument("--family", choices=list(bijections.FAMILIES), required=True)
    p.add_argument("--direction", choices=["forward", "backward"], required=True)
    p.add_argument("--input", default="-", help="path, or - for stdin")
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("verify", help="formula-vs-oracle sweeps")
    p.add_argument(
        "--suite",
        default="all",
        help="all, or comma-joined subset of formulas,bijections,classes",
    )
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args, sys.stdout)
    except (generalized.PathBudgetExceeded, oracle.OracleCapExceeded) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
