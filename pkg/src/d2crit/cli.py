"""Command-line front end.

Exit codes: 0 no violations, 1 violations found, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .bounds import check_murty_simon
from .criticality import classify_complement
from .domination import domination_size, total_domination_size
from .enumerate import GUARD_N, EnumerationTask, Filter, iter_graphs
from .graph import Graph
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .verify import (
    PER_GRAPH_CLAIMS,
    GraphFacts,
    json_safe,
    evaluate,
    resolve_claims,
    run_numeric_claims,
    sweep_range,
)

REPORT_ENV = "D2CRIT_REPORT_PATH"

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def describe_graph(g: Graph) -> dict:
    """Per-graph report: invariants, criticality flags, bound statuses, claim violations."""
    facts = GraphFacts(g)
    out: dict = {"graph6": facts.graph6, "n": g.n, "m": g.m}
    if g.n == 0:
        return out
    delta, big = facts.degrees
    out.update(
        min_degree=delta,
        max_degree=big,
        diameter=facts.diameter,
        domination_number=domination_size(g),
        total_domination_number=total_domination_size(g),
        diameter_2_critical=facts.d2_critical,
        ttc3=facts.ttc3,
        super4=facts.super4,
    )
    if out["diameter_2_critical"]:
        m, bound, status = check_murty_simon(g, trusted=True)
        out["murty_simon"] = {"m": m, "bound": bound, "status": status.value}
        out["complement_class"] = classify_complement(g).value
    if facts.ttc3:
        qe = facts.quasi_edges
        out["quasi_edges"] = {
            "nonadjacent_pairs": len(qe),
            "pairs_with_quasi_edge": sum(1 for v in qe.values() if v),
            "quasi_edges": sum(len(v) for v in qe.values()),
        }
    violations = []
    for claim in resolve_claims(PER_GRAPH_CLAIMS):
        verdict = evaluate(claim, facts)
        if not verdict.holds:
            violations.append(verdict.witness | {"claim_id": claim.id})
    out["violations"] = violations
    return json_safe(out)


def cmd_check(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    stream = open(args.input, encoding="ascii") if args.input not in (None, "-") else sys.stdin
    found = False
    try:
        for lineno, line in enumerate(stream, 1):
            text = line.strip()
            if not text:
                continue
            try:
                g = decode_graph6(text)
            except Graph6Error as exc:
                print(f"line {lineno}: {exc}", file=stderr)
                if args.strict:
                    return EXIT_USAGE
                continue
            report = describe_graph(g)
            found = found or bool(report.get("violations"))
            stdout.write(json.dumps(report, sort_keys=True) + "\n")
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_VIOLATION if found else EXIT_OK


def cmd_sweep(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    try:
        flt = Filter.parse(args.filter)
        ids = PER_GRAPH_CLAIMS if args.claims in (None, "all") else args.claims.split(",")
        claims = resolve_claims(ids)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc.args[0]}", file=stderr)
        return EXIT_USAGE
    bad = [c.id for c in claims if c.scope != "per-graph"]
    if bad:
        print(f"error: numeric claims {bad} belong to the bounds command", file=stderr)
        return EXIT_USAGE
    if args.n_max > GUARD_N and not args.override_guard:
        print(f"error: --n-max {args.n_max} exceeds the guard {GUARD_N}; pass --override-guard", file=stderr)
        return EXIT_USAGE
    if args.n_min > args.n_max:
        print("error: --n-min exceeds --n-max", file=stderr)
        return EXIT_USAGE
    report = sweep_range(args.n_min, args.n_max, flt, claims, jobs=args.jobs, override_guard=args.override_guard)
    text = report.to_json(timing=not args.no_timing) + "\n"
    path = args.report_path or os.environ.get(REPORT_ENV)
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    for tally in report.tallies.values():
        print(f"{tally.claim_id}: checked={tally.checked} applicable={tally.applicable} "
              f"violations={tally.violations}", file=stderr)
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range must look like LO:HI, got {text!r}")
    return int(lo), int(hi)


def cmd_bounds(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    try:
        lo, hi = _parse_range(args.n_range)
        report = run_numeric_claims(lo, hi)
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(report.to_json(timing=not args.no_timing) + "\n")
    ok = report.total_violations == 0 and report.details["constants"]["ok"]
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_gen(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    try:
        task = EnumerationTask(args.n, Filter.parse(args.filter), override_guard=args.override_guard)
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    for g in iter_graphs(task):
        stdout.write(encode_graph6(g) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d2crit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    filters = ", ".join(f.value for f in Filter)

    p = sub.add_parser("check", help="analyse graph6 lines from a file or stdin")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strict", action="store_true", help="stop with exit code 2 on the first parse error")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run claims over all graphs n_min..n_max passing a filter")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--filter", default="all", help=f"one of: {filters}")
    p.add_argument("--claims", default="all", help="comma-separated claim ids, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-path", default=None, help=f"output file (default ${REPORT_ENV} or stdout)")
    p.add_argument("--override-guard", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit runtime fields for byte-stable output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="constants and the numeric inequalities")
    p.add_argument("--n-range", default="3:10000")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="emit one graph6 line per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="all", help=f"one of: {filters}")
    p.add_argument("--override-guard", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args, stdout or sys.stdout, stderr or sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
