"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines inline; they are
also repeated in the terminal summary.
"""

from __future__ import annotations

import math
import random
import time
from functools import lru_cache

import pytest

from d2crit.bounds import MurtySimonStatus, check_murty_simon, constants, f_A2_closed, f_A2_long
from d2crit.canon import canonical_form
from d2crit.domination import domination_number, total_domination_number
from d2crit.enumerate import EnumerationTask, Filter, brute_force_classes, iter_graphs
from d2crit.graph import complement, is_connected, star_graph
from d2crit.graph6 import Graph6Error, decode_graph6, encode_graph6
from d2crit.verify import resolve_claims, run_numeric_claims, sweep_range

from conftest import random_graph
from oracles import subset_domination

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2} {title}: {detail} ({elapsed:.1f}s)"
    RESULTS.append(line)
    print(line)


@lru_cache(maxsize=None)
def graphs_of(n: int, flt: Filter) -> tuple:
    return tuple(iter_graphs(EnumerationTask(n, flt)))


def tallies(report) -> str:
    return ", ".join(
        f"{t.claim_id} {t.applicable}/{t.checked} applicable, {t.violations} violations"
        for t in report.tallies.values()
    )


def test_criterion_01_murty_simon():
    start = time.perf_counter()
    report = sweep_range(3, 9, Filter.DIAMETER2_CRITICAL, ["CONJ_1_1"])
    equality = []
    for n in range(3, 10):
        for g in graphs_of(n, Filter.DIAMETER2_CRITICAL):
            m, bound, status = check_murty_simon(g, trusted=True)
            if m == bound:
                equality.append(status)
    elapsed = time.perf_counter() - start
    ok = (
        report.total_violations == 0
        and all(s is MurtySimonStatus.EQUALITY_BALANCED_BIPARTITE for s in equality)
        and elapsed < 600
    )
    record(1, "Murty-Simon, d2-critical 3<=n<=9", ok,
           f"{tallies(report)}; {len(equality)} equality cases, all balanced bipartite", elapsed)
    assert ok


def test_criterion_02_duality():
    start = time.perf_counter()
    report = sweep_range(3, 8, Filter.ALL, ["THM_2_1"])
    mismatched = []
    for n in range(3, 9):
        duals = {canonical_form(complement(g)) for g in graphs_of(n, Filter.DIAMETER2_CRITICAL)}
        # the star's complement has an isolated vertex and sits outside the correspondence
        duals.discard(canonical_form(complement(star_graph(n - 1))))
        ttc3 = {canonical_form(g) for g in graphs_of(n, Filter.TTC3)}
        super4 = {canonical_form(g) for g in graphs_of(n, Filter.SUPER4)}
        if duals != ttc3 | super4 or ttc3 & super4:
            mismatched.append(n)
    elapsed = time.perf_counter() - start
    ok = report.total_violations == 0 and not mismatched and elapsed < 900
    record(2, "complement duality, 3<=n<=8", ok,
           f"{tallies(report)}; set bijection mismatches at n={mismatched or 'none'}", elapsed)
    assert ok


def test_criterion_03_supercritical_characterisation():
    start = time.perf_counter()
    report = sweep_range(2, 8, Filter.ALL, ["THM_2_2"])
    elapsed = time.perf_counter() - start
    ok = report.total_violations == 0
    record(3, "4t-supercritical iff two cliques, n<=8", ok, tallies(report), elapsed)
    assert ok


def test_criterion_04_structure():
    start = time.perf_counter()
    report = sweep_range(2, 8, Filter.TTC3, ["THM_2_3", "THM_2_4"])
    elapsed = time.perf_counter() - start
    ok = report.total_violations == 0
    record(4, "3t-critical diameter and size, n<=8", ok, tallies(report), elapsed)
    assert ok


def test_criterion_05_quasi_structure():
    start = time.perf_counter()
    report = sweep_range(2, 8, Filter.TTC3, ["LEM_3_1", "DEF_3_2_INJ", "LEM_3_3", "LEM_3_4"])
    elapsed = time.perf_counter() - start
    lem = report.tallies["LEM_3_1"]
    dominating = sum(len(w["dominating_pairs"]) for w in lem.counterexamples)
    missing = sum(len(w["pairs_without_quasi_edge"]) for w in lem.counterexamples)
    ok = report.total_violations == 0
    record(5, "quasi-edge structure, 3t-critical n<=8", ok,
           f"{tallies(report)}; LEM_3_1 breakdown: {dominating} dominating nonadjacent pairs, "
           f"{missing} pairs without a quasi-edge", elapsed)
    assert ok


def test_criterion_06_main_theorems():
    start = time.perf_counter()
    small = sweep_range(2, 8, Filter.TTC3, ["THM_3_5", "THM_2_5a"])
    large = sweep_range(3, 9, Filter.DIAMETER2_CRITICAL, ["THM_3_6"])
    elapsed = time.perf_counter() - start
    ok = small.total_violations == 0 and large.total_violations == 0
    record(6, "main bounds (3t-critical n<=8, d2-critical n<=9)", ok,
           f"{tallies(small)}; {tallies(large)}", elapsed)
    assert ok


def test_criterion_07_numeric():
    start = time.perf_counter()
    report = run_numeric_claims(3, 10_000)
    k = constants()
    gap = max(abs(f_A2_long(n) - f_A2_closed(n)) for n in range(3, 101))
    g3 = report.details["LEM_A_1"]["min_g"]
    elapsed = time.perf_counter() - start
    checks = {
        "c residual": k.c_residual < 1e-12,
        "a residual": k.a_residual < 1e-12,
        "a closed form": abs(k.a - (math.sqrt(2) - math.sqrt(2 - math.sqrt(2))) / 2) < 1e-12,
        "g(3)": report.details["LEM_A_1"]["argmin"] == 3 and abs(g3 - 0.025) <= 0.005,
        "positivity": report.total_violations == 0,
        "A.2 agreement": gap <= 1e-9,
        "runtime": elapsed < 1.0,
    }
    ok = all(checks.values())
    failed = [name for name, good in checks.items() if not good]
    record(7, "numeric suite", ok,
           f"c_res={k.c_residual:.1e} a_res={k.a_residual:.1e} g(3)={g3:.6f} "
           f"A.2 gap={gap:.1e}; failed: {failed or 'none'}", elapsed)
    assert ok


def test_criterion_08_solver_oracle():
    start = time.perf_counter()
    rng = random.Random(20260101)
    samples = [random_graph(rng, rng.randint(1, 12)) for _ in range(1000)]
    samples += [g for n in range(1, 7) for g in graphs_of(n, Filter.ALL)]
    bad = 0
    for g in samples:
        if domination_number(g).number != subset_domination(g, total=False):
            bad += 1
        elif total_domination_number(g).number != subset_domination(g, total=True):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 300
    record(8, "solver vs 2^n oracle", ok, f"{len(samples)} graphs, {bad} mismatches", elapsed)
    assert ok


def test_criterion_09_enumeration_oracle():
    start = time.perf_counter()
    problems = []
    for n in range(1, 8):
        oracle = brute_force_classes(n)
        oracle_conn = sum(map(is_connected, oracle))
        if len(graphs_of(n, Filter.ALL)) != len(oracle):
            problems.append(f"ALL n={n}")
        if len(graphs_of(n, Filter.CONNECTED)) != oracle_conn:
            problems.append(f"CONNECTED n={n}")
    for flt in Filter:
        for n in (6, 7, 8):
            whole = len(graphs_of(n, flt))
            for count in (2, 5):
                parts = sum(
                    sum(1 for _ in iter_graphs(EnumerationTask(n, flt, (i, count)))) for i in range(count)
                )
                if parts != whole:
                    problems.append(f"partition {flt.value} n={n} k={count}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 300
    record(9, "enumeration vs dedupe oracle and partitions", ok,
           f"problems: {problems or 'none'}", elapsed)
    assert ok


MALFORMED = {
    "empty": "",
    "missing data": "B",
    "extra data": "Bww",
    "byte above range": "B\x7f",
    "byte below range": "B>",
    "nonzero padding": "Bx",
    "nonzero padding n=5": "DQ@",
    "truncated long header": "~?",
    "truncated 8-byte header": "~~??",
    "long header data length": "~??~",
}


def test_criterion_10_codec():
    start = time.perf_counter()
    failures = 0
    total = 0
    for n in range(0, 9):
        for g in graphs_of(n, Filter.ALL):
            total += 1
            text = encode_graph6(g)
            if decode_graph6(text) != g or encode_graph6(decode_graph6(text)) != text:
                failures += 1
    accepted = []
    for name, text in MALFORMED.items():
        try:
            decode_graph6(text)
        except Graph6Error:
            continue
        accepted.append(name)
    elapsed = time.perf_counter() - start
    ok = failures == 0 and not accepted and elapsed < 60
    record(10, "graph6 codec", ok,
           f"{total} round trips, {failures} failures; malformed accepted: {accepted or 'none'}", elapsed)
    assert ok
