"""Acceptance gate: one PASS/FAIL line per criterion, printed in the terminal summary."""

import json
import os
import random
import time

import pytest

import oracles
from conftest import FIXTURES, graphs_up_to
from cyclelab.cycles import (
    _residual_of_mask,
    analyze,
    circumference,
    cycles_of_order,
    longest_path_order,
)
from cyclelab.graph import Graph, complete_bipartite, from_graph6, is_independent, petersen, to_graph6
from cyclelab.invariants import INFINITY, independence_number, sigma_k, vertex_connectivity
from cyclelab.search import GeneratorSource, ScanJob, scan
from cyclelab.statements import (
    check_reduction_identity,
    check_reduction_identity_thm8,
    evaluate,
    lookup,
    select,
)

WORKERS = min(8, os.cpu_count() or 1)
PROVED = tuple(s.id for s in select("proved"))
OPEN = tuple(s.id for s in select("open"))


@pytest.fixture(scope="module")
def full_scan():
    start = time.monotonic()
    report = scan(ScanJob(GeneratorSource(3, 8), PROVED + OPEN, workers=WORKERS))
    return report, time.monotonic() - start


def test_1_theorem_soundness(full_scan, acceptance_log):
    report, seconds = full_scan
    proved = report.proved_violations
    evaluated = sum(sum(report.totals[sid].values()) for sid in PROVED)
    ok = not proved and not report.skipped and seconds < 1800
    acceptance_log(
        "1 theorem soundness",
        ok,
        f"{report.graphs_evaluated} graphs, {evaluated} verdicts, {len(proved)} violated, "
        f"{len(report.skipped)} skipped, {seconds:.0f}s with {WORKERS} worker(s)",
    )
    assert report.graphs_total == 2 + 6 + 21 + 112 + 853 + 11117
    assert not proved, proved[:5]
    assert not report.skipped
    assert seconds < 1800


def test_2_open_conjectures(full_scan, acceptance_log, capsys):
    report, _ = full_scan
    rows = report.open_violations
    confirmed = {
        sid: report.totals[sid]["CONFIRMED"] for sid in ("C7", "C8", "C9", "C10")
    }
    ok = all(confirmed.values())
    acceptance_log(
        "2 open-conjecture scan",
        ok,
        f"non-vacuous CONFIRMED counts {confirmed}; "
        + (f"zero-row expectation not met, {len(rows)} OPEN-VIOLATION rows printed for manual review"
           if rows else "no OPEN-VIOLATION rows"),
    )
    if rows:
        with capsys.disabled():
            print(f"\n{len(rows)} OPEN-VIOLATION rows (manual review, not a failure):")
            for r in rows:
                print(f"  OPEN-VIOLATION {r['statement']} lambda={r['lambda']} graph6={r['graph6']} "
                      f"margin={r['conclusion_margin']} invariants={r['invariants']}")
    assert ok


def test_vacuity_accounting(full_scan):
    report, _ = full_scan
    documented = set(json.loads((FIXTURES / "statements.json").read_text())["always_vacuous_up_to_8"]["ids"])
    never = {sid for sid, counts in report.totals.items() if counts["VACUOUS"] == sum(counts.values())}
    assert never == documented
    summary = report.summary()["statements"]
    assert all("/" in v["non_vacuous_fraction"] for v in summary.values())


def test_3_oracle_equivalence(small_graphs, acceptance_log):
    mismatches = []
    for g in small_graphs:
        checks = {
            "circumference": (circumference(g), oracles.circumference(g)),
            "path": (longest_path_order(g), oracles.longest_path(g)),
            "alpha": (independence_number(g), oracles.independence_number(g)),
            "kappa": (vertex_connectivity(g), oracles.vertex_connectivity(g)),
        }
        for k in range(1, g.n + 1):
            want = oracles.sigma(g, k)
            checks[f"sigma_{k}"] = (sigma_k(g, k), INFINITY if want is None else want)
        mismatches += [(to_graph6(g), name) for name, (a, b) in checks.items() if a != b]
    acceptance_log("3 oracle equivalence", not mismatches,
                   f"{len(small_graphs)} graphs n<=7, {len(mismatches)} mismatches")
    assert not mismatches


def test_4_fixture_values(acceptance_log):
    b, a = analyze(petersen())
    petersen_ok = (
        (b.n, b.min_degree, b.connectivity, b.independence_number, a.circumference) == (10, 3, 3, 4, 9)
        and a.distinct_profiles() == [(1, 1)]
    )
    kb, ka = analyze(complete_bipartite(3, 4))
    r = evaluate(kb, ka, lookup("CL-e"), 2)
    k34_ok = (kb.min_degree, ka.circumference, r.conclusion_margin) == (3, 6, 0)
    acceptance_log("4 fixture values", petersen_ok and k34_ok,
                   f"Petersen {'ok' if petersen_ok else 'MISMATCH'}, K3,4 {'ok' if k34_ok else 'MISMATCH'}")
    assert petersen_ok and k34_ok


def test_5_reduction_identities(acceptance_log):
    start = time.perf_counter()
    failures = 0
    cases = 0
    for delta in range(1, 13):
        for mu in range(1, (delta + 1) // 2 + 1):
            for n in range(1, 61):
                cases += 1
                failures += not check_reduction_identity(n, delta, mu)
        for lam in range((delta + 3) // 2, delta + 1):
            cases += 1
            failures += not check_reduction_identity_thm8(delta, lam, delta - lam + 2)
    seconds = time.perf_counter() - start
    acceptance_log("5 reduction identities", failures == 0 and seconds < 1,
                   f"{cases} cases, {failures} failures, {seconds * 1000:.0f} ms")
    assert failures == 0
    assert seconds < 1


def test_6_structural_implications(small_graphs, acceptance_log):
    failures = []
    cycles_checked = 0
    for g in small_graphs:
        c = circumference(g)
        cache = {}
        for t in range(1, c + 1):
            for cyc in cycles_of_order(g, t):
                cycles_checked += 1
                rest = g.vertex_mask & ~cyc.mask
                if rest not in cache:
                    cache[rest] = _residual_of_mask(g, rest)
                prof = cache[rest]
                tag = (to_graph6(g), cyc.vertices)
                if prof.c_bar > prof.p_bar:
                    failures.append((*tag, "c_bar > p_bar"))
                for lam in range(1, g.n + 1):
                    if prof.is_d(lam) and not prof.is_pd(lam) or prof.is_pd(lam) and not prof.is_cd(lam):
                        failures.append((*tag, f"chain at lambda={lam}"))
                hamilton = cyc.order == g.n
                if hamilton != prof.is_pd(1) or hamilton != prof.is_cd(1):
                    failures.append((*tag, "Hamilton"))
                dominating = is_independent(g, rest)
                if dominating != prof.is_pd(2) or dominating != prof.is_cd(2):
                    failures.append((*tag, "dominating"))
    acceptance_log("6 structural implications", not failures,
                   f"{cycles_checked} cycles over {len(small_graphs)} graphs, {len(failures)} failures")
    assert not failures, failures[:5]


def test_7_format_fidelity(small_graphs, acceptance_log):
    bad = [g for g in small_graphs if from_graph6(to_graph6(g)) != g or to_graph6(g) != oracles.graph6_encode(g)]
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 30)
        p = rng.random()
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if from_graph6(to_graph6(g)) != g or to_graph6(g) != oracles.graph6_encode(g):
            bad.append(g)
    reports = {
        w: scan(ScanJob(GeneratorSource(3, 7), PROVED + OPEN, workers=w)).to_json_lines()
        for w in (1, 4, 8)
    }
    deterministic = reports[1] == reports[4] == reports[8]
    acceptance_log("7 format fidelity", not bad and deterministic,
                   f"{len(small_graphs)} + 1000 round trips, {len(bad)} failures; "
                   f"reports identical across workers 1/4/8: {deterministic}")
    assert not bad
    assert deterministic


def test_graph_counts_for_acceptance_range():
    # the scan range really is every connected class
    assert [len(graphs_up_to(n, True, n_min=n)) for n in range(3, 8)] == [2, 6, 21, 112, 853]
