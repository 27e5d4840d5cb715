"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

All numerical comparisons are exact (integers and fractions); the only
tolerances are the wall-clock limits pinned below.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from oracles import charpoly_signature
from pinchband.cobordism import cobordism_sigma, verify_certificate
from pinchband.diagram import mirror, random_diagram, table_diagram, torus_2n_diagram
from pinchband.goeritz import checkerboard, goeritz_matrix, knot_signature, matrix_signature
from pinchband.realizability import (
    SEEDS,
    Verdict,
    grid,
    minimal_points,
    stabilize_closure,
    status_allen,
    status_post,
)
from pinchband.search import SearchOptions, default_battery, find_paper_certificates, pinch_search
from pinchband.table import names

LIMIT_SIGNATURES_S = 5.0
LIMIT_DEMO_S = 5.0
LIMIT_CLASSIFIER_S = 1.0
LIMIT_KERNEL_S = 10.0
LIMIT_SEARCH_S = 30.0
LIMIT_BATTERY_S = 60.0


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, elapsed=None):
        timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2}: {'PASS' if ok else 'FAIL'} {detail}{timing}")
        assert ok, detail

    return emit


def test_criterion_01_signature_golden(report):
    t = time.perf_counter()
    got = {n: knot_signature(torus_2n_diagram(n)).sigma for n in (3, 5, 7, 9, 11)}
    six_one = knot_signature(table_diagram("6_1"))
    elapsed = time.perf_counter() - t
    ok = (
        all(got[n] == -(n - 1) for n in got)
        and got[5] == -4
        and got[9] == -8
        and (six_one.sigma, six_one.determinant) == (0, 9)
        and elapsed < LIMIT_SIGNATURES_S
    )
    report(1, ok, f"sigma(T(2,n)) = {got}, 6_1 sigma={six_one.sigma} det={six_one.determinant}", elapsed)


def test_criterion_02_lemma_arithmetic(report):
    a = cobordism_sigma(0, -4, 0, 6)
    b = cobordism_sigma(0, -8, -5, 9)
    ok = a == Fraction(-1) and b == Fraction(-1) and isinstance(a, Fraction)
    report(2, ok, f"cobordism_sigma(0,-4,0,6) = {a}, cobordism_sigma(0,-8,-5,9) = {b}")


def test_criterion_03_demo_bands(report):
    t = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pinchband", "demo", "paper", "--format", "json"],
        capture_output=True,
        text=True,
    )
    elapsed = time.perf_counter() - t
    data = json.loads(proc.stdout)
    ledgers = {led["boundary"]: led for led in data["ledgers"]}
    ok = proc.returncode == 0 and elapsed < LIMIT_DEMO_S
    for name, pair in (("T(2,5)", [-6, 1]), ("T(2,9)", [-14, 1])):
        led = ledgers[name]
        ok = ok and led["pair"] == pair and led["sigma_cover"] == -1 and led["betti1"] == 1
        ok = ok and not led["orientable"] and led["negative_definite"]
    pairs = {k: v["pair"] for k, v in ledgers.items()}
    report(3, ok, f"demo paper exit {proc.returncode}, pairs {pairs}", elapsed)


def _unknown(n, post):
    rows = grid(n, (-12, 4), (0, 6), post)
    return {(e, h) for _, e, h, st in rows if st.verdict is Verdict.UNKNOWN}


def test_criterion_04_classifier_exactness(report):
    t = time.perf_counter()
    u5, u7 = _unknown(5, False), _unknown(7, False)
    p5, p7 = _unknown(5, True), _unknown(7, True)
    elapsed = time.perf_counter() - t
    ok = (
        u5 == {(-6, 1), (-4, 2), (-2, 3), (0, 4)}
        and u7 == {(-6, 3), (-4, 4), (-2, 5), (0, 6)}
        and p5 == set()
        and p7 == set()
        and elapsed < LIMIT_CLASSIFIER_S
    )
    report(4, ok, f"n=5 unknown {sorted(u5)}, n=7 unknown {sorted(u7)}, post {len(p5) + len(p7)}", elapsed)


def test_criterion_05_closure_agreement(report):
    closure = set(stabilize_closure(SEEDS, 15, 20))
    ok = True
    sizes = {}
    for n in range(5, 16, 2):
        cells = [(n, e, h) for e in range(-4 * n - 4, 4 * n + 5) for h in range(21)]
        unknown = {p for p in cells if status_allen(*p).verdict is Verdict.UNKNOWN}
        upgraded = {p for p in unknown if status_post(*p).verdict is Verdict.REALIZABLE}
        mine = {p for p in closure if p[0] == n}
        ok = ok and (mine & unknown) == upgraded
        # the rest of the closure was realizable already
        ok = ok and all(status_allen(*p).verdict is Verdict.REALIZABLE for p in mine - unknown)
        sizes[n] = len(upgraded)
    spot_a = status_post(13, -14, 5).verdict is Verdict.REALIZABLE
    spot_b = status_post(13, -22, 1).verdict is Verdict.UNKNOWN
    ok = ok and spot_a and spot_b
    report(5, ok, f"upgraded per n {sizes}, (13,-14,5) R={spot_a}, (13,-22,1) U={spot_b}")


def test_criterion_06_minimal_points(report):
    m5 = minimal_points(5, post=True)
    m9 = minimal_points(9, post=True)
    ok = (
        set(m5.minimal_points) == {-10, -6}
        and set(m9.minimal_points) == {-18, -14}
        and len(m5.minimal_points) == len(m9.minimal_points) == 2
        and m5.gamma4 == m9.gamma4 == 1
    )
    report(6, ok, f"n=5 {list(m5.minimal_points)}, n=9 {list(m9.minimal_points)} at h=1")


def test_criterion_07_signature_kernel(report):
    rng = random.Random(7)
    t = time.perf_counter()
    agree = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-5, 5)
        agree += matrix_signature(m) == charpoly_signature(m)
    elapsed = time.perf_counter() - t
    report(7, agree == 500 and elapsed < LIMIT_KERNEL_S, f"{agree}/500 agree with the charpoly oracle", elapsed)


def test_criterion_08_coloring_and_mirror(report):
    rng = random.Random(8)
    diagrams = [table_diagram(n) for n in names()]
    diagrams += [random_diagram(rng, max_crossings=10) for _ in range(200)]
    assert all(len(d) <= 10 for d in diagrams[len(names()):])
    passed = 0
    for d in diagrams:
        per = []
        for c in checkerboard(d):
            g = goeritz_matrix(d, c)
            per.append(g.signature - g.correction)
        sig = knot_signature(d).sigma
        passed += per[0] == per[1] == sig and knot_signature(mirror(d)).sigma == -sig
    report(8, passed == len(diagrams), f"{passed}/{len(diagrams)} diagrams pass")


def test_criterion_09_search_smoke(report):
    opts = SearchOptions(max_routing_length=0, target_knot="unknot")
    t = time.perf_counter()
    first = pinch_search(torus_2n_diagram(5), opts)
    second = pinch_search(torus_2n_diagram(5), opts)
    elapsed = time.perf_counter() - t
    same = [c.to_json() for c in first] == [c.to_json() for c in second]
    verified = all(verify_certificate(c).ok for c in first)
    ok = len(first) >= 1 and verified and same and elapsed < LIMIT_SEARCH_S
    report(9, ok, f"{len(first)} certificates, all verified={verified}, deterministic={same}", elapsed)


def test_criterion_10_certificate_invariants(report):
    t = time.perf_counter()
    wide = find_paper_certificates(SearchOptions(max_routing_length=0), battery=default_battery())
    deep = find_paper_certificates(
        SearchOptions(max_routing_length=2),
        battery=[("T(2,5) standard", torus_2n_diagram(5))],
    )
    elapsed = time.perf_counter() - t
    ok = elapsed < LIMIT_BATTERY_S
    checked = 0
    statuses = {}
    for rep, label in ((wide, "routing<=0"), (deep, "routing<=2")):
        for goal, hits in rep["found"].items():
            summary = rep["summary"][goal]
            ok = ok and summary["status"] in ("found", "not found within budget")
            ok = ok and (summary["status"] == "found") == (summary["negative_definite"] > 0)
            statuses[f"{goal} {label}"] = summary["status"]
            for h in hits:
                c = h["certificate"]
                value = cobordism_sigma(c["sigma_before"], c["sigma_after"], c["writhe_before"], c["writhe_after"])
                ok = ok and value.denominator == 1 and abs(value) <= 1
                ok = ok and value == c["sigma_cover_cobordism"]
                checked += 1
    # certificates from the runs themselves, rebuilt and verified
    for _, d in default_battery()[:2]:
        for cert in pinch_search(d, SearchOptions()).certificates:
            ok = ok and cert.b2_cover == 1 and abs(cert.sigma_cover_cobordism) <= 1
            ok = ok and verify_certificate(cert).ok
            checked += 1
    report(10, ok and checked > 0, f"{checked} certificates checked; {statuses}", elapsed)
