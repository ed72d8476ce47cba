"""Acceptance criteria 1-11, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line; the lines are
also collected into the terminal summary.  Run ``python tests/test_acceptance.py``
to get just the lines.
"""

from __future__ import annotations

import itertools
import random
import statistics
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from legcat.braid import parse_braid
from legcat.category import Category, SheafObject, euler_characteristic, graded_hom
from legcat.exactlin import PrimeField
from legcat.goldens import HOPF as HOPF_GOLDEN, TREFOIL as TREFOIL_GOLDEN, check_example
from legcat.invariants import (
    associativity_records,
    endo_ring,
    knot_dimension_check,
    closure_records,
    random_braid,
    random_point,
    representative_records,
    surface_ring_isomorphic,
    unit_records,
    verify_torus,
)
from legcat.variety import enumerate_variety

from conftest import ACCEPTANCE_LINES

F2 = PrimeField(2)
HOPF = parse_braid("n=3; w=1,2,1")
TREFOIL = parse_braid("n=3; w=1,2,1,2")
TREFOIL2 = parse_braid("n=2; w=1,1,1")


def report(n: int, ok: bool, detail: str) -> bool:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


def timed(fn, repeats: int = 5):
    """Result of ``fn`` and its median wall time in milliseconds."""
    times, out = [], None
    for _ in range(repeats):
        t = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t) * 1000)
    return out, statistics.median(times)


def _records(rep, *checks):
    return [r for r in rep.records if r.check in checks]


def criterion_1():
    pts, ms = timed(lambda: enumerate_variety(F2, HOPF))
    ok = pts == [(0, 1, 0), (0, 1, 1), (1, 1, 0)] and ms < 10
    return report(1, ok, f"Hopf variety over Z/2 = {pts} in {ms:.2f} ms (< 10 ms)")


def criterion_2():
    pts, ms = timed(lambda: enumerate_variety(F2, TREFOIL))
    want = [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 0, 1)]
    ok = pts == want and ms < 10
    return report(2, ok, f"trefoil variety over Z/2 has {len(pts)} points, exact={pts == want}, {ms:.2f} ms (< 10 ms)")


def criterion_3():
    rep, ms = timed(lambda: check_example(HOPF_GOLDEN))
    recs = _records(rep, "points", "dims", "ext0-basis", "ext1-generators")
    bad = [r.subject + ":" + r.check for r in recs if not r.passed]
    ok = not bad and ms < 100
    return report(3, ok, f"Hopf dims/bases/generators: {len(recs) - len(bad)}/{len(recs)} match, {ms:.1f} ms (< 100 ms) {bad or ''}")


def criterion_4():
    def run():
        cat = Category(F2, TREFOIL, enumerate_variety(F2, TREFOIL))
        return [[cat.hom(i, j).dims for j in range(5)] for i in range(5)]

    dims, ms = timed(run)
    ok_dims = all(dims[i][j] == ((1, 2) if i == j else (0, 1)) for i in range(5) for j in range(5))
    ok = ok_dims and ms < 200
    return report(4, ok, f"trefoil 25 pairs: diagonal (1,2), off-diagonal (0,1) = {ok_dims}, {ms:.1f} ms (< 200 ms)")


def criterion_5():
    rows = []
    for ex in (HOPF_GOLDEN, TREFOIL_GOLDEN):
        rows += _records(check_example(ex), "composition")
    bad = [r.subject for r in rows if not r.passed]
    return report(5, not bad, f"composition rows reproduced: {len(rows) - len(bad)}/{len(rows)}; mismatched: {bad}")


def criterion_6():
    rng = random.Random(6)
    t = time.perf_counter()
    failures = 0
    for _ in range(200):
        K = PrimeField(rng.choice([2, 3, 5]))
        w = random_braid(rng, max_n=4, max_len=8)
        x, y = random_point(K, w, rng), random_point(K, w, rng)
        H = graded_hom(SheafObject(w, x, K), SheafObject(w, y, K))
        failures += euler_characteristic(H) != w.n - w.length
    s = time.perf_counter() - t
    return report(6, failures == 0 and s < 30, f"200 random instances, {failures} Euler failures, {s:.2f} s (< 30 s)")


def _random_triple_categories(count: int, seed: int):
    rng = random.Random(seed)
    for s in range(count):
        K = PrimeField(3 if s % 2 == 0 else 5)
        w = random_braid(rng, max_n=4, max_len=6)
        pts = [random_point(K, w, rng) for _ in range(3)]
        yield Category(K, w, pts), rng


def _example_categories():
    for w in (HOPF, TREFOIL):
        pts = enumerate_variety(F2, w)
        yield Category(F2, w, pts), list(itertools.product(range(len(pts)), repeat=3))


def criterion_7():
    recs = []
    rng = random.Random(7)
    for cat, triples in _example_categories():
        for i, j, k in triples:
            recs += closure_records(cat, i, j, k)
            recs += representative_records(cat, i, j, k, rng)
    for cat, r in _random_triple_categories(100, 70):
        recs += closure_records(cat, 0, 1, 2)
        recs += representative_records(cat, 0, 1, 2, r)
    bad = [f"{r.check} {r.subject}" for r in recs if not r.passed]
    return report(7, not bad, f"closure + representative independence: {len(recs)} checks, {len(bad)} failures {bad[:3] or ''}")


def criterion_8():
    recs = []
    for cat, triples in _example_categories():
        for i, j, k in triples:
            recs += associativity_records(cat, i, j, k, i)
        for i, j in itertools.product(range(len(cat)), repeat=2):
            recs += unit_records(cat, i, j)
    for cat, _ in _random_triple_categories(100, 80):
        recs += unit_records(cat, 0, 1) + unit_records(cat, 1, 2)
        recs += associativity_records(cat, 0, 1, 2, 0)
    bad = [f"{r.check} {r.subject}" for r in recs if not r.passed]
    return report(8, not bad, f"unit + associativity (total degree <= 1): {len(recs)} checks, {len(bad)} failures {bad[:3] or ''}")


def criterion_9():
    t = time.perf_counter()
    reps = [verify_torus(PrimeField(p), TREFOIL2) for p in (2, 3, 5)]
    reps.append(verify_torus(F2, TREFOIL))
    reps += [knot_dimension_check(F2, TREFOIL), knot_dimension_check(F2, TREFOIL2)]
    s = time.perf_counter() - t
    n = sum(len(r.records) for r in reps)
    bad = [f"{r.name}:{f.check} {f.subject}" for r in reps for f in r.failures]
    return report(9, not bad and s < 10, f"torus laws, freeness, slice bijection, knot dims: {n} checks, {len(bad)} failures, {s:.2f} s (< 10 s)")


def criterion_10():
    cat = Category(F2, TREFOIL, enumerate_variety(F2, TREFOIL))
    checks = [surface_ring_isomorphic(endo_ring(cat.hom(i, i))) for i in range(5)]
    tre_ok = all(c.isomorphic and c.genus == 1 for c in checks)
    hopf = Category(F2, HOPF, enumerate_variety(F2, HOPF))
    h = surface_ring_isomorphic(endo_ring(hopf.hom(0, 0)))
    hopf_ok = not h.isomorphic and h.obstruction == "d0" and h.detail.get("d0") == 2
    return report(10, tre_ok and hopf_ok, f"trefoil F1..F5 genus-1 surface rings = {tre_ok}; Hopf F1 obstruction {h.obstruction}={h.detail.get('d0')}")


def criterion_11():
    a, b = enumerate_variety(F2, TREFOIL2), enumerate_variety(F2, TREFOIL)
    ca, cb = Category(F2, TREFOIL2, a), Category(F2, TREFOIL, b)
    ma = Counter(ca.hom(i, j).dims for i in range(len(a)) for j in range(len(a)))
    mb = Counter(cb.hom(i, j).dims for i in range(len(b)) for j in range(len(b)))
    ok = len(a) == len(b) == 5 and ma == mb
    return report(11, ok, f"|X(s1^3)| = {len(a)}, |X(s1s2s1s2)| = {len(b)}; dims multisets equal = {ma == mb}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def test_criterion_01_hopf_variety():
    assert criterion_1()


def test_criterion_02_trefoil_variety():
    assert criterion_2()


def test_criterion_03_hopf_hom_tables():
    assert criterion_3()


def test_criterion_04_trefoil_hom_tables():
    assert criterion_4()


def test_criterion_05_composition_goldens():
    assert criterion_5()


def test_criterion_06_euler_characteristic():
    assert criterion_6()


def test_criterion_07_well_definedness():
    assert criterion_7()


def test_criterion_08_category_laws():
    assert criterion_8()


def test_criterion_09_torus_and_knot():
    assert criterion_9()


def test_criterion_10_endomorphism_rings():
    assert criterion_10()


def test_criterion_11_cross_presentation():
    assert criterion_11()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
