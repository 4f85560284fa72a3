"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line."""
import math
import random
import time
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES, as_oracle_guard, random_scene
from oracles import grid_decide, grid_formula_ok, grid_labels
from loclab.arrangement import (decide, decide_localizable, labeling_for, synthesize_dnf,
                                verify_localization)
from loclab.bounds import (cone_separation_max, contribution_formula, ledger, max_contribution_from,
                           min_separators, separator_threshold, vertex_guard_lower_bound)
from loclab.model import And, Key, Or, evaluate_formula, general_position_report
from loclab.placements import general_solution, min_vertex_guards, vertex_solution
from loclab.spike import SpikeParams, build_spike_polygon, metric_violations, spike_edges

def record(n, ok, detail, elapsed, limit):
    ok = ok and elapsed < limit
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} ({elapsed:.2f}s, limit {limit}s)")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail

def test_criterion_1_contribution_formula():
    t0 = time.perf_counter()
    sp = build_spike_polygon(SpikeParams(4, 40, 2, 1))
    ok = True
    for i in (2, 3):
        value, ray = max_contribution_from(sp.l(i), sp, i)
        ok &= cone_separation_max(sp, i) == value == F(5, 41) == contribution_formula(2, 1, 40)
        ok &= ray.dir.same_way(sp.t(i + 1) - sp.l(i))
    record(1, ok, "coneSeparationMax = 5/41 exactly on i=2,3 via t_{i+1}l_i", time.perf_counter() - t0, 1)

def test_criterion_2_separator_bound():
    t0 = time.perf_counter()
    ok = True
    for n in (12, 18, 24):
        sp = build_spike_polygon(SpikeParams.reference_instance(n // 3))
        thr = separator_threshold(sp, 2)
        k = min_separators(sp, 2)
        ok &= thr == F(2 * n, 3) + F(1, 5)
        ok &= k == math.ceil(F(2 * n, 3)) + 1 and k > F(2 * n, 3)
    record(2, ok, "threshold = 2n/3 + 1/5 and k > 2n/3 for n = 12, 18, 24", time.perf_counter() - t0, 1)

def test_criterion_3_ledger_constancy():
    t0 = time.perf_counter()
    ok = True
    for n in range(6, 61, 3):
        ok &= all(ledger(n, n0) == F(2 * n, 3) - 1 for n0 in range(1, n // 3 + 1))
        ok &= vertex_guard_lower_bound(n) == (2 * n) // 3 - 1
    record(3, ok, "ledger(n, n0) = 2n/3 - 1 for n = 6..60", time.perf_counter() - t0, 1)

GRID_20 = [(m, w, h, d) for m in (2, 3, 4, 6) for (w, h, d) in
           ((40, 2, 1), (10, 3, F(1, 3)), (F(7, 2), 3, F(5, 2)), (100, F(1, 2), F(1, 7)), (25, 5, 4))]

def test_criterion_4_construction_validity():
    t0 = time.perf_counter()
    bad = []
    for params in GRID_20:
        sp = build_spike_polygon(SpikeParams(*params))       # simplicity is checked on construction
        if metric_violations(sp) or not general_position_report(sp.polygon, spike_edges(sp)).ok:
            bad.append(params)
    record(4, len(GRID_20) == 20 and not bad, f"{len(GRID_20)} parameter points, {len(bad)} failing",
           time.perf_counter() - t0, 10)

def _formulas(keys, rng):
    """A few fixed-shape formulas on the scene's keys."""
    if not keys:
        return []
    out = [Or(tuple(Key(k) for k in keys)) if len(keys) > 1 else Key(keys[0])]
    if len(keys) > 1:
        out.append(And(tuple(Key(k) for k in keys)))
        a, b = rng.sample(keys, 2)
        out.append(Or((Key(a), And(tuple(Key(k) for k in keys if k != a)))))
        out.append(And((Key(b), Or(tuple(Key(k) for k in keys if k != b)))))
    return out

def test_criterion_5_oracle_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    scenes, mismatches, verified = 0, [], 0
    for seed in range(120):
        P, guards = random_scene(random.Random(seed), extent=6)
        lab = labeling_for(P, guards)
        keys_m, inside = grid_labels([(v.x, v.y) for v in P.vertices], [as_oracle_guard(g) for g in guards],
                                     [ln.key for ln in lab.lines], -7, 13, 16)
        names = [g.key for g in guards]
        verdict = decide_localizable(P, guards)
        if verdict.ok != grid_decide(keys_m, inside):
            mismatches.append((seed, "decide"))
        formulas = _formulas(names, rng)
        if verdict.ok:
            formulas.append(synthesize_dnf(lab))
        for f in formulas:
            exact = verify_localization(P, guards, f).ok
            sampled = grid_formula_ok(keys_m, inside,
                                      lambda row: evaluate_formula(f, {k for k, b in zip(names, row) if b}))
            verified += 1
            if exact != sampled:
                mismatches.append((seed, "verify"))
        scenes += 1
    record(5, scenes >= 100 and not mismatches,
           f"{scenes} scenes, {verified} formula checks, {len(mismatches)} discrepancies {mismatches[:3]}",
           time.perf_counter() - t0, 60)

def test_criterion_6_vertex_solution():
    t0 = time.perf_counter()
    ok, sizes = True, []
    for m in (2, 3, 4):
        sp = build_spike_polygon(SpikeParams(m, 40, 2, 1))
        sol = vertex_solution(sp)
        n = 3 * m
        ok &= verify_localization(sp.polygon, sol.guards, sol.formula).ok
        ok &= all(g.apex in sp.polygon.vertices for g in sol.guards)
        ok &= (2 * n) // 3 - 1 <= sol.size <= F(2 * n, 3)
        sizes.append(sol.size)
    record(6, ok, f"vertexSolution verifies for m = 2, 3, 4 with sizes {sizes}", time.perf_counter() - t0, 60)

def test_criterion_7_general_vs_vertex():
    t0 = time.perf_counter()
    sp = build_spike_polygon(SpikeParams(6, 40, 2, 1))
    sol = general_solution(sp)
    ok = verify_localization(sp.polygon, sol.guards, sol.formula).ok
    bound = vertex_guard_lower_bound(18)
    ok &= sol.size <= 10 and sol.size < bound == 11
    record(7, ok, f"generalSolution m=6 uses {sol.size} guards < vertex bound {bound}",
           time.perf_counter() - t0, 300)

def test_criterion_8_search():
    t0 = time.perf_counter()
    sp = build_spike_polygon(SpikeParams(2, 40, 2, 1))
    low = min_vertex_guards(sp.polygon, 2)
    ok = low.exhaustive and low.infeasible_sizes == [1, 2] and low.best_found is None
    high = min_vertex_guards(sp.polygon, 4)
    found = high.best_found
    ok &= found is not None and found.size in (3, 4)
    ok &= found is not None and verify_localization(sp.polygon, found.guards, found.formula).ok
    record(8, ok, f"m=2: sizes {low.infeasible_sizes} infeasible over {low.candidate_count} canonical "
                  f"candidates, size {found.size if found else None} found at kmax=4",
           time.perf_counter() - t0, 1800)

def _localizable_scenes():
    """The scenes of criteria 5-8 rebuilt, so this check does not depend on test order."""
    scenes = [(P, g) for P, g in (random_scene(random.Random(seed), extent=6) for seed in range(120))]
    for m in (2, 3, 4):
        sp = build_spike_polygon(SpikeParams(m, 40, 2, 1))
        scenes.append((sp.polygon, vertex_solution(sp).guards))
    sp6 = build_spike_polygon(SpikeParams(6, 40, 2, 1))
    scenes.append((sp6.polygon, general_solution(sp6).guards))
    sp2 = build_spike_polygon(SpikeParams(2, 40, 2, 1))
    scenes.append((sp2.polygon, min_vertex_guards(sp2.polygon, 4).best_found.guards))
    return scenes

def test_criterion_9_dnf_soundness():
    t0 = time.perf_counter()
    checked = failures = 0
    for P, guards in _localizable_scenes():
        lab = labeling_for(P, guards)
        if not decide(lab).ok:
            continue
        checked += 1
        failures += not verify_localization(P, guards, synthesize_dnf(lab)).ok
    record(9, checked > 0 and failures == 0, f"{checked} localizable scenes, {failures} synthesis failures",
           time.perf_counter() - t0, 300)
