"""Acceptance criteria, one test each, at the stated tolerances.

Every test records a PASS/FAIL line (see the ``criterion`` fixture), and the
lines are repeated in the pytest terminal summary.
"""
import time

import pytest

import expected_triangle as ex
from greedysweep.cli_io import render_svg, trace_text
from greedysweep.exact_geom import Point, Q, shoelace_area
from greedysweep.generators import default_seed, gen_polygon
from greedysweep.greedy_driver import Config, HaltReason, OnWall, run
from greedysweep.jordan_curve import validate
from greedysweep.verify import check_invariants, compare_strategies, convergence_study, deficit, diameter_eps, oracle_agreement

TRIANGLE = [(0, 0), (6, 1), (2, 5)]
SEED = (3, 2)
STAR_SIZES = (8, 16, 32, 64)
STARS_PER_SIZE = 50
SPIRAL = ("spiral", 40, 7)
COMB = ("comb", 24, 0)


def corpus():
    for n in STAR_SIZES:
        for s in range(STARS_PER_SIZE):
            yield "star", n, s
    yield SPIRAL
    yield COMB


@pytest.fixture(scope="module")
def corpus_runs():
    """Greedy runs over the whole corpus with eps = diameter/1000."""
    start = time.perf_counter()
    out = []
    for kind, n, s in corpus():
        J = gen_polygon(kind, n, s)
        budget = 50 * len(J) + 200
        res = run(J, default_seed(kind, n, s), Config(eps=diameter_eps(J), max_steps=budget + 1))
        out.append(((kind, n, s), J, res, budget))
    return out, time.perf_counter() - start


def test_triangle_exact_trace(criterion):
    start = time.perf_counter()
    J = validate(TRIANGLE)
    res = run(J, Point.of(*SEED), Config(eps=Q("1/2")))
    elapsed = time.perf_counter() - start
    segs = [res.initial_sweep.t] + [r.t for r in res.trace]
    new = [next(w for w in r.walls_added if w.length != r.wall_used.length) for r in res.trace]
    checks = {
        "segments": [(t.y, t.x_lo, t.x_hi) for t in segs] == ex.SEGMENTS,
        "initial walls": {(w.x, w.length) for w in res.initial_walls} == ex.INITIAL_WALLS,
        "walls used": [r.wall_used.length for r in res.trace] == ex.WALLS_USED,
        "new walls": [(w.x, w.length) for w in new] == ex.NEW_WALLS,
        "halt": (res.sweep_count, res.halt_reason) == (5, HaltReason.EPSILON_REACHED),
        "runtime": elapsed < 1.0,
    }
    bad = [k for k, ok in checks.items() if not ok]
    assert criterion(not bad, f"{elapsed:.3f}s" if not bad else "mismatch: " + ", ".join(bad))


def test_exact_area_bookkeeping(criterion):
    J = validate(TRIANGLE)
    res = run(J, Point.of(*SEED), Config(eps=Q("1/2")))
    d = deficit(res, J)
    summed = shoelace_area(J.vertices) - sum((s.area for s in res.region.sweeps), Q(0))
    init = deficit(run(J, Point.of(*SEED), Config(max_steps=1)), J)
    ok = d == summed == ex.DEFICIT and Q("0.11") < d < Q("0.13") and init == Q("133/100")
    assert criterion(ok, f"deficit {d} ~ {float(d):.6f}; init-only {init}")


def test_invariant_suite(criterion, corpus_runs):
    runs, run_time = corpus_runs
    start = time.perf_counter()
    problems = []
    for key, J, res, budget in runs:
        if res.sweep_count > budget or res.halt_reason is HaltReason.MAX_STEPS:
            problems.append(f"{key}: {res.sweep_count} sweeps > {budget}")
            continue
        report = check_invariants(res, J)
        if not report.passed:
            problems.append(f"{key}: " + "; ".join(str(c) for c in report.failures()))
    total = run_time + time.perf_counter() - start
    ok = not problems and total < 300
    note = f"{len(runs)} runs, {total:.1f}s" if ok else f"{len(problems)} problem(s), first: {problems[:1]}, {total:.1f}s"
    assert criterion(ok, note)


def test_oracle_agreement(criterion, corpus_runs):
    runs, _ = corpus_runs
    bad = []
    hits = 0
    for key, J, res, _budget in runs:
        result = oracle_agreement(res, J, samples=10_000, seed=0)
        if not result.passed:
            bad.append((key, result.witness))
        hits += int(result.detail.split("/")[0])
    note = f"{len(runs)} runs x 10000 samples, {hits} claimed by regions, 0 exceptions" if not bad else f"exceptions: {bad[:3]}"
    assert criterion(not bad, note)


def test_convergence(criterion):
    J = validate(TRIANGLE)
    eps = [Q(1) / 2**k for k in range(1, 6)]
    rows = convergence_study(J, Point.of(*SEED), eps)
    decreasing = all(a.deficit > b.deficit for a, b in zip(rows, rows[1:]))
    ratios = [b.deficit / a.deficit for a, b in zip(rows, rows[1:])]
    in_band = all(Q("0.25") <= r <= Q("0.9") for r in ratios)
    below = all(r.max_wall_final is not None and r.max_wall_final < r.eps for r in rows)
    note = "ratios " + ", ".join(f"{float(r):.3f}" for r in ratios) + " vs band [0.25, 0.9]"
    assert criterion(decreasing and in_band and below, note)


def test_onwall_splice_exercised(criterion):
    kind, n, s = SPIRAL
    J = gen_polygon(kind, n, s)
    res = run(J, default_seed(kind, n, s), Config(eps=diameter_eps(J)))
    onwall = [r.step for r in res.trace if isinstance(r.terminus, OnWall)]
    events = [(r.step, r.cycle_event) for r in res.trace if r.cycle_event != "none"]
    split = next((k for k, e in events if e == "split"), None)
    merge_after = split is not None and any(e == "merge" and k > split for k, e in events)
    report = check_invariants(res, J)
    ok = bool(onwall) and merge_after and report.passed
    note = f"{res.sweep_count} sweeps, {len(onwall)} OnWall termini, cycle events {events or 'none'}, invariants {'pass' if report.passed else 'FAIL'}"
    assert criterion(ok, note)


def test_determinism(criterion):
    outputs = []
    for _ in range(2):
        got = []
        for kind, n, s in (SPIRAL, COMB, ("star", 32, 1)):
            J = gen_polygon(kind, n, s)
            res = run(J, default_seed(kind, n, s), Config(eps=diameter_eps(J)))
            got.append((trace_text(res).encode(), render_svg(res).encode()))
        J = validate(TRIANGLE)
        res = run(J, Point.of(*SEED), Config(eps=Q("1/2")))
        got.append((trace_text(res).encode(), render_svg(res).encode()))
        outputs.append(got)
    assert criterion(outputs[0] == outputs[1], "trace and SVG bytes identical across two runs")


def test_strategy_comparison(criterion):
    kind, n, s = COMB
    J = gen_polygon(kind, n, s)
    series = compare_strategies(J, default_seed(kind, n, s), ["greedy", "lifo"], 200)
    g, lifo = series["greedy"][-1].max_wall, series["lifo"][-1].max_wall
    ok = g is not None and lifo is not None and g <= lifo
    assert criterion(ok, f"greedy {float(g):.3g} <= lifo {float(lifo):.3g}")
