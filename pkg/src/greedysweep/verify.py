"""Independent audits of a finished run.

Every check recomputes its answer from the polygon and the run's public
record (trace, cycles, walls, sweeps) with exact predicates, so a failure
points at the engine and not at shared helper code.  Each check stops at its
first offence and keeps it as a witness.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Sequence

from gmpy2 import mpq

from .exact_geom import Edge, Point, Q, Scalar, edge_x_at_y, edge_y_at_x, orient, shoelace_area
from .greedy_driver import Config, HaltReason, RunResult, run
from .horizontal_sweep import Arc, WallRun
from .jordan_curve import GeometryError, Location, Polygon, classify, open_segment
from .swept_region import wall_order_key

__all__ = [
    "SeedNotInside",
    "CheckResult",
    "Report",
    "ConvergenceRow",
    "SeriesPoint",
    "check_invariants",
    "oracle_agreement",
    "sample_points",
    "deficit",
    "convergence_study",
    "compare_strategies",
    "parse_strategy",
    "diameter_eps",
]

CHECKS = (
    "walls_on_curve",
    "cycle_closure",
    "wall_index_consistency",
    "greedy_dominance",
    "area_monotonicity",
    "chord_saturation",
    "extension_disjointness",
    "midpoint_exactness",
    "recursion_tree",
    "halt_condition",
)


class SeedNotInside(GeometryError):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status}{tail}"


@dataclass
class Report:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def add(self, result: CheckResult) -> None:
        self.checks[result.name] = result

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks.values() if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        return self.checks[name]

    def __str__(self) -> str:
        lines = [str(c) for c in self.checks.values()]
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)


def _ok(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, True, None, detail)


def _fail(name: str, witness, detail: str) -> CheckResult:
    return CheckResult(name, False, witness, detail)


# -- sampling --------------------------------------------------------------

def _radical_inverse(i: int, base: int) -> Scalar:
    num, den = 0, 1
    while i:
        i, d = divmod(i, base)
        num = num * base + d
        den *= base
    return mpq(num, den)


def sample_points(J: Polygon, count: int, seed: int = 0) -> Iterator[Point]:
    """Halton points (bases 2 and 3) over the bounding box, as exact rationals.

    ``seed`` shifts the starting index, so different seeds give disjoint
    stretches of the same low-discrepancy sequence.
    """
    b = J.bbox
    w, h = b.x_max - b.x_min, b.y_max - b.y_min
    start = 1 + seed * 1_000_003
    for i in range(start, start + count):
        yield Point(b.x_min + w * _radical_inverse(i, 2), b.y_min + h * _radical_inverse(i, 3))


# -- individual checks -----------------------------------------------------

def _all_walls(res: RunResult):
    seen = {}
    for w in res.initial_walls:
        seen[w.id] = w
    for rec in res.trace:
        for w in rec.walls_added:
            seen[w.id] = w
    for w in res.region.walls.values():
        seen[w.id] = w
    return [seen[k] for k in sorted(seen)]


def _check_walls_on_curve(res: RunResult, J: Polygon) -> CheckResult:
    name = "walls_on_curve"
    walls = _all_walls(res)
    for w in walls:
        s = w.seg
        if s.length <= 0:
            return _fail(name, w, f"wall {w.id} has non-positive length")
        for end in (s.lo, s.hi):
            if classify(J, end) is not Location.ON:
                return _fail(name, w, f"wall {w.id} endpoint ({end.x}, {end.y}) is not on the curve")
        for i, e in enumerate(J.edges):
            y = edge_y_at_x(e, s.x)
            if y is not None and s.y_lo < y < s.y_hi:
                return _fail(name, w, f"wall {w.id} interior meets edge {i}")
    return _ok(name, f"{len(walls)} walls")


def _on_edge(e: Edge, p: Point) -> bool:
    lo, hi = e.x_range
    return lo <= p.x <= hi and orient(e.a, e.b, p) == 0


def _check_cycle_closure(res: RunResult, J: Polygon) -> CheckResult:
    name = "cycle_closure"
    n = len(J)
    for cid, cyc in res.region.cycles.items():
        pieces = cyc.pieces
        if not pieces:
            return _fail(name, cid, f"cycle {cid} is empty")
        for k, p in enumerate(pieces):
            q = pieces[(k + 1) % len(pieces)]
            if p.end != q.start:
                return _fail(name, (cid, k), f"cycle {cid} breaks between pieces {k} and {k + 1}")
            if isinstance(p, WallRun) and isinstance(q, WallRun) and len(pieces) > 1:
                return _fail(name, (cid, k), f"cycle {cid} has adjacent walls at piece {k}")
            if isinstance(p, Arc):
                for a in p.points:
                    e = J.edges[a.edge_index]
                    if a.point != Point(e.a.x + a.t * (e.b.x - e.a.x), e.a.y + a.t * (e.b.y - e.a.y)):
                        return _fail(name, (cid, k), f"cycle {cid} arc {k} has a misplaced curve address")
                for a, b in zip(p.points, p.points[1:]):
                    cands = {a.edge_index, (a.edge_index - 1) % n, b.edge_index, (b.edge_index - 1) % n}
                    if not any(_on_edge(J.edges[i], a.point) and _on_edge(J.edges[i], b.point) for i in cands):
                        return _fail(name, (cid, k), f"cycle {cid} arc {k} leaves the curve")
    return _ok(name, f"{len(res.region.cycles)} cycle(s)")


def _check_wall_index(res: RunResult) -> CheckResult:
    name = "wall_index_consistency"
    r = res.region
    on_cycles: dict[tuple, int] = {}
    for cid, cyc in r.cycles.items():
        for seg in cyc.walls():
            if seg.key in on_cycles:
                return _fail(name, seg.key, f"wall at x={seg.x} appears on the boundary twice")
            on_cycles[seg.key] = cid
    if set(on_cycles) != set(r.walls):
        extra = set(on_cycles) ^ set(r.walls)
        return _fail(name, sorted(extra)[0], f"{len(extra)} wall(s) differ between cycles and index")
    for key, w in r.walls.items():
        if w.seg.key != key:
            return _fail(name, w, f"wall {w.id} is filed under a stale key")
        if w.cycle_id != on_cycles[key]:
            return _fail(name, w, f"wall {w.id} names cycle {w.cycle_id} but sits on {on_cycles[key]}")
    # replay the trace's wall bookkeeping from the initial sweep
    live = {w.id for w in res.initial_walls}
    for rec in res.trace:
        for w in rec.walls_removed:
            if w.id not in live:
                return _fail(name, rec.step, f"step {rec.step} removes wall {w.id} that was not open")
            live.discard(w.id)
        live.update(w.id for w in rec.walls_added)
    if live != {w.id for w in r.walls.values()}:
        return _fail(name, None, "replayed wall set differs from the final index")
    top = r.max_wall()
    best = min(r.walls.values(), key=wall_order_key, default=None)
    if top is not best:
        return _fail(name, top, "max_wall disagrees with a full scan")
    return _ok(name, f"{len(r.walls)} open walls")


def _check_dominance(res: RunResult) -> CheckResult:
    name = "greedy_dominance"
    if res.config.strategy != "greedy":
        return _ok(name, f"not applicable to strategy {res.config.strategy}")
    present = {w.id: w for w in res.initial_walls}
    for rec in res.trace:
        if rec.wall_used.id not in present:
            return _fail(name, rec.step, f"step {rec.step} extends wall {rec.wall_used.id}, which is not open")
        longest = max(w.length for w in present.values())
        if rec.wall_used.length < longest:
            return _fail(name, rec.step, f"step {rec.step} used length {rec.wall_used.length} < {longest}")
        for w in rec.walls_removed:
            present.pop(w.id, None)
        present.update((w.id, w) for w in rec.walls_added)
    return _ok(name, f"{len(res.trace)} steps")


def _check_area(res: RunResult, J: Polygon) -> CheckResult:
    name = "area_monotonicity"
    sweeps = res.region.sweeps
    prev = res.initial_sweep.area
    for rec in res.trace:
        if not rec.area_after > prev:
            return _fail(name, rec.step, f"area did not grow at step {rec.step}")
        if not 1 <= rec.step <= len(sweeps) or rec.area_after - prev != sweeps[rec.step - 1].area:
            return _fail(name, rec.step, f"area increment at step {rec.step} differs from the sweep area")
        prev = rec.area_after
    total = sum((s.area for s in sweeps), Scalar(0))
    if res.region.area != total or (res.trace and prev != total):
        return _fail(name, None, "region area differs from the sum of sweep areas")
    if total > shoelace_area(J.vertices):
        return _fail(name, None, "swept area exceeds the polygon area")
    return _ok(name, f"area {total}")


def _check_saturation(res: RunResult, J: Polygon, points: int = 100, per_chord: int = 8) -> CheckResult:
    name = "chord_saturation"
    r = res.region
    found = 0
    for p in sample_points(J, 200 * points, seed=7):
        if found >= points:
            break
        if not r.contains(p):
            continue
        found += 1
        s = open_segment(J, p)
        for k in range(1, per_chord + 1):
            q = Point(s.x, s.y_lo + s.length * k / (per_chord + 1))
            if not r.contains(q):
                return _fail(name, q, f"chord through ({p.x}, {p.y}) is not fully swept")
    return _ok(name, f"{found} chords")


def _check_extensions(res: RunResult, J: Polygon, per_segment: int = 16) -> CheckResult:
    name = "extension_disjointness"
    r = res.region
    for rec in res.trace:
        t = rec.t
        for i, e in enumerate(J.edges):
            x = edge_x_at_y(e, t.y)
            if x is not None and t.x_lo < x < t.x_hi:
                return _fail(name, rec.step, f"extension of step {rec.step} crosses edge {i}")
        for k in range(1, per_segment + 1):
            p = Point(t.x_lo + t.length * k / (per_segment + 1), t.y)
            if classify(J, p) is not Location.INSIDE:
                return _fail(name, rec.step, f"extension of step {rec.step} leaves the face at ({p.x}, {p.y})")
            if r.contains_before(p, rec.step):
                return _fail(name, rec.step, f"extension of step {rec.step} re-enters the region at ({p.x}, {p.y})")
    return _ok(name, f"{len(res.trace)} extensions")


def _check_midpoints(res: RunResult) -> CheckResult:
    name = "midpoint_exactness"
    for rec in res.trace:
        s = rec.wall_used.seg
        if rec.midpoint != Point(s.x, (s.y_lo + s.y_hi) / 2) or rec.t.y != rec.midpoint.y:
            return _fail(name, rec.step, f"step {rec.step} did not start at the wall midpoint")
    return _ok(name)


def _check_tree(res: RunResult) -> CheckResult:
    name = "recursion_tree"
    if len(res.tree) != res.sweep_count:
        return _fail(name, None, f"tree has {len(res.tree)} nodes for {res.sweep_count} sweeps")
    for rec in res.trace:
        if not rec.parent_step < rec.step:
            return _fail(name, rec.step, f"step {rec.step} has parent {rec.parent_step}")
    return _ok(name)


def _check_halt(res: RunResult) -> CheckResult:
    name = "halt_condition"
    r, cfg = res.region, res.config
    top = r.max_wall()
    if res.halt_reason is HaltReason.EMPTY_WALL_SET and r.walls:
        return _fail(name, None, "halted on an empty wall set while walls remain")
    if res.halt_reason is HaltReason.EPSILON_REACHED and not (top is not None and top.length < cfg.eps):
        return _fail(name, top, "halted on eps while a wall is at least eps long")
    if res.halt_reason is HaltReason.MAX_STEPS and res.sweep_count != cfg.max_steps:
        return _fail(name, None, f"halted on the step cap after {res.sweep_count} sweeps")
    return _ok(name, res.halt_reason.value)


def oracle_agreement(res: RunResult, J: Polygon, samples: int = 10_000, seed: int = 0) -> CheckResult:
    """Every sampled point the region claims must be inside the polygon."""
    name = "oracle_agreement"
    hits = 0
    for p in sample_points(J, samples, seed):
        if res.region.contains(p):
            hits += 1
            if classify(J, p) is not Location.INSIDE:
                return _fail(name, p, f"region contains ({p.x}, {p.y}) but the polygon does not")
    return _ok(name, f"{hits}/{samples} samples in region")


def check_invariants(
    res: RunResult, J: Polygon, samples: int = 0, sample_seed: int = 0
) -> Report:
    """Run every structural audit on ``res``; ``samples > 0`` adds the point oracle."""
    report = Report()
    report.add(_check_walls_on_curve(res, J))
    report.add(_check_cycle_closure(res, J))
    report.add(_check_wall_index(res))
    report.add(_check_dominance(res))
    report.add(_check_area(res, J))
    report.add(_check_saturation(res, J))
    report.add(_check_extensions(res, J))
    report.add(_check_midpoints(res))
    report.add(_check_tree(res))
    report.add(_check_halt(res))
    if samples > 0:
        report.add(oracle_agreement(res, J, samples, sample_seed))
    return report


# -- area gauge and studies -----------------------------------------------

def diameter_eps(J: Polygon, divisor: int = 1000, digits: int = 6) -> Scalar:
    """Rational just below ``diameter(J) / divisor``.

    The diameter is irrational in general, so it is rounded down to
    ``digits`` decimal places first; the result is exact and reproducible.
    """
    d2 = max(
        (a.x - b.x) ** 2 + (a.y - b.y) ** 2 for i, a in enumerate(J.vertices) for b in J.vertices[i + 1 :]
    )
    scale = 10**digits
    scaled = d2 * scale * scale
    root = math.isqrt(int(scaled.numerator // scaled.denominator))
    return mpq(root, scale * divisor)


def deficit(res: RunResult, J: Polygon) -> Scalar:
    """Polygon area minus swept area, exact."""
    if classify(J, res.seed) is not Location.INSIDE:
        raise SeedNotInside(f"seed ({res.seed.x}, {res.seed.y}) is not inside the polygon")
    return shoelace_area(J.vertices) - res.region.area


@dataclass(frozen=True)
class ConvergenceRow:
    eps: Scalar
    sweeps: int
    deficit: Scalar
    max_wall_final: Optional[Scalar]
    halt_reason: HaltReason


def convergence_study(
    J: Polygon, seed: Point, eps_list: Sequence, max_steps: int = 10_000
) -> list[ConvergenceRow]:
    eps_values = [Q(e) for e in eps_list]
    if not eps_values or any(e <= 0 for e in eps_values):
        raise ValueError("eps values must be positive")
    if any(b >= a for a, b in zip(eps_values, eps_values[1:])):
        raise ValueError("eps values must be strictly decreasing")
    rows = []
    for eps in eps_values:
        res = run(J, seed, Config(eps=eps, max_steps=max_steps))
        top = res.region.max_wall()
        rows.append(
            ConvergenceRow(eps, res.sweep_count, deficit(res, J), top.length if top else None, res.halt_reason)
        )
    return rows


@dataclass(frozen=True)
class SeriesPoint:
    step: int
    deficit: Scalar
    max_wall: Optional[Scalar]


_STRATEGY = re.compile(r"^(greedy|fifo|lifo|random)(?:[(:](\d+)\)?)?$")


def parse_strategy(text: str) -> Config:
    """``greedy``, ``fifo``, ``lifo``, ``random``, ``random(7)`` or ``random:7``."""
    m = _STRATEGY.match(text.strip())
    if m is None or (m.group(2) is not None and m.group(1) != "random"):
        raise ValueError(f"unknown strategy {text!r}")
    return Config(strategy=m.group(1), random_seed=int(m.group(2) or 0))


def compare_strategies(
    J: Polygon, seed: Point, strategies: Sequence[str], step_budget: int
) -> dict[str, list[SeriesPoint]]:
    """Deficit and largest wall after every sweep, one series per strategy."""
    total = shoelace_area(J.vertices)
    out: dict[str, list[SeriesPoint]] = {}
    for name in strategies:
        base = parse_strategy(name)
        cfg = Config(eps=0, max_steps=step_budget, strategy=base.strategy, random_seed=base.random_seed)
        res = run(J, seed, cfg)
        init_top = max((w.length for w in res.initial_walls), default=None)
        series = [SeriesPoint(1, total - res.initial_sweep.area, init_top)]
        series += [SeriesPoint(rec.step, total - rec.area_after, rec.max_wall_after) for rec in res.trace]
        out[name] = series
    return out
