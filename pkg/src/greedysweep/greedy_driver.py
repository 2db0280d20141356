"""The greedy sweepline loop.

Start with the horizontal chord through the seed, then repeatedly take the
longest open wall, shoot a horizontal ray from its midpoint away from the
swept side, sweep the segment the ray covers and splice it in.  Polygons
generically never run out of walls (they shrink geometrically into convex
corners), so a run stops once every wall is shorter than ``eps``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .exact_geom import Point, Q, Scalar
from .horizontal_sweep import AtWall, HSegment, InvalidSegment, OnJ, Sweep, build_sweep
from .jordan_curve import (
    GeometryError,
    Location,
    PointOnCurve,
    Polygon,
    classify,
    first_hit_horizontal,
)
from .swept_region import Region, Wall, init_region

__all__ = [
    "STRATEGIES",
    "SeedOnCurve",
    "UnboundedFace",
    "NoExtension",
    "HaltReason",
    "Config",
    "OnWall",
    "StepRecord",
    "Halted",
    "TreeNode",
    "RecursionTree",
    "RunResult",
    "initial_segment",
    "extend_from_wall",
    "step",
    "run",
]

STRATEGIES = ("greedy", "fifo", "lifo", "random")


class SeedOnCurve(GeometryError):
    pass


class UnboundedFace(GeometryError):
    pass


class NoExtension(GeometryError):
    pass


class HaltReason(str, Enum):
    EMPTY_WALL_SET = "EmptyWallSet"
    EPSILON_REACHED = "EpsilonReached"
    MAX_STEPS = "MaxSteps"


@dataclass(frozen=True)
class Config:
    """Run parameters.

    ``eps = 0`` disables the epsilon halt.  ``max_steps`` caps the number of
    sweeps, the initial one included.
    """

    eps: Scalar = Q(0)
    max_steps: int = 10_000
    strategy: str = "greedy"
    random_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "eps", Q(self.eps))
        if self.eps < 0:
            raise ValueError("eps must be >= 0")
        if int(self.max_steps) <= 0:
            raise ValueError("max_steps must be positive")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}")


@dataclass(frozen=True)
class OnWall:
    wall_id: int
    point: Point


Terminus = Union[OnJ, OnWall]


@dataclass(frozen=True)
class StepRecord:
    step: int
    wall_used: Wall
    midpoint: Point
    t: HSegment
    terminus: Terminus
    walls_added: tuple[Wall, ...]
    walls_removed: tuple[Wall, ...]
    cycle_event: str
    area_after: Scalar
    max_wall_after: Optional[Scalar]
    parent_step: int


@dataclass(frozen=True)
class Halted:
    reason: HaltReason


@dataclass
class TreeNode:
    step: int
    parent_step: Optional[int]
    children: list[int] = field(default_factory=list)


@dataclass
class RecursionTree:
    nodes: dict[int, TreeNode] = field(default_factory=dict)

    def add(self, step: int, parent: Optional[int]) -> None:
        self.nodes[step] = TreeNode(step, parent)
        if parent is not None:
            self.nodes[parent].children.append(step)

    def __len__(self) -> int:
        return len(self.nodes)

    def depth(self, step: int) -> int:
        d = 0
        while self.nodes[step].parent_step is not None:
            step = self.nodes[step].parent_step
            d += 1
        return d


@dataclass
class RunResult:
    polygon: Polygon
    seed: Point
    config: Config
    region: Region
    tree: RecursionTree
    trace: list[StepRecord]
    halt_reason: HaltReason
    initial_sweep: Sweep
    initial_walls: tuple[Wall, ...]

    @property
    def sweep_count(self) -> int:
        return len(self.region.sweeps)


def initial_segment(J: Polygon, seed: Point) -> HSegment:
    """The maximal horizontal segment through ``seed`` avoiding ``J``."""
    try:
        left = first_hit_horizontal(J, seed, "left")
        right = first_hit_horizontal(J, seed, "right")
    except PointOnCurve as exc:
        raise SeedOnCurve(str(exc)) from exc
    if left is None or right is None:
        raise UnboundedFace(f"horizontal line through the seed ({seed.x}, {seed.y}) leaves the bounding box")
    return HSegment(seed.y, left[1], right[1], OnJ(left[0]), OnJ(right[0]))


def extend_from_wall(J: Polygon, r: Region, w: Wall) -> tuple[HSegment, Terminus]:
    """Segment from the midpoint of ``w`` to the first obstruction on its open side."""
    m = w.seg.mid
    direction = w.extend_direction
    right = direction == "right"
    hit = first_hit_horizontal(J, m, direction)
    best_x = hit[1] if hit is not None else None
    terminus: Optional[Terminus] = OnJ(hit[0]) if hit is not None else None
    far: Optional[Wall] = None
    for other in r.walls.values():
        if other is w or not other.seg.contains_y(m.y):
            continue
        x = other.seg.x
        if (x > m.x) != right or x == m.x:
            continue
        if best_x is None or (x < best_x if right else x > best_x):
            best_x, far = x, other
    if best_x is None:
        raise UnboundedFace(f"extension from wall {w.id} escapes the bounding box")
    if best_x == m.x:
        raise NoExtension(f"wall {w.id} is blocked at its own midpoint")
    near_end = AtWall(w.seg, m)
    if far is not None:
        if far.swept_side != direction:
            raise GeometryError(f"extension from wall {w.id} reaches the swept side of wall {far.id}")
        p = Point(far.seg.x, m.y)
        terminus = OnWall(far.id, p)
        far_end = AtWall(far.seg, p)
    else:
        far_end = terminus
    if right:
        return HSegment(m.y, m.x, best_x, near_end, far_end), terminus
    return HSegment(m.y, best_x, m.x, far_end, near_end), terminus


def _select(r: Region, cfg: Config, rng: Optional[random.Random]) -> Wall:
    if cfg.strategy == "greedy":
        return r.max_wall()
    if cfg.strategy == "fifo":
        return r.oldest_wall()
    if cfg.strategy == "lifo":
        return r.newest_wall()
    walls = list(r.walls.values())
    return walls[rng.randrange(len(walls))]


def _halt_reason(r: Region, cfg: Config) -> Optional[HaltReason]:
    if not r.walls:
        return HaltReason.EMPTY_WALL_SET
    if cfg.eps > 0 and r.max_wall().length < cfg.eps:
        return HaltReason.EPSILON_REACHED
    if len(r.sweeps) >= cfg.max_steps:
        return HaltReason.MAX_STEPS
    return None


def step(J: Polygon, r: Region, cfg: Config, rng: Optional[random.Random] = None) -> Union[Halted, StepRecord]:
    """Advance the region by one sweep, or report why the run is over."""
    reason = _halt_reason(r, cfg)
    if reason is not None:
        return Halted(reason)
    if cfg.strategy == "random" and rng is None:
        rng = random.Random(cfg.random_seed)
    w = _select(r, cfg, rng)
    t, terminus = extend_from_wall(J, r, w)
    k = len(r.sweeps) + 1
    try:
        s = build_sweep(J, t, k)
    except InvalidSegment as exc:
        raise UnboundedFace(str(exc)) from exc
    far = None
    if isinstance(terminus, OnWall):
        far = next(x for x in r.walls.values() if x.id == terminus.wall_id)
    report = r.attach(s, w, far)
    top = r.max_wall()
    return StepRecord(
        step=k,
        wall_used=w,
        midpoint=w.seg.mid,
        t=t,
        terminus=terminus,
        walls_added=tuple(report.added),
        walls_removed=tuple(report.removed),
        cycle_event=report.cycle_event,
        area_after=r.area,
        max_wall_after=top.length if top is not None else None,
        parent_step=w.origin_step,
    )


def run(J: Polygon, seed: Point, cfg: Config = Config()) -> RunResult:
    """Run the sweep from ``seed`` until a halt condition fires."""
    seed = Point(Q(seed[0]), Q(seed[1]))
    if classify(J, seed) is Location.ON:
        raise SeedOnCurve(f"seed ({seed.x}, {seed.y}) lies on the curve")
    t1 = initial_segment(J, seed)
    try:
        s1 = build_sweep(J, t1, 1)
    except InvalidSegment as exc:
        raise UnboundedFace(str(exc)) from exc
    region = init_region(s1, seed)
    initial_walls = tuple(region.walls.values())
    tree = RecursionTree()
    tree.add(1, None)
    rng = random.Random(cfg.random_seed) if cfg.strategy == "random" else None
    trace: list[StepRecord] = []
    while True:
        out = step(J, region, cfg, rng)
        if isinstance(out, Halted):
            break
        trace.append(out)
        tree.add(out.step, out.parent_step)
    return RunResult(J, seed, cfg, region, tree, trace, out.reason, s1, initial_walls)
