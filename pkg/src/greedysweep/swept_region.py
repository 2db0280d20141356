"""The growing swept region: boundary cycles, the wall index and splice-merge.

Walls on one vertical line are either disjoint or identical (a wall's open
interior never meets the curve, while its endpoints always do), so attaching
a sweep reduces to matching its walls against existing walls by exact
``(x, y_lo, y_hi)`` key.  A matched pair faces opposite ways; both copies
disappear and the two boundary cycles carrying them are spliced together.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .exact_geom import Point, Scalar
from .horizontal_sweep import AtWall, Sweep, SweepWall, WallRun, normalize_cycle
from .jordan_curve import GeometryError, Polygon, VSegment

__all__ = [
    "AttachMismatch",
    "Wall",
    "BoundaryCycle",
    "MergeReport",
    "Region",
    "init_region",
    "max_wall",
    "splice_merge",
    "splice_cycles",
    "wall_order_key",
]


class AttachMismatch(GeometryError):
    pass


@dataclass(eq=False)
class Wall:
    seg: VSegment
    id: int
    cycle_id: int
    origin_step: int
    swept_side: str

    @property
    def length(self) -> Scalar:
        return self.seg.length

    @property
    def key(self):
        return self.seg.key

    @property
    def x(self) -> Scalar:
        return self.seg.x

    @property
    def extend_direction(self) -> str:
        return "left" if self.swept_side == "right" else "right"

    def __repr__(self) -> str:
        return f"Wall(id={self.id}, x={self.seg.x}, y=({self.seg.y_lo}, {self.seg.y_hi}), len={self.length}, swept={self.swept_side})"


def wall_order_key(w: Wall):
    """Greedy priority: longest first, then leftmost, then lowest."""
    return (-w.seg.length, w.seg.x, w.seg.y_lo)


@dataclass
class BoundaryCycle:
    cycle_id: int
    pieces: list = field(default_factory=list)

    def walls(self) -> Iterator[VSegment]:
        for p in self.pieces:
            if isinstance(p, WallRun):
                yield p.seg


@dataclass
class MergeReport:
    added: list[Wall]
    removed: list[Wall]
    cycle_event: str  # "none" | "split" | "merge"
    events: list[str]


def _rotate(pieces: list, i: int) -> list:
    return pieces[i:] + pieces[:i]


def splice_cycles(a: list, ia: int, b: Optional[list], ib: int) -> list[list]:
    """Cancel the wall at ``a[ia]`` against its opposite copy.

    With ``b`` given the copy is ``b[ib]`` on another cycle and the result is
    one merged cycle.  With ``b`` ``None`` the copy is ``a[ib]`` on the same
    cycle and the result is the two cycles it splits into.
    """
    if b is None:
        n = len(a)
        rot = _rotate(a, ia)
        j = (ib - ia) % n
        w, w2 = rot[0], rot[j]
        _check_opposite(w, w2)
        inner = rot[1:j]
        outer = rot[j + 1 :]
        return [normalize_cycle(inner), normalize_cycle(outer)]
    ra = _rotate(a, ia)
    rb = _rotate(b, ib)
    _check_opposite(ra[0], rb[0])
    return [normalize_cycle(ra[1:] + rb[1:])]


def _check_opposite(w: WallRun, w2: WallRun) -> None:
    if not (isinstance(w, WallRun) and isinstance(w2, WallRun)):
        raise GeometryError("splice target is not a wall")
    if w.seg.key != w2.seg.key or w.upward == w2.upward:
        raise GeometryError("splice needs the same wall traversed in opposite directions")


class Region:
    """The swept set: sweeps, boundary cycles and the index of open walls."""

    def __init__(self, J: Polygon, seed: Point):
        self.J = J
        self.seed = seed
        self.sweeps: list[Sweep] = []
        self.cycles: dict[int, BoundaryCycle] = {}
        self.walls: dict[tuple, Wall] = {}  # insertion order == id order
        self.area: Scalar = Scalar(0)
        self._next_wall_id = 1
        self._next_cycle_id = 1
        self._heap: list = []
        self._index = None

    # -- queries --------------------------------------------------------

    @property
    def wall_index(self) -> list[Wall]:
        """All open walls ordered by greedy priority."""
        return sorted(self.walls.values(), key=wall_order_key)

    def max_wall(self) -> Optional[Wall]:
        heap = self._heap
        while heap:
            *_, wid, key = heap[0]
            w = self.walls.get(key)
            if w is not None and w.id == wid:
                return w
            heapq.heappop(heap)
        return None

    def oldest_wall(self) -> Optional[Wall]:
        return next(iter(self.walls.values()), None)

    def newest_wall(self) -> Optional[Wall]:
        return next(reversed(self.walls.values()), None)

    def cycle_of(self, w: Wall) -> BoundaryCycle:
        return self.cycles[w.cycle_id]

    def contains(self, p: Point) -> bool:
        """True iff ``p`` lies on an open chord of some sweep."""
        for s in self._candidates(p.x):
            if s.contains(p):
                return True
        return False

    def contains_before(self, p: Point, step: int) -> bool:
        """``contains`` restricted to sweeps created before ``step``."""
        for s in self._candidates(p.x):
            if s.step_id < step and s.contains(p):
                return True
        return False

    def _candidates(self, x: Scalar) -> list[Sweep]:
        if self._index is None:
            self._index = _SweepIndex(self.J, self.sweeps)
        return self._index.query(x)

    # -- construction ---------------------------------------------------

    def _new_cycle_id(self) -> int:
        cid = self._next_cycle_id
        self._next_cycle_id += 1
        return cid

    def _add_wall(self, seg: VSegment, swept_side: str, origin_step: int, cycle_id: int) -> Wall:
        w = Wall(seg, self._next_wall_id, cycle_id, origin_step, swept_side)
        self._next_wall_id += 1
        self.walls[seg.key] = w
        heapq.heappush(self._heap, (*wall_order_key(w), w.id, seg.key))
        return w

    def attach(self, s: Sweep, near: Optional[Wall] = None, far: Optional[Wall] = None) -> MergeReport:
        """Add sweep ``s`` to the region, cancelling the walls it closes off."""
        if near is not None and near is far:
            raise AttachMismatch("near and far wall coincide")
        new_by_key: dict[tuple, SweepWall] = {}
        for sw in s.walls:
            if sw.seg.key in new_by_key:
                raise GeometryError(f"sweep {s.step_id} emits the wall at x={sw.seg.x} twice")
            new_by_key[sw.seg.key] = sw
        at_wall_keys = {e.wall.key for e in (s.t.lo_end, s.t.hi_end) if isinstance(e, AtWall)}
        for w in (near, far):
            if w is None:
                continue
            sw = new_by_key.get(w.key)
            if w.key not in at_wall_keys or sw is None or sw.swept_side == w.swept_side:
                raise AttachMismatch(f"sweep {s.step_id} has no end wall equal to wall {w.id}")

        cid = self._new_cycle_id()
        self.cycles[cid] = BoundaryCycle(cid, list(s.boundary))
        touched = {cid}

        order = [w.key for w in (near, far) if w is not None]
        order += [k for k in new_by_key if k not in order]
        removed: list[Wall] = []
        events: list[str] = []
        far_event = "none"
        for key in order:
            old = self.walls.get(key)
            if old is None:
                continue
            if new_by_key[key].swept_side == old.swept_side:
                raise GeometryError(f"sweep {s.step_id} overlaps the region along wall {old.id}")
            runs = [
                (c_id, i)
                for c_id, cyc in self.cycles.items()
                for i, p in enumerate(cyc.pieces)
                if isinstance(p, WallRun) and p.seg.key == key
            ]
            if len(runs) != 2:
                raise GeometryError(f"wall {old.id} appears {len(runs)} times on the boundary")
            (ca, ia), (cb, ib) = runs
            if ca == cb:
                first, second = splice_cycles(self.cycles[ca].pieces, ia, None, ib)
                self.cycles[ca].pieces = first
                nid = self._new_cycle_id()
                self.cycles[nid] = BoundaryCycle(nid, second)
                touched |= {ca, nid}
                event = "split"
            else:
                (merged,) = splice_cycles(self.cycles[ca].pieces, ia, self.cycles[cb].pieces, ib)
                keep, drop = sorted((ca, cb))
                self.cycles[keep].pieces = merged
                del self.cycles[drop]
                touched.add(keep)
                touched.discard(drop)
                event = "merge"
            removed.append(old)
            del self.walls[key]
            if near is not None and key == near.key:
                continue  # attaching through the near wall is the ordinary case
            events.append(event)
            if far is not None and key == far.key:
                far_event = event

        for c_id in [c for c, cyc in self.cycles.items() if not cyc.pieces]:
            del self.cycles[c_id]
            touched.discard(c_id)

        owner = {}
        for c_id in touched:
            for seg in self.cycles[c_id].walls():
                owner[seg.key] = c_id
        for key, c_id in owner.items():
            if key in self.walls:
                self.walls[key].cycle_id = c_id

        added = [
            self._add_wall(sw.seg, sw.swept_side, s.step_id, owner[key])
            for key, sw in new_by_key.items()
            if key in owner and key not in self.walls
        ]

        self.sweeps.append(s)
        self.area += s.area
        self._index = None
        if far is None and events:
            far_event = events[-1]
        return MergeReport(added, removed, far_event, events)


class _SweepIndex:
    """Bucket sweeps by abscissa so point queries skip far-away sweeps.

    Buckets are computed from float images of exact coordinates and padded
    by one bucket on each side, so no candidate is ever missed; the final
    answer always comes from the exact test.
    """

    def __init__(self, J: Polygon, sweeps: list[Sweep], n_buckets: int = 256):
        self.x0 = float(J.bbox.x_min)
        width = float(J.bbox.x_max) - self.x0
        self.n = n_buckets
        self.w = width / n_buckets if width > 0 else 1.0
        self.buckets: list[list[Sweep]] = [[] for _ in range(n_buckets)]
        for s in sweeps:
            a = self._bucket(float(s.t.x_lo)) - 1
            b = self._bucket(float(s.t.x_hi)) + 1
            for k in range(max(a, 0), min(b, n_buckets - 1) + 1):
                self.buckets[k].append(s)

    def _bucket(self, fx: float) -> int:
        k = math.floor((fx - self.x0) / self.w)
        return min(max(k, 0), self.n - 1)

    def query(self, x: Scalar) -> list[Sweep]:
        return self.buckets[self._bucket(float(x))]


def init_region(s: Sweep, seed: Point) -> Region:
    r = Region(s.J, seed)
    r.attach(s)
    return r


def max_wall(r: Region) -> Optional[Wall]:
    return r.max_wall()


def splice_merge(r: Region, s: Sweep, near: Wall, far: Optional[Wall] = None) -> Region:
    r.attach(s, near, far)
    return r
