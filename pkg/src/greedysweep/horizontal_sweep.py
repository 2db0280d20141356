"""Horizontal sweeps: the union of maximal vertical chords over a horizontal segment.

A sweep is cut into cells at every vertex abscissa inside its segment.  Inside
a cell the chord through the segment is bounded by one fixed edge above and
one below, so each cell is an exact trapezoid.  Boundary walls appear where
an envelope jumps (a vertex hides or exposes a farther edge) and at the two
ends of the segment.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Optional, Union

from .exact_geom import Point, Scalar, edge_x_at_y, edge_y_at_x
from .jordan_curve import GeometryError, Polygon, PointOnJ, VSegment, locate_on_edge

__all__ = [
    "InvalidSegment",
    "OnJ",
    "AtWall",
    "HSegment",
    "Span",
    "Envelope",
    "SweepWall",
    "Arc",
    "WallRun",
    "Sweep",
    "build_sweep",
    "sweep_boundary",
    "normalize_cycle",
    "piece_start",
    "piece_end",
]


class InvalidSegment(GeometryError):
    pass


@dataclass(frozen=True)
class OnJ:
    at: PointOnJ


@dataclass(frozen=True)
class AtWall:
    wall: VSegment
    point: Point


EndKind = Union[OnJ, AtWall]


@dataclass(frozen=True)
class HSegment:
    y: Scalar
    x_lo: Scalar
    x_hi: Scalar
    lo_end: Optional[EndKind] = None
    hi_end: Optional[EndKind] = None

    @property
    def length(self) -> Scalar:
        return self.x_hi - self.x_lo

    def point_at(self, x: Scalar) -> Point:
        return Point(x, self.y)


@dataclass(frozen=True)
class Span:
    x_lo: Scalar
    x_hi: Scalar
    edge_index: int


@dataclass(frozen=True)
class Envelope:
    side: str  # "upper" | "lower"
    spans: tuple[Span, ...]


@dataclass(frozen=True)
class SweepWall:
    seg: VSegment
    swept_side: str  # side of the wall this sweep occupies
    kind: str  # "jump" | "end"


@dataclass(frozen=True)
class Arc:
    """Sub-path of the curve; a single point when two walls meet on ``J``."""

    points: tuple[PointOnJ, ...]

    @property
    def start(self) -> Point:
        return self.points[0].point

    @property
    def end(self) -> Point:
        return self.points[-1].point

    def reversed(self) -> "Arc":
        return Arc(self.points[::-1])

    def __add__(self, other: "Arc") -> "Arc":
        if self.end != other.start:
            raise GeometryError("arcs do not chain")
        return Arc(self.points + other.points[1:])


@dataclass(frozen=True)
class WallRun:
    """A wall traversed in one direction as part of a boundary cycle."""

    seg: VSegment
    upward: bool

    @property
    def start(self) -> Point:
        return self.seg.lo if self.upward else self.seg.hi

    @property
    def end(self) -> Point:
        return self.seg.hi if self.upward else self.seg.lo

    def reversed(self) -> "WallRun":
        return WallRun(self.seg, not self.upward)


Piece = Union[Arc, WallRun]


def piece_start(p: Piece) -> Point:
    return p.start


def piece_end(p: Piece) -> Point:
    return p.end


def normalize_cycle(pieces: list) -> list:
    """Concatenate neighbouring arcs, including across the wrap-around."""
    out: list = []
    for p in pieces:
        if out and isinstance(p, Arc) and isinstance(out[-1], Arc):
            out[-1] = out[-1] + p
        else:
            out.append(p)
    if len(out) > 1 and isinstance(out[0], Arc) and isinstance(out[-1], Arc):
        out[0] = out.pop() + out[0]
    return out


@dataclass(frozen=True, eq=False)
class Sweep:
    J: Polygon
    t: HSegment
    upper: Envelope
    lower: Envelope
    walls: tuple[SweepWall, ...]
    arcs: tuple[Arc, ...]
    boundary: tuple[Piece, ...]
    area: Scalar
    step_id: int
    cuts: tuple[Scalar, ...]
    cells: tuple[tuple[int, int], ...]  # (lower edge, upper edge) per cell

    def chord_at(self, x: Scalar) -> Optional[tuple[Scalar, Scalar]]:
        """Chord (lo, hi) of the sweep at abscissa ``x``, or ``None`` outside it."""
        if not (self.t.x_lo < x < self.t.x_hi):
            return None
        edges = self.J.edges
        k = bisect.bisect_left(self.cuts, x)
        if self.cuts[k] == x:
            # on a cell boundary a vertex may cut the chord short
            lo_l, hi_l = self.cells[k - 1]
            lo_r, hi_r = self.cells[k]
            return (
                max(edge_y_at_x(edges[lo_l], x), edge_y_at_x(edges[lo_r], x)),
                min(edge_y_at_x(edges[hi_l], x), edge_y_at_x(edges[hi_r], x)),
            )
        lo_e, hi_e = self.cells[k - 1]
        return edge_y_at_x(edges[lo_e], x), edge_y_at_x(edges[hi_e], x)

    def contains(self, p: Point) -> bool:
        chord = self.chord_at(p.x)
        return chord is not None and chord[0] < p.y < chord[1]

    def trapezoids(self) -> list[tuple[Point, Point, Point, Point]]:
        """Cells as (lower-left, lower-right, upper-right, upper-left) quads."""
        edges = self.J.edges
        out = []
        for (a, b), (lo_e, hi_e) in zip(zip(self.cuts, self.cuts[1:]), self.cells):
            out.append(
                (
                    Point(a, edge_y_at_x(edges[lo_e], a)),
                    Point(b, edge_y_at_x(edges[lo_e], b)),
                    Point(b, edge_y_at_x(edges[hi_e], b)),
                    Point(a, edge_y_at_x(edges[hi_e], a)),
                )
            )
        return out


def _coalesce(cuts, cell_edges) -> tuple[Span, ...]:
    spans: list[Span] = []
    for (a, b), e in zip(zip(cuts, cuts[1:]), cell_edges):
        if spans and spans[-1].edge_index == e:
            spans[-1] = Span(spans[-1].x_lo, b, e)
        else:
            spans.append(Span(a, b, e))
    return tuple(spans)


def _walk_envelope(J: Polygon, env: Envelope, walls: list) -> list:
    """Pieces of one envelope traversed left to right, collecting jump walls."""
    edges = J.edges
    upper = env.side == "upper"
    pieces: list = []
    first = env.spans[0]
    x0 = first.x_lo
    cur = [locate_on_edge(J, first.edge_index, Point(x0, edge_y_at_x(edges[first.edge_index], x0)))]
    for s, s2 in zip(env.spans, env.spans[1:]):
        X = s.x_hi
        yl = edge_y_at_x(edges[s.edge_index], X)
        yr = edge_y_at_x(edges[s2.edge_index], X)
        if yl == yr:
            # two edges meeting at a shared vertex: the envelope bends there
            cur.append(locate_on_edge(J, s.edge_index, Point(X, yl)))
            continue
        left_pt = locate_on_edge(J, s.edge_index, Point(X, yl))
        right_pt = locate_on_edge(J, s2.edge_index, Point(X, yr))
        cur.append(left_pt)
        pieces.append(Arc(tuple(cur)))
        if yl < yr:
            seg = VSegment(X, yl, yr, left_pt, right_pt)
        else:
            seg = VSegment(X, yr, yl, right_pt, left_pt)
        # the side whose envelope reaches farther from the segment covers the wall
        farther_left = (yl > yr) if upper else (yl < yr)
        walls.append(SweepWall(seg, "left" if farther_left else "right", "jump"))
        pieces.append(WallRun(seg, yr > yl))
        cur = [right_pt]
    last = env.spans[-1]
    x1 = last.x_hi
    cur.append(locate_on_edge(J, last.edge_index, Point(x1, edge_y_at_x(edges[last.edge_index], x1))))
    pieces.append(Arc(tuple(cur)))
    return pieces


def _end_walls(J: Polygon, X: Scalar, lo_edge: int, hi_edge: int, swept_side: str, walls: list) -> list:
    """Walls on the limit chord at an end of the segment, ordered bottom to top.

    The closed limit chord is split at every point of ``J`` strictly inside it
    (the hit point itself, or a vertex sitting on that abscissa).  Returns the
    pieces for an upward traversal.
    """
    edges = J.edges
    lim_lo = edge_y_at_x(edges[lo_edge], X)
    lim_hi = edge_y_at_x(edges[hi_edge], X)
    if lim_lo == lim_hi:
        return []
    stops = {lim_lo: locate_on_edge(J, lo_edge, Point(X, lim_lo)), lim_hi: locate_on_edge(J, hi_edge, Point(X, lim_hi))}
    for i, e in enumerate(edges):
        y = edge_y_at_x(e, X)
        if y is not None and lim_lo < y < lim_hi and y not in stops:
            stops[y] = locate_on_edge(J, i, Point(X, y))
    ys = sorted(stops)
    pieces: list = []
    for a, b in zip(ys, ys[1:]):
        seg = VSegment(X, a, b, stops[a], stops[b])
        walls.append(SweepWall(seg, swept_side, "end"))
        if pieces:
            pieces.append(Arc((stops[a],)))
        pieces.append(WallRun(seg, True))
    return pieces


def _reverse_pieces(pieces: list) -> list:
    return [p.reversed() for p in reversed(pieces)]


def build_sweep(J: Polygon, t: HSegment, step_id: int = 1) -> Sweep:
    """Build the sweep H(t) over the open horizontal segment ``t``."""
    if not t.x_lo < t.x_hi:
        raise InvalidSegment(f"empty segment x in ({t.x_lo}, {t.x_hi})")
    edges = J.edges
    for i, e in enumerate(edges):
        x = edge_x_at_y(e, t.y)
        if x is not None and t.x_lo < x < t.x_hi:
            raise InvalidSegment(f"segment at y={t.y} crosses edge {i} at x={x}")

    cuts = [t.x_lo] + sorted({v.x for v in J.vertices if t.x_lo < v.x < t.x_hi}) + [t.x_hi]
    ranges = [e.x_range for e in edges]
    cells: list[tuple[int, int]] = []
    for a, b in zip(cuts, cuts[1:]):
        xm = (a + b) / 2
        lo = hi = None
        lo_i = hi_i = -1
        for i, e in enumerate(edges):
            r0, r1 = ranges[i]
            if not (r0 < xm < r1):
                continue
            y = edge_y_at_x(e, xm)
            if y > t.y:
                if hi is None or y < hi:
                    hi, hi_i = y, i
            elif lo is None or y > lo:
                lo, lo_i = y, i
        if lo is None or hi is None:
            raise InvalidSegment(f"chords over x in ({a}, {b}) at y={t.y} are unbounded")
        cells.append((lo_i, hi_i))

    area = Scalar(0)
    for (a, b), (lo_e, hi_e) in zip(zip(cuts, cuts[1:]), cells):
        h_a = edge_y_at_x(edges[hi_e], a) - edge_y_at_x(edges[lo_e], a)
        h_b = edge_y_at_x(edges[hi_e], b) - edge_y_at_x(edges[lo_e], b)
        area += (h_a + h_b) * (b - a) / 2

    upper = Envelope("upper", _coalesce(cuts, [c[1] for c in cells]))
    lower = Envelope("lower", _coalesce(cuts, [c[0] for c in cells]))

    walls: list[SweepWall] = []
    upper_pieces = _walk_envelope(J, upper, walls)
    lower_pieces = _walk_envelope(J, lower, walls)
    hi_pieces = _end_walls(J, t.x_hi, cells[-1][0], cells[-1][1], "left", walls)
    lo_pieces = _end_walls(J, t.x_lo, cells[0][0], cells[0][1], "right", walls)

    # clockwise: upper left-to-right, down the hi end, lower right-to-left, up the lo end
    boundary = normalize_cycle(upper_pieces + _reverse_pieces(hi_pieces) + _reverse_pieces(lower_pieces) + lo_pieces)
    arcs = tuple(p for p in boundary if isinstance(p, Arc))
    return Sweep(
        J=J,
        t=t,
        upper=upper,
        lower=lower,
        walls=tuple(walls),
        arcs=arcs,
        boundary=tuple(boundary),
        area=area,
        step_id=step_id,
        cuts=tuple(cuts),
        cells=tuple(cells),
    )


def sweep_boundary(s: Sweep) -> list:
    """The boundary cycle of ``s`` as alternating arcs and directed walls."""
    return list(s.boundary)
