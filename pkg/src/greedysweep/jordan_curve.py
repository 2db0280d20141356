"""The polygonal Jordan curve: validation, ray shooting and the even-odd oracle.

All queries are brute force over the edges.  At the instance sizes this
package targets (a few hundred vertices) that is fast enough, and it keeps
every answer trivially auditable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .exact_geom import Edge, Point, Q, Scalar, edge_x_at_y, edge_y_at_x, orient

__all__ = [
    "GeometryError",
    "ValidationError",
    "PointOnCurve",
    "Unbounded",
    "Violation",
    "BBox",
    "Polygon",
    "PointOnJ",
    "VSegment",
    "Location",
    "find_violations",
    "validate",
    "locate_on_edge",
    "locate",
    "open_segment",
    "first_hit_horizontal",
    "classify",
    "arc_between",
]


class GeometryError(Exception):
    """Base class for geometric failures."""


class ValidationError(GeometryError):
    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class PointOnCurve(GeometryError):
    pass


class Unbounded(GeometryError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # NotSimple | AxisParallelEdge | DuplicateCoordinate | TooFewVertices | RepeatedVertex
    detail: str
    indices: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class BBox:
    x_min: Scalar
    x_max: Scalar
    y_min: Scalar
    y_max: Scalar

    def contains(self, p: Point) -> bool:
        return self.x_min <= p.x <= self.x_max and self.y_min <= p.y <= self.y_max


@dataclass(frozen=True, eq=False)
class Polygon:
    """A simple polygon in general position.

    Construct through :func:`validate`; the constructor itself trusts its
    input so that tests can build deliberately degenerate curves.
    """

    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...] = field(init=False, repr=False)
    bbox: BBox = field(init=False, repr=False)

    def __post_init__(self):
        verts = tuple(Point(Q(v[0]), Q(v[1])) for v in self.vertices)
        n = len(verts)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(Edge(verts[i], verts[(i + 1) % n]) for i in range(n)))
        xs = [v.x for v in verts]
        ys = [v.y for v in verts]
        object.__setattr__(self, "bbox", BBox(min(xs), max(xs), min(ys), max(ys)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)


def _segments_intersect(e: Edge, f: Edge) -> bool:
    """Closed-segment intersection test, exact."""
    d1 = orient(e.a, e.b, f.a)
    d2 = orient(e.a, e.b, f.b)
    d3 = orient(f.a, f.b, e.a)
    d4 = orient(f.a, f.b, e.b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on(p: Point, s: Edge) -> bool:
        return (
            orient(s.a, s.b, p) == 0
            and min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)
        )

    return (
        (d1 == 0 and on(f.a, e))
        or (d2 == 0 and on(f.b, e))
        or (d3 == 0 and on(e.a, f))
        or (d4 == 0 and on(e.b, f))
    )


def find_violations(raw_vertices: Iterable) -> list[Violation]:
    """Every reason ``raw_vertices`` is not a valid general-position polygon."""
    verts = [Point(Q(v[0]), Q(v[1])) for v in raw_vertices]
    n = len(verts)
    if n < 3:
        return [Violation("TooFewVertices", f"{n} vertices, need at least 3", tuple(range(n)))]
    out: list[Violation] = []

    seen: dict[Point, int] = {}
    for i, v in enumerate(verts):
        if v in seen:
            out.append(Violation("RepeatedVertex", f"vertices {seen[v]} and {i} coincide at {v.x},{v.y}", (seen[v], i)))
        else:
            seen[v] = i

    for axis in ("x", "y"):
        first: dict[Scalar, int] = {}
        for i, v in enumerate(verts):
            c = getattr(v, axis)
            if c in first and verts[first[c]] != v:
                out.append(
                    Violation("DuplicateCoordinate", f"vertices {first[c]} and {i} share {axis} = {c}", (first[c], i))
                )
            first.setdefault(c, i)

    edges = [Edge(verts[i], verts[(i + 1) % n]) for i in range(n)]
    for i, e in enumerate(edges):
        if e.a.y == e.b.y and e.a != e.b:
            out.append(Violation("AxisParallelEdge", f"edge {i} is horizontal", (i,)))
        elif e.a.x == e.b.x and e.a != e.b:
            out.append(Violation("AxisParallelEdge", f"edge {i} is vertical", (i,)))

    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                # adjacent edges may only share their common vertex
                e, f = edges[i], edges[j]
                shared = e.b if j == i + 1 else e.a
                other_e = e.a if j == i + 1 else e.b
                other_f = f.b if j == i + 1 else f.a
                if orient(other_e, shared, other_f) == 0 and (
                    (other_f.x - shared.x) * (other_e.x - shared.x) + (other_f.y - shared.y) * (other_e.y - shared.y) > 0
                ):
                    out.append(Violation("NotSimple", f"adjacent edges {i} and {j} overlap", (i, j)))
            elif _segments_intersect(edges[i], edges[j]):
                out.append(Violation("NotSimple", f"edges {i} and {j} intersect", (i, j)))
    return out


def validate(raw_vertices: Iterable) -> Polygon:
    raw = list(raw_vertices)
    problems = find_violations(raw)
    if problems:
        raise ValidationError(problems)
    return Polygon(tuple(raw))


@dataclass(frozen=True)
class PointOnJ:
    """Exact address of a point on the curve.

    ``t`` is in [0, 1) along the directed edge; a vertex is always addressed
    as the start of its outgoing edge, so addresses are canonical.
    """

    edge_index: int
    t: Scalar
    point: Point

    @property
    def s(self) -> Scalar:
        """Cyclic curve parameter ``edge_index + t``."""
        return self.edge_index + self.t

    @property
    def is_vertex(self) -> bool:
        return self.t == 0


def locate_on_edge(J: Polygon, i: int, p: Point) -> PointOnJ:
    """Address of ``p``, which the caller knows lies on edge ``i``."""
    e = J.edges[i]
    t = (p.x - e.a.x) / (e.b.x - e.a.x)
    if t == 1:
        return PointOnJ((i + 1) % len(J), Q(0), p)
    return PointOnJ(i, t, p)


def locate(J: Polygon, p: Point) -> Optional[PointOnJ]:
    """Address of ``p`` on ``J`` or ``None`` if it is not on the curve."""
    for i, e in enumerate(J.edges):
        y = edge_y_at_x(e, p.x)
        if y is not None and y == p.y:
            return locate_on_edge(J, i, p)
    return None


@dataclass(frozen=True)
class VSegment:
    """Open vertical segment {x} x (y_lo, y_hi)."""

    x: Scalar
    y_lo: Scalar
    y_hi: Scalar
    lo_on: Optional[PointOnJ] = None
    hi_on: Optional[PointOnJ] = None

    @property
    def length(self) -> Scalar:
        return self.y_hi - self.y_lo

    @property
    def key(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.x, self.y_lo, self.y_hi)

    @property
    def lo(self) -> Point:
        return Point(self.x, self.y_lo)

    @property
    def hi(self) -> Point:
        return Point(self.x, self.y_hi)

    @property
    def mid(self) -> Point:
        return Point(self.x, (self.y_lo + self.y_hi) / 2)

    def contains_y(self, y: Scalar) -> bool:
        return self.y_lo < y < self.y_hi


def open_segment(J: Polygon, p: Point) -> VSegment:
    """The maximal open vertical segment through ``p`` that avoids ``J``."""
    lo = hi = None
    lo_i = hi_i = -1
    for i, e in enumerate(J.edges):
        y = edge_y_at_x(e, p.x)
        if y is None:
            continue
        if y == p.y:
            raise PointOnCurve(f"({p.x}, {p.y}) lies on edge {i}")
        if y > p.y:
            if hi is None or y < hi:
                hi, hi_i = y, i
        elif lo is None or y > lo:
            lo, lo_i = y, i
    if lo is None or hi is None:
        raise Unbounded(f"vertical line through ({p.x}, {p.y}) escapes the bounding box")
    return VSegment(
        p.x, lo, hi, locate_on_edge(J, lo_i, Point(p.x, lo)), locate_on_edge(J, hi_i, Point(p.x, hi))
    )


def first_hit_horizontal(J: Polygon, p: Point, direction: str) -> Optional[tuple[PointOnJ, Scalar]]:
    """Nearest point of ``J`` on the horizontal ray from ``p``.

    ``direction`` is ``"left"`` or ``"right"``.  Returns ``None`` when the ray
    leaves the bounding box without touching the curve.
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")
    right = direction == "right"
    best = None
    best_i = -1
    for i, e in enumerate(J.edges):
        x = edge_x_at_y(e, p.y)
        if x is None:
            continue
        if x == p.x:
            raise PointOnCurve(f"({p.x}, {p.y}) lies on edge {i}")
        if (x > p.x) != right:
            continue
        if best is None or (x < best if right else x > best):
            best, best_i = x, i
    if best is None:
        return None
    return locate_on_edge(J, best_i, Point(best, p.y)), best


class Location(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON = "on"


def classify(J: Polygon, p: Point) -> Location:
    """Even-odd classification with a rightward ray.

    An edge counts when its lower endpoint is strictly below the ray and its
    upper endpoint is on or above it, which settles vertex crossings.
    """
    if not J.bbox.contains(p):
        return Location.OUTSIDE
    inside = False
    for e in J.edges:
        lo_y, hi_y = e.y_range
        if p.y < lo_y or p.y > hi_y:
            continue
        x = edge_x_at_y(e, p.y)
        if x == p.x:
            return Location.ON
        if lo_y < p.y <= hi_y and x > p.x:
            inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE


def arc_between(J: Polygon, a: PointOnJ, b: PointOnJ, orientation: str = "forward") -> list[PointOnJ]:
    """Breakpoints of the sub-path of ``J`` from ``a`` to ``b``.

    The list starts with ``a``, ends with ``b`` and names every vertex passed
    strictly in between, in traversal order.
    """
    if a.s == b.s:
        raise ValueError("arc endpoints coincide")
    if orientation not in ("forward", "backward"):
        raise ValueError(f"orientation must be 'forward' or 'backward', not {orientation!r}")
    n = len(J)
    out = [a]
    if orientation == "forward":
        k = a.edge_index + 1
        span = (b.s - a.s) % n
        while k - a.s < span:
            out.append(PointOnJ(k % n, Q(0), J.vertices[k % n]))
            k += 1
    else:
        k = a.edge_index if a.t > 0 else a.edge_index - 1
        span = (a.s - b.s) % n
        while a.s - k < span:
            out.append(PointOnJ(k % n, Q(0), J.vertices[k % n]))
            k -= 1
    out.append(b)
    return out
