"""Deterministic test polygons with integer (hence exact) coordinates."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .exact_geom import Point, Q
from .jordan_curve import GeometryError, Location, Polygon, classify, find_violations

__all__ = ["GenerationFailed", "KINDS", "gen_polygon", "default_seed", "shear"]

KINDS = ("star", "spiral", "comb")


class GenerationFailed(GeometryError):
    pass


def shear(points, sx: Fraction, sy: Fraction) -> list[Point]:
    """Apply (x, y) -> (x + sx*y, y + sy*x) exactly."""
    return [Point(Q(p[0]) + Q(sx) * Q(p[1]), Q(p[1]) + Q(sy) * Q(p[0])) for p in points]


def _star(n: int, rng: random.Random, scale: int = 10_000) -> list[tuple[int, int]]:
    # one angle per slot keeps every angular gap under pi, so the origin stays inside
    pts = []
    for k in range(n):
        theta = 2 * math.pi * (k + 0.45 * rng.random()) / n
        r = rng.uniform(0.3, 1.0)
        pts.append((round(scale * r * math.cos(theta)), round(scale * r * math.sin(theta))))
    return pts


def _nudge(pts: list[tuple[int, int]], rng: random.Random) -> list[tuple[int, int]]:
    """Move vertices by one grid unit until no two share an x or a y."""
    pts = list(pts)
    for _ in range(1000):
        xs: dict[int, int] = {}
        ys: dict[int, int] = {}
        clash = None
        for i, (x, y) in enumerate(pts):
            if x in xs or y in ys:
                clash = i
                break
            xs[x] = i
            ys[y] = i
        if clash is None:
            return pts
        x, y = pts[clash]
        pts[clash] = (x + rng.choice((-1, 1)), y + rng.choice((-1, 1)))
    raise GenerationFailed("could not reach general position")


def _spiral_centerline(segments: int, gap: int) -> list[tuple[int, int]]:
    dirs = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    pts = [(0, 0)]
    x = y = 0
    for i in range(segments):
        length = gap * (i // 2 + 1)
        dx, dy = dirs[i % 4]
        x, y = x + dx * length, y + dy * length
        pts.append((x, y))
    return pts


def _thicken(center: list[tuple[int, int]], half: int) -> list[tuple[int, int]]:
    """Outline of a rectilinear path widened by ``half`` on each side."""
    def normal(a, b):
        dx = (b[0] > a[0]) - (b[0] < a[0])
        dy = (b[1] > a[1]) - (b[1] < a[1])
        return (-dy, dx)

    normals = [normal(a, b) for a, b in zip(center, center[1:])]
    left, right = [], []
    for i, p in enumerate(center):
        ns = [normals[j] for j in (i - 1, i) if 0 <= j < len(normals)]
        ox = sum(n[0] for n in ns) * half
        oy = sum(n[1] for n in ns) * half
        left.append((p[0] + ox, p[1] + oy))
        right.append((p[0] - ox, p[1] - oy))
    return left + right[::-1]


def _spiral(n: int) -> tuple[list[tuple[int, int]], tuple[Fraction, Fraction]]:
    segments = max(8, n // 2 - 1)
    center = _spiral_centerline(segments, gap=6)
    outline = _thicken(center, half=2)
    # seed in the middle of the first corridor leg
    (x0, y0), (x1, y1) = center[0], center[1]
    return outline, (Fraction(x0 + x1, 2), Fraction(y0 + y1, 2) + Fraction(1, 3))


def _comb(n: int) -> tuple[list[tuple[int, int]], tuple[Fraction, Fraction]]:
    teeth = max(2, n // 4)
    tooth, gap, base, height = 6, 4, 6, 30
    width = teeth * tooth + (teeth - 1) * gap
    top = base + height
    pts = [(0, 0), (width, 0)]
    for j in range(teeth):
        xr = width - j * (tooth + gap)
        xl = xr - tooth
        pts += [(xr, top), (xl, top)]
        if j < teeth - 1:
            pts += [(xl, base), (xl - gap, base)]
    return pts, (Fraction(width, 2) + Fraction(1, 7), Fraction(base, 2) + Fraction(1, 5))


def _shear_for(pts) -> tuple[Fraction, Fraction]:
    span = max(max(abs(x), abs(y)) for x, y in pts)
    p = 2 * span + 1
    while any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        p += 1
    q = p + 2
    while any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
        q += 2
    return Fraction(1, p), Fraction(1, q)


_SEEDS: dict[tuple[str, int, int], Point] = {}


def gen_polygon(kind: str, n: int, seed: int = 0, retries: int = 50) -> Polygon:
    """Generate a valid polygon of the given ``kind``.

    ``star`` uses ``n`` vertices.  ``spiral`` and ``comb`` treat ``n`` as a
    size hint (corridor legs, teeth) and shear their rectilinear outline by
    a slope of ``1/p`` with ``p`` larger than every coordinate, which removes
    every shared coordinate and every axis-parallel edge at once.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown polygon kind {kind!r}; expected one of {KINDS}")
    if kind == "star":
        if n < 3:
            raise ValueError("a star polygon needs n >= 3")
        rng = random.Random(seed)
        for _ in range(retries):
            pts = _nudge(_star(n, rng), rng)
            if find_violations(pts):
                continue
            J = Polygon(tuple(pts))
            if classify(J, Point(Q(0), Q(0))) is Location.INSIDE:
                _SEEDS[(kind, n, seed)] = Point(Q(0), Q(0))
                return J
        raise GenerationFailed(f"no valid star polygon after {retries} attempts")

    if n < 8:
        raise ValueError(f"a {kind} polygon needs n >= 8")
    pts, (sx, sy) = _spiral(n) if kind == "spiral" else _comb(n)
    a, b = _shear_for(pts)
    verts = shear(pts, a, b)
    problems = find_violations(verts)
    if problems:
        raise GenerationFailed(f"{kind} outline invalid: {problems[0]}")
    J = Polygon(tuple(verts))
    (s,) = shear([(sx, sy)], a, b)
    if classify(J, s) is not Location.INSIDE:
        raise GenerationFailed(f"{kind} seed is not inside the outline")
    _SEEDS[(kind, n, seed)] = s
    return J


def default_seed(kind: str, n: int, seed: int = 0) -> Point:
    """Interior seed point for a generated polygon (the star centre, the spiral's core)."""
    key = (kind, n, seed)
    if key not in _SEEDS:
        gen_polygon(kind, n, seed)
    return _SEEDS[key]
