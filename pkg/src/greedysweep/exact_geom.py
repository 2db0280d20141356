"""Exact rational kernel: scalars, points, edges and the primitive predicates.

Every coordinate in the package is a ``gmpy2.mpq``.  Nothing in the core ever
touches a float; floats only appear when rendering pictures or building
conservative lookup buckets.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from gmpy2 import mpq

Scalar = type(mpq())

__all__ = [
    "Scalar",
    "Q",
    "fmt",
    "Point",
    "Edge",
    "orient",
    "edge_y_at_x",
    "edge_x_at_y",
    "shoelace_area",
    "signed_area2",
    "midpoint",
]


def Q(value) -> Scalar:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions, mpq and text such as ``"3"``, ``"-0.125"`` or
    ``"7/3"``.  Floats are rejected: a float literal in an instance file is
    almost always a decimal the author meant exactly, so callers must pass
    the text instead.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, numbers.Integral):
        return mpq(int(value))
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, numbers.Rational):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        text = value.strip()
        if not text or text.lower().lstrip("+-") in {"nan", "inf", "infinity"}:
            raise ValueError(f"not a finite rational: {value!r}")
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a finite rational: {value!r}") from exc
        return mpq(frac.numerator, frac.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fmt(q: Scalar) -> str:
    """Render as ``num/den`` (or ``num`` for integers); ``Q(fmt(q)) == q``."""
    return str(q)


class Point(NamedTuple):
    x: Scalar
    y: Scalar

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Q(x), Q(y))


class Edge(NamedTuple):
    a: Point
    b: Point

    @property
    def x_range(self) -> tuple[Scalar, Scalar]:
        return (self.a.x, self.b.x) if self.a.x < self.b.x else (self.b.x, self.a.x)

    @property
    def y_range(self) -> tuple[Scalar, Scalar]:
        return (self.a.y, self.b.y) if self.a.y < self.b.y else (self.b.y, self.a.y)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear."""
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (det > 0) - (det < 0)


def edge_y_at_x(e: Edge, x: Scalar) -> Optional[Scalar]:
    """Height of non-vertical edge ``e`` at abscissa ``x`` (endpoints included)."""
    lo, hi = e.x_range
    if x < lo or x > hi:
        return None
    if x == e.a.x:
        return e.a.y
    if x == e.b.x:
        return e.b.y
    return e.a.y + (e.b.y - e.a.y) * (x - e.a.x) / (e.b.x - e.a.x)


def edge_x_at_y(e: Edge, y: Scalar) -> Optional[Scalar]:
    """Abscissa of non-horizontal edge ``e`` at height ``y`` (endpoints included)."""
    lo, hi = e.y_range
    if y < lo or y > hi:
        return None
    if y == e.a.y:
        return e.a.x
    if y == e.b.y:
        return e.b.x
    return e.a.x + (e.b.x - e.a.x) * (y - e.a.y) / (e.b.y - e.a.y)


def signed_area2(vertices: Sequence[Point]) -> Scalar:
    """Twice the signed shoelace area (positive for counterclockwise order)."""
    n = len(vertices)
    total = mpq(0)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def shoelace_area(vertices: Sequence[Point]) -> Scalar:
    if len(vertices) < 3:
        raise ValueError("shoelace_area needs at least 3 vertices")
    return abs(signed_area2(vertices)) / 2


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)
