"""Instance files: a polygon and a seed point as JSON with exact numbers.

Coordinates may be JSON integers, JSON decimals (read from their text, never
through a float) or strings holding a decimal or a ``p/q`` fraction.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..exact_geom import Point, Q, Scalar, fmt
from ..jordan_curve import Location, Polygon, ValidationError, Violation, classify, validate

__all__ = ["ParseError", "Instance", "parse_instance", "emit_instance", "load_instance", "instance_hash"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class Instance:
    polygon: Polygon
    seed_point: Point


class _Decimal(str):
    """Marks a JSON number that had a fraction or exponent part."""


def _reject_constant(name: str):
    raise ParseError(f"non-finite number {name}")


def _scalar(value: Any, field: str) -> Scalar:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"expected an integer or a decimal string, got {json.dumps(value)}", field=field)
    if isinstance(value, int):
        return Q(value)
    try:
        return Q(Fraction(value.strip()))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact number: {value!r}", field=field) from None


def _pair(value: Any, field: str) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError("expected a pair [x, y]", field=field)
    return Point(_scalar(value[0], f"{field}[0]"), _scalar(value[1], f"{field}[1]"))


def parse_instance(text: str) -> Instance:
    """Parse and validate an instance.

    Raises :class:`ParseError` for malformed text and
    :class:`~greedysweep.jordan_curve.ValidationError` for a bad polygon or a
    seed on the curve.
    """
    try:
        data = json.loads(text, parse_float=_Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    for key in ("vertices", "seed_point"):
        if key not in data:
            raise ParseError("missing field", field=key)
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise ParseError("expected a list of pairs", field="vertices")
    verts = [_pair(v, f"vertices[{i}]") for i, v in enumerate(raw)]
    seed = _pair(data["seed_point"], "seed_point")
    J = validate(verts)
    if classify(J, seed) is Location.ON:
        raise ValidationError([Violation("SeedOnCurve", f"seed ({seed.x}, {seed.y}) lies on the polygon")])
    return Instance(J, seed)


def _num(q: Scalar):
    return int(q) if q.denominator == 1 else fmt(q)


def emit_instance(inst: Instance) -> str:
    """Canonical text; ``parse_instance(emit_instance(i)) == i``."""
    doc = {
        "vertices": [[_num(v.x), _num(v.y)] for v in inst.polygon.vertices],
        "seed_point": [_num(inst.seed_point.x), _num(inst.seed_point.y)],
    }
    return json.dumps(doc) + "\n"


def instance_hash(inst: Instance) -> str:
    return hashlib.sha256(emit_instance(inst).encode()).hexdigest()


def load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
