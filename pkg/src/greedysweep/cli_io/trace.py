"""JSON-lines run traces.

The first line is a header (config, seeds, instance hash, the initial sweep
and the halt reason); every later line is one step.  Rationals are written
as ``"num/den"`` strings and keys keep a fixed order, so equal runs give
equal bytes.
"""
from __future__ import annotations

import json
from typing import IO, Optional

from ..exact_geom import Point, Q, fmt
from ..greedy_driver import OnWall, RunResult, StepRecord
from ..horizontal_sweep import HSegment, OnJ
from ..swept_region import Wall
from .instance import Instance, ParseError, instance_hash

__all__ = ["TRACE_FORMAT", "emit_trace", "trace_text", "read_trace", "segment_of"]

TRACE_FORMAT = "greedysweep-trace/1"


def _pt(p: Point) -> list[str]:
    return [fmt(p.x), fmt(p.y)]


def _wall(w: Wall) -> dict:
    return {
        "id": w.id,
        "x": fmt(w.seg.x),
        "y_lo": fmt(w.seg.y_lo),
        "y_hi": fmt(w.seg.y_hi),
        "length": fmt(w.length),
        "swept_side": w.swept_side,
        "origin_step": w.origin_step,
    }


def _segment(t: HSegment) -> dict:
    return {"y": fmt(t.y), "x_lo": fmt(t.x_lo), "x_hi": fmt(t.x_hi)}


def _terminus(term) -> dict:
    if isinstance(term, OnWall):
        return {"kind": "OnWall", "wall_id": term.wall_id, "point": _pt(term.point)}
    assert isinstance(term, OnJ)
    return {"kind": "OnJ", "edge": term.at.edge_index, "t": fmt(term.at.t), "point": _pt(term.at.point)}


def _step(rec: StepRecord) -> dict:
    return {
        "type": "step",
        "step": rec.step,
        "wall_used": _wall(rec.wall_used),
        "midpoint": _pt(rec.midpoint),
        "t": _segment(rec.t),
        "terminus": _terminus(rec.terminus),
        "walls_added": [_wall(w) for w in rec.walls_added],
        "walls_removed": [w.id for w in rec.walls_removed],
        "cycle_event": rec.cycle_event,
        "area_after": fmt(rec.area_after),
        "max_wall_after": None if rec.max_wall_after is None else fmt(rec.max_wall_after),
        "parent_step": rec.parent_step,
    }


def _header(res: RunResult, generator: Optional[dict]) -> dict:
    cfg = res.config
    return {
        "type": "header",
        "format": TRACE_FORMAT,
        "config": {
            "eps": fmt(cfg.eps),
            "max_steps": cfg.max_steps,
            "strategy": cfg.strategy,
            "random_seed": cfg.random_seed,
        },
        "strategy": cfg.strategy,
        "seeds": {"random_seed": cfg.random_seed, "generator": generator},
        "seed_point": _pt(res.seed),
        "instance_sha256": instance_hash(Instance(res.polygon, res.seed)),
        "init": {
            "step": 1,
            "t": _segment(res.initial_sweep.t),
            "walls": [_wall(w) for w in res.initial_walls],
            "area": fmt(res.initial_sweep.area),
        },
        "halt_reason": res.halt_reason.value,
        "sweep_count": res.sweep_count,
        "area": fmt(res.region.area),
    }


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def emit_trace(res: RunResult, sink: IO[str], generator: Optional[dict] = None) -> None:
    """Write the header and one line per step after the first to ``sink``."""
    sink.write(_dump(_header(res, generator)))
    for rec in res.trace:
        sink.write(_dump(_step(rec)))


def trace_text(res: RunResult, generator: Optional[dict] = None) -> str:
    lines = [_dump(_header(res, generator))]
    lines += [_dump(_step(rec)) for rec in res.trace]
    return "".join(lines)


def read_trace(text: str) -> tuple[dict, list[dict]]:
    """Split trace text into its header and step records."""
    records = []
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=n) from None
    if not records or records[0].get("type") != "header" or records[0].get("format") != TRACE_FORMAT:
        raise ParseError("trace does not start with a header line", line=1)
    steps = records[1:]
    for n, rec in enumerate(steps, 2):
        if rec.get("type") != "step":
            raise ParseError("expected a step record", line=n)
    return records[0], steps


def segment_of(rec: dict) -> HSegment:
    """The extension segment stored in a header's init block or a step record."""
    t = rec["t"]
    return HSegment(Q(t["y"]), Q(t["x_lo"]), Q(t["x_hi"]))
