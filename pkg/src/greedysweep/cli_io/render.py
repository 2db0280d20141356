"""SVG pictures of a run: outline, sweeps, open walls and extension segments.

A picture can be drawn from a live :class:`RunResult` or rebuilt from an
instance and its trace, which always gives the same bytes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from ..exact_geom import Point, Q, Scalar
from ..greedy_driver import RunResult
from ..horizontal_sweep import HSegment, build_sweep
from ..jordan_curve import Polygon
from .trace import segment_of

__all__ = ["RenderOptions", "Picture", "picture_of_run", "picture_of_trace", "render_svg", "draw"]


@dataclass(frozen=True)
class RenderOptions:
    size: int = 800
    margin: int = 20
    hide_walls: bool = False
    show_extensions: bool = True
    title: Optional[str] = None


@dataclass
class Picture:
    polygon: Polygon
    sweeps: list[tuple[int, list[tuple[Point, ...]]]] = field(default_factory=list)
    walls: list[tuple[Scalar, Scalar, Scalar]] = field(default_factory=list)
    extensions: list[tuple[int, HSegment, Point]] = field(default_factory=list)


def picture_of_run(res: RunResult) -> Picture:
    pic = Picture(res.polygon)
    pic.sweeps = [(s.step_id, s.trapezoids()) for s in res.region.sweeps]
    pic.walls = [w.seg.key for w in res.region.walls.values()]
    pic.extensions = [(rec.step, rec.t, rec.midpoint) for rec in res.trace]
    return pic


def picture_of_trace(J: Polygon, header: dict, steps: list[dict]) -> Picture:
    """Rebuild the picture from trace records, re-sweeping each stored segment."""
    pic = Picture(J)
    pic.sweeps.append((1, build_sweep(J, segment_of(header["init"]), 1).trapezoids()))
    live = {w["id"]: w for w in header["init"]["walls"]}
    for rec in steps:
        k = rec["step"]
        t = segment_of(rec)
        pic.sweeps.append((k, build_sweep(J, t, k).trapezoids()))
        pic.extensions.append((k, t, Point(Q(rec["midpoint"][0]), Q(rec["midpoint"][1]))))
        for wid in rec["walls_removed"]:
            live.pop(wid, None)
        live.update((w["id"], w) for w in rec["walls_added"])
    pic.walls = [(Q(w["x"]), Q(w["y_lo"]), Q(w["y_hi"])) for _, w in sorted(live.items())]
    return pic


class _Frame:
    def __init__(self, J: Polygon, opts: RenderOptions):
        b = J.bbox
        self.x0, self.y1 = float(b.x_min), float(b.y_max)
        w, h = float(b.x_max - b.x_min), float(b.y_max - b.y_min)
        inner = opts.size - 2 * opts.margin
        self.k = inner / max(w, h)
        self.m = opts.margin
        self.width = round(w * self.k) + 2 * opts.margin
        self.height = round(h * self.k) + 2 * opts.margin

    def xy(self, x, y) -> str:
        return f"{self.m + (float(x) - self.x0) * self.k:.3f},{self.m + (self.y1 - float(y)) * self.k:.3f}"

    def pts(self, points) -> str:
        return " ".join(self.xy(p.x, p.y) for p in points)


def draw(pic: Picture, opts: RenderOptions = RenderOptions()) -> str:
    f = _Frame(pic.polygon, opts)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{f.width}" height="{f.height}" '
        f'viewBox="0 0 {f.width} {f.height}">'
    ]
    if opts.title:
        out.append(f"<title>{escape(opts.title)}</title>")
    out.append('<g id="sweeps" fill="#9ecae1" fill-opacity="0.55" stroke="#3182bd" stroke-width="0.5">')
    for step, quads in pic.sweeps:
        out.append(f'<g class="sweep" data-step="{step}">')
        out += [f'<polygon points="{f.pts(q)}"/>' for q in quads]
        out.append("</g>")
    out.append("</g>")
    out.append(
        f'<polygon id="curve" points="{f.pts(pic.polygon.vertices)}" fill="none" stroke="#000" stroke-width="1.5"/>'
    )
    if not opts.hide_walls:
        out.append('<g id="walls" stroke="#e6550d" stroke-width="2">')
        for x, lo, hi in pic.walls:
            a, b = f.xy(x, lo).split(","), f.xy(x, hi).split(",")
            out.append(f'<line class="wall" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        out.append("</g>")
    if opts.show_extensions:
        out.append('<g id="extensions" stroke="#31a354" stroke-width="1" fill="#31a354">')
        for step, t, mid in pic.extensions:
            a, b = f.xy(t.x_lo, t.y).split(","), f.xy(t.x_hi, t.y).split(",")
            c = f.xy(mid.x, mid.y).split(",")
            out.append(
                f'<g class="extension" data-step="{step}">'
                f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>'
                f'<circle class="midpoint" cx="{c[0]}" cy="{c[1]}" r="2.5"/></g>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(res: RunResult, J: Optional[Polygon] = None, options: RenderOptions = RenderOptions()) -> str:
    pic = picture_of_run(res)
    if J is not None:
        pic.polygon = J
    return draw(pic, options)
