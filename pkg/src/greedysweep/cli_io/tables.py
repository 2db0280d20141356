"""CSV tables for convergence studies and strategy comparisons.

Exact values are written as ``num/den`` text next to a float column that is
only there for plotting.
"""
from __future__ import annotations

import csv
import io
from typing import Sequence

from ..exact_geom import fmt
from ..verify import ConvergenceRow, SeriesPoint

__all__ = ["convergence_csv", "comparison_csv"]


def _opt(q) -> str:
    return "" if q is None else fmt(q)


def _flt(q) -> str:
    return "" if q is None else repr(float(q))


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["eps", "sweeps", "deficit", "deficit_float", "max_wall_final", "halt_reason"])
    for r in rows:
        out.writerow([fmt(r.eps), r.sweeps, fmt(r.deficit), _flt(r.deficit), _opt(r.max_wall_final), r.halt_reason.value])
    return buf.getvalue()


def comparison_csv(series: dict[str, Sequence[SeriesPoint]]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["strategy", "step", "deficit", "deficit_float", "max_wall", "max_wall_float"])
    for name, points in series.items():
        for p in points:
            out.writerow([name, p.step, fmt(p.deficit), _flt(p.deficit), _opt(p.max_wall), _flt(p.max_wall)])
    return buf.getvalue()
