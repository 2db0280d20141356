"""scikit-learn style front end.

``fit`` runs the sweep on a polygon and a seed point, ``predict`` answers
membership queries against the swept region.  Coordinates stay exact: ints,
fractions and decimal strings convert as usual, and floats are taken at
their exact binary value.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exact_geom import Point, Q, Scalar, shoelace_area
from .greedy_driver import STRATEGIES, Config, run
from .jordan_curve import validate
from .verify import deficit, diameter_eps

__all__ = ["GreedySweepline", "check_coordinate", "check_points"]


def check_coordinate(value) -> Scalar:
    """One coordinate as an exact rational; rejects nan, inf and booleans."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"coordinate {value!r} is not finite")
        return Q(Fraction(value))
    return Q(value)


def check_points(X, name: str = "X", min_rows: int = 0) -> list[Point]:
    """A sequence of (x, y) rows as exact points."""
    rows = X.tolist() if isinstance(X, np.ndarray) else list(X)
    out = []
    for i, row in enumerate(rows):
        if isinstance(row, (str, bytes)) or len(row) != 2:
            raise ValueError(f"{name}[{i}] must be an (x, y) pair")
        out.append(Point(check_coordinate(row[0]), check_coordinate(row[1])))
    if len(out) < min_rows:
        raise ValueError(f"{name} needs at least {min_rows} rows, got {len(out)}")
    return out


class GreedySweepline(BaseEstimator):
    """Greedy sweepline region of the face of a polygon containing a seed.

    Parameters
    ----------
    eps : rational or None
        Stop once every open wall is shorter.  ``None`` means diameter/1000.
    max_steps : int
        Cap on the number of sweeps.
    strategy : str
        Wall selection rule, one of ``greedy``, ``fifo``, ``lifo``, ``random``.
    random_state : int
        Seed for the ``random`` strategy.
    """

    def __init__(self, eps=None, max_steps=10_000, strategy="greedy", random_state=0):
        self.eps = eps
        self.max_steps = max_steps
        self.strategy = strategy
        self.random_state = random_state

    def fit(self, X, y=None, seed_point=None):
        if seed_point is None:
            raise ValueError("fit needs a seed_point inside the polygon")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        polygon = validate(check_points(X, "X", min_rows=3))
        (seed,) = check_points([seed_point], "seed_point")
        eps = diameter_eps(polygon) if self.eps is None else check_coordinate(self.eps)
        cfg = Config(eps=eps, max_steps=int(self.max_steps), strategy=self.strategy, random_seed=int(self.random_state))
        res = run(polygon, seed, cfg)
        self.polygon_ = polygon
        self.seed_point_ = seed
        self.eps_ = eps
        self.result_ = res
        self.area_ = res.region.area
        self.deficit_ = deficit(res, polygon)
        self.n_sweeps_ = res.sweep_count
        self.halt_reason_ = res.halt_reason.value
        self.walls_ = np.array(
            [[float(w.x), float(w.seg.y_lo), float(w.seg.y_hi)] for w in res.region.wall_index], dtype=float
        ).reshape(-1, 3)
        return self

    def predict(self, X) -> np.ndarray:
        """True for each point the swept region contains."""
        check_is_fitted(self, "result_")
        region = self.result_.region
        return np.array([region.contains(p) for p in check_points(X)], dtype=bool)

    def score(self, X=None, y=None) -> float:
        """Accuracy of ``predict`` against ``y``; without ``y``, the swept share of the area."""
        check_is_fitted(self, "result_")
        if y is None:
            return float(self.area_ / shoelace_area(self.polygon_.vertices))
        pred = self.predict(X)
        return float(np.mean(pred == np.asarray(y, dtype=bool)))
