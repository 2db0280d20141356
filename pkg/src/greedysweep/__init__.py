"""Exact greedy sweepline engine for the face of a simple polygon."""
from .exact_geom import Edge, Point, Q, Scalar, orient, shoelace_area
from .greedy_driver import Config, HaltReason, RunResult, run
from .jordan_curve import Polygon, classify, validate

__version__ = "0.1.0"

__all__ = [
    "Config",
    "Edge",
    "HaltReason",
    "Point",
    "Polygon",
    "Q",
    "RunResult",
    "Scalar",
    "classify",
    "orient",
    "run",
    "shoelace_area",
    "validate",
]
