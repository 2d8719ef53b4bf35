"""Geometry of the log-euclidean plane (the flat cone of total angle 4 pi)."""

import json

from ._core import (
    EPSILON,
    Line,
    LogEuclidError,
    SurfacePoint,
    between,
    corresponds,
    distance,
    geodesic_point_at,
    line_from_json,
    line_through,
    mesh_distance,
    on_line,
    point_from_json,
    transform_point,
)
from . import _core

__all__ = [
    "EPSILON",
    "Line",
    "LogEuclidError",
    "SurfacePoint",
    "between",
    "corresponds",
    "counterexample",
    "distance",
    "geodesic",
    "geodesic_point_at",
    "intersection",
    "line_from_json",
    "line_through",
    "mesh_distance",
    "on_line",
    "point_from_json",
    "render_svg",
    "run_axiom_suite",
    "transform_point",
    "triangle",
    "verify_counterexample",
]


def geodesic(p, q):
    return json.loads(_core.geodesic_json(p, q))


def intersection(l1, l2):
    return json.loads(_core.intersection_json(l1, l2))


def triangle(a, b, c):
    return json.loads(_core.triangle_json(a, b, c))


def run_axiom_suite(model="log-euclidean", seed=42, trials=1000, axioms="all"):
    if not isinstance(axioms, str):
        axioms = ",".join(axioms)
    return json.loads(_core.run_axiom_suite_json(model, seed, trials, axioms))


def counterexample(name):
    return json.loads(_core.counterexample_json(name))


def verify_counterexample(witness):
    return _core.verify_counterexample_json(json.dumps(witness))


def render_svg(spec):
    return _core.render_svg_json(json.dumps(spec))
