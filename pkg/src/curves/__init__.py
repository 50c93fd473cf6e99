"""
Exact plane constructions of the flat visor curve and its nephroid forms.
"""

from curves.flat_visor import (
    flat_visor_point,
    flat_visor_points,
    perpendicular_line,
    reflect_rib_tip,
    reflection_midpoint,
    reflection_midpoints,
    rib_base,
    rib_bases,
    rib_length,
    rib_lengths,
    tangent_line,
)
from curves.nephroid import (
    epicycloid_point,
    epicycloid_points,
    implicit_residual,
    mirror_over_axis,
    nephroid_standard_residual,
    rolling_circle_center,
    two_thirds_residual,
)
from curves.primitives import Line2, Point2, Polyline, Polyline2, RibParam
from curves.sampling import Grid, interval_grid, rib_grid, sample_flat_curve

__all__ = [
    "Grid",
    "Line2",
    "Point2",
    "Polyline",
    "Polyline2",
    "RibParam",
    "epicycloid_point",
    "epicycloid_points",
    "flat_visor_point",
    "flat_visor_points",
    "implicit_residual",
    "interval_grid",
    "mirror_over_axis",
    "nephroid_standard_residual",
    "perpendicular_line",
    "reflect_rib_tip",
    "reflection_midpoint",
    "reflection_midpoints",
    "rib_base",
    "rib_bases",
    "rib_grid",
    "rib_length",
    "rib_lengths",
    "rolling_circle_center",
    "sample_flat_curve",
    "tangent_line",
    "two_thirds_residual",
]
