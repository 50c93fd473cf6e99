"""
Rim of the Knight's Visor at any fold angle.
"""

from fold3d.cone import cone_angle, cone_rim_point, cone_rim_points, sample_cone_rim
from fold3d.constraint_solver import constraint_residuals, visor_point_3d_numeric
from fold3d.kinematics import (
    front_anchor,
    medial_plane,
    sample_fold_curve,
    specialise,
    vertical_plane,
    visor_point_3d,
    visor_points_3d,
)
from fold3d.primitives import FoldAngle, Plane3, Point3, Polyline3, check_fold_angle

__all__ = [
    "FoldAngle",
    "Plane3",
    "Point3",
    "Polyline3",
    "check_fold_angle",
    "cone_angle",
    "cone_rim_point",
    "cone_rim_points",
    "constraint_residuals",
    "front_anchor",
    "medial_plane",
    "sample_cone_rim",
    "sample_fold_curve",
    "specialise",
    "vertical_plane",
    "visor_point_3d",
    "visor_point_3d_numeric",
    "visor_points_3d",
]
