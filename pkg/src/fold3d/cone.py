"""
Cone swept by a rib as it turns about its base crease.

The rib tip stays on a semicircle perpendicular to the card back: centre
c = reflection_midpoint(s), radius rho = 1 - s^2, running from a (theta = 0) to the
flat reflected tip a' (theta = pi).
"""

from typing import Tuple

import numpy as np

from curves.flat_visor import reflection_midpoint
from curves.primitives import RibParam, check_rib_param
from fold3d.kinematics import visor_point_3d
from fold3d.primitives import FoldAngle, Point3, Polyline3
from utils.exceptions import DegenerateRibError, DomainError

_Z = np.array([0.0, 0.0, 1.0])


def _cone_frame(s: RibParam) -> Tuple[np.ndarray, float, np.ndarray]:
    s_val = float(check_rib_param(s))
    if abs(s_val) == 1.0:
        raise DegenerateRibError(f"Zero-length rib at s={s_val} sweeps no cone.")
    c = np.array([*reflection_midpoint(s_val), 0.0])
    a = np.array([s_val, 0.0, 0.0])
    rho = 1.0 - s_val * s_val
    return c, rho, (a - c) / rho


def cone_rim_points(s: RibParam, theta) -> np.ndarray:
    """Vectorised :func:`cone_rim_point` over theta, shape (N, 3)."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any(theta < 0.0) or np.any(theta > np.pi):
        raise DomainError(f"Cone angle must lie in [0, pi], got {theta!r}.")
    c, rho, u = _cone_frame(s)
    return c + rho * (np.cos(theta)[:, None] * u + np.sin(theta)[:, None] * _Z)


def cone_rim_point(s: RibParam, theta: float) -> Point3:
    """
    Point on the cone rim semicircle at angle theta.

    Raises:
        DegenerateRibError: If |s| = 1.
        DomainError: If theta is outside [0, pi].
    """
    x, y, z = cone_rim_points(s, theta)[0]
    return Point3(float(x), float(y), float(z))


def sample_cone_rim(s: RibParam, n: int) -> Polyline3:
    """Sample the semicircle from a (theta = 0) to a' (theta = pi)."""
    theta = np.linspace(0.0, np.pi, int(n))
    return Polyline3(params=theta, points=cone_rim_points(s, theta))


def cone_angle(s: RibParam, alpha: FoldAngle) -> float:
    """
    Angle theta at which the cone rim passes through the rim point p(alpha, s).

    Runs from pi at alpha = 0 down to 0 at alpha = pi.
    """
    c, _, u = _cone_frame(s)
    offset = np.asarray(visor_point_3d(s, alpha)) - c
    return float(np.arctan2(offset @ _Z, offset @ u))
