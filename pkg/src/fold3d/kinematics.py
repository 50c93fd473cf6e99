"""
Closed-form rim of the folded card.

For a rib at s and fold angle alpha the rim point p(alpha, s) lies on two spheres of
radius r = sqrt(1 - s^2) centred on the rib bases b (card back) and b1 (card front),
on the medial plane at angle alpha/2, and on the vertical plane through a and a'.
"""

from typing import Callable, Tuple, Union

import numpy as np

from curves.flat_visor import rib_lengths
from curves.primitives import RibParam, check_rib_param
from curves.sampling import Grid, rib_grid
from fold3d.primitives import FoldAngle, Plane3, Point3, Polyline3, check_fold_angle
from utils.exceptions import DegenerateRibError
from utils.helpers import get_logger

logger = get_logger(__name__)


def front_anchor(s: RibParam, alpha: FoldAngle) -> Point3:
    """
    Rib base on the card front, b1 = (s, r cos alpha, r sin alpha).

    At alpha = 0 this is the back rib base; at alpha = pi it is (s, -r, 0).
    """
    s_arr = check_rib_param(s)
    a = check_fold_angle(alpha)
    r = float(rib_lengths(s_arr))
    return Point3(float(s_arr), r * float(np.cos(a)), r * float(np.sin(a)))


def medial_plane(alpha: FoldAngle) -> Plane3:
    """
    Plane through the x-axis at angle alpha/2 to the card back:
    z cos(alpha/2) - y sin(alpha/2) = 0.
    """
    half = 0.5 * float(check_fold_angle(alpha))
    return Plane3((0.0, -np.sin(half), np.cos(half)), 0.0)


def vertical_plane(s: RibParam) -> Plane3:
    """
    Vertical plane V through a = (s, 0, 0) and a': r x - s y = r s.

    Raises:
        DegenerateRibError: If |s| = 1, where a, b and a' coincide.
    """
    s_arr = check_rib_param(s)
    r = float(rib_lengths(s_arr))
    if r == 0.0:
        raise DegenerateRibError(f"Vertical plane undefined for zero-length rib s={s}.")
    return Plane3((r, -float(s_arr), 0.0), r * float(s_arr))


def visor_points_3d(s, alpha) -> np.ndarray:
    """
    Vectorised closed-form rim; ``s`` and ``alpha`` broadcast, result shape (..., 3).

    z uses 2(1 - s^2)^(3/2) sin(alpha) / D instead of tan(alpha/2) y so the
    expression stays finite at alpha = pi. Zero-length ribs map to (s, 0, 0).
    """
    s = check_rib_param(s)
    alpha = check_fold_angle(alpha)
    s, alpha = np.broadcast_arrays(s, alpha)
    s2 = s * s
    r2 = np.clip(1.0 - s2, 0.0, None)
    cos_a = np.cos(alpha)
    denom = s2 * cos_a - s2 + 2.0
    degenerate = r2 == 0.0
    safe = np.where(degenerate, 1.0, denom)
    x = -s * ((s2 - 2.0) * cos_a + 3.0 * s2 - 4.0) / safe
    y = 4.0 * r2**1.5 * np.cos(0.5 * alpha) ** 2 / safe
    z = 2.0 * r2**1.5 * np.sin(alpha) / safe
    x = np.where(degenerate, s, x)
    y = np.where(degenerate, 0.0, y)
    z = np.where(degenerate, 0.0, z)
    return np.stack([x, y, z], axis=-1)


def visor_point_3d(s: RibParam, alpha: FoldAngle) -> Point3:
    """
    Rim point p(alpha, s) from the closed form.

    alpha = pi collapses the rim onto the diameter (s, 0, 0); alpha = 0 gives the
    flat visor curve in the plane z = 0.
    """
    x, y, z = visor_points_3d(s, alpha)
    return Point3(float(x), float(y), float(z))


def sample_fold_curve(
    alpha: FoldAngle, n: int, grid: Union[str, Grid] = Grid.UNIFORM_ANGLE
) -> Polyline3:
    """
    Sample the rim at fold angle alpha over s in [-1, 1].

    Raises:
        ArgumentError: If n < 2 or the grid is unknown.
        DomainError: If alpha is outside [0, pi].
    """
    s = rib_grid(n, grid)
    points = visor_points_3d(s, alpha)
    logger.debug(f"Sampled rim at alpha={float(alpha):.6f} with {n} points.")
    return Polyline3(params=s, points=points)


def specialise(alpha: FoldAngle) -> Tuple[Callable, Callable, Callable]:
    """
    Substitute a fixed alpha into the closed form, keeping the denominator.

    Returns three functions of s giving x, y, z. With alpha = pi/3 the denominator
    is 2 - s^2/2, so y(0) = 3/2.
    """
    a = float(check_fold_angle(alpha))
    cos_a, cos_half_sq, sin_a = np.cos(a), np.cos(0.5 * a) ** 2, np.sin(a)

    def denom(s):
        s2 = np.asarray(s, dtype=float) ** 2
        return s2 * cos_a - s2 + 2.0

    def x_of(s):
        s = np.asarray(s, dtype=float)
        return -s * ((s * s - 2.0) * cos_a + 3.0 * s * s - 4.0) / denom(s)

    def y_of(s):
        r2 = 1.0 - np.asarray(s, dtype=float) ** 2
        return 4.0 * r2**1.5 * cos_half_sq / denom(s)

    def z_of(s):
        r2 = 1.0 - np.asarray(s, dtype=float) ** 2
        return 2.0 * r2**1.5 * sin_a / denom(s)

    return x_of, y_of, z_of
