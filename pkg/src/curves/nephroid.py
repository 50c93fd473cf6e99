"""
Implicit and alternative forms of the nephroid traced by the flat visor curve.
"""

import numpy as np

from curves.primitives import Point2, PointLike, Polyline2
from utils.exceptions import DomainError


def _xy(p) -> tuple:
    arr = np.asarray(p, dtype=float)
    return arr[..., 0], arr[..., 1]


def implicit_residual(p: PointLike):
    """
    Cubic implicit form (x^2 + y^2 - 1)^3 - (27/4) y^2.

    Zero exactly on the nephroid. Accepts a single point or an (N, 2) array.
    """
    x, y = _xy(p)
    value = (x * x + y * y - 1.0) ** 3 - 6.75 * y * y
    return float(value) if np.ndim(value) == 0 else value


def two_thirds_residual(p: PointLike):
    """
    Two-thirds form x^2 + y^2 - 3(y/2)^(2/3) - 1 on the upper half-plane.

    Raises:
        DomainError: If any y < 0 (the real cube-root branch is upper-half only).
    """
    x, y = _xy(p)
    if np.any(y < 0):
        raise DomainError("The two-thirds form is defined for y >= 0 only.")
    value = x * x + y * y - 3.0 * np.cbrt((0.5 * y) ** 2) - 1.0
    return float(value) if np.ndim(value) == 0 else value


def nephroid_standard_residual(p: PointLike, t: float):
    """
    Standard nephroid form (x^2 + y^2 - 4t^2)^3 - 108 t^4 y^2.

    For t = 1/2 this is identical to :func:`implicit_residual`.

    Raises:
        DomainError: If t <= 0.
    """
    if not t > 0:
        raise DomainError(f"Nephroid scale t must be positive, got {t}.")
    x, y = _xy(p)
    value = (x * x + y * y - 4.0 * t * t) ** 3 - 108.0 * t**4 * y * y
    return float(value) if np.ndim(value) == 0 else value


def epicycloid_points(t) -> np.ndarray:
    """Vectorised :func:`epicycloid_point`, shape (N, 2)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    x = 0.5 * (3.0 * np.cos(t) - np.cos(3.0 * t))
    y = 0.5 * (3.0 * np.sin(t) - np.sin(3.0 * t))
    return np.column_stack([x, y])


def epicycloid_point(t: float) -> Point2:
    """
    Trace of a point on a radius-1/2 circle rolling outside the unit circle.

    ``t`` is the polar angle of the rolling circle's centre; t in [0, pi] gives
    the upper half, where the point equals the flat visor point at s = cos t.
    """
    x, y = epicycloid_points(t)[0]
    return Point2(float(x), float(y))


def rolling_circle_center(t: float) -> Point2:
    """Centre of the rolling circle at angle t: distance 3/2 from the origin."""
    return Point2(1.5 * float(np.cos(t)), 1.5 * float(np.sin(t)))


def mirror_over_axis(c: Polyline2) -> Polyline2:
    """Reflect a polyline over the x-axis, keeping its parameters."""
    points = np.array(c.points, dtype=float)
    points[:, 1] = -points[:, 1]
    return Polyline2(params=c.params.copy(), points=points)
