"""
Flat visor curve: the rim of the card at full closure.

A rib is the segment from a = (s, 0) to b = (s, r) on the unit circle, r = sqrt(1 - s^2).
Closing the card reflects a across the tangent to the circle at b; the reflected tip
a' traces the flat visor curve. Scalar functions return named points, the ``*_points``
variants are vectorised over arrays of s.
"""

import numpy as np

from curves.primitives import Line2, Point2, RibParam, check_rib_param


def _rib_lengths(s: np.ndarray) -> np.ndarray:
    # clip guards against 1 - s*s rounding to -0.0 at |s| == 1
    return np.sqrt(np.clip(1.0 - s * s, 0.0, None))


def rib_lengths(s) -> np.ndarray:
    """Vectorised :func:`rib_length`."""
    return _rib_lengths(check_rib_param(s))


def rib_length(s: RibParam) -> float:
    """
    Length r = sqrt(1 - s^2) of the rib at s.

    Raises:
        DomainError: If |s| > 1 (rib outside disk).
    """
    return float(rib_lengths(s))


def rib_bases(s) -> np.ndarray:
    """Rib base points b = (s, r) on the unit circle, shape (N, 2)."""
    s = np.atleast_1d(check_rib_param(s))
    return np.column_stack([s, _rib_lengths(s)])


def rib_base(s: RibParam) -> Point2:
    """Point b = (s, sqrt(1 - s^2)) where the rib meets the circle."""
    x, y = rib_bases(s)[0]
    return Point2(float(x), float(y))


def tangent_line(s: RibParam) -> Line2:
    """
    Tangent to the unit circle at the rib base, as s*x + r*y = 1.

    The radial direction (s, r) is the normal, so the form stays valid at r = 0
    where it becomes the vertical line x = +/-1.
    """
    s_arr = check_rib_param(s)
    return Line2(float(s_arr), float(_rib_lengths(s_arr)), 1.0)


def perpendicular_line(s: RibParam) -> Line2:
    """
    Line through a = (s, 0) perpendicular to the tangent, r*x - s*y = r*s.

    Degenerates to y = 0 at |s| = 1, where a already lies on the tangent.
    """
    s_arr = check_rib_param(s)
    s_val = float(s_arr)
    r = float(_rib_lengths(s_arr))
    if r == 0.0:
        return Line2(0.0, 1.0, 0.0)
    return Line2.through((s_val, 0.0), (s_val, r))


def reflection_midpoints(s) -> np.ndarray:
    """Vectorised :func:`reflection_midpoint`, shape (N, 2)."""
    s = np.atleast_1d(check_rib_param(s))
    r2 = np.clip(1.0 - s * s, 0.0, None)
    return np.column_stack([s * (2.0 - s * s), r2 ** 1.5])


def reflection_midpoint(s: RibParam) -> Point2:
    """
    Midpoint c = (s(2 - s^2), (1 - s^2)^(3/2)) of a and its reflection a'.

    c is the foot of the perpendicular from a onto the tangent line; at |s| = 1
    it coincides with a = (+/-1, 0).
    """
    x, y = reflection_midpoints(s)[0]
    return Point2(float(x), float(y))


def flat_visor_points(s) -> np.ndarray:
    """Vectorised :func:`flat_visor_point`, shape (N, 2)."""
    s = np.atleast_1d(check_rib_param(s))
    r2 = np.clip(1.0 - s * s, 0.0, None)
    return np.column_stack([s * (3.0 - 2.0 * s * s), 2.0 * r2 ** 1.5])


def flat_visor_point(s: RibParam) -> Point2:
    """
    Reflected rib tip a' = (s(3 - 2s^2), 2(1 - s^2)^(3/2)).

    Closed form of 2c - a; returns (+/-1, 0) for the zero-length ribs without
    attempting a reflection.
    """
    x, y = flat_visor_points(s)[0]
    return Point2(float(x), float(y))


def reflect_rib_tip(s: RibParam) -> Point2:
    """
    Reflect a = (s, 0) across the tangent line by perpendicular-foot doubling.

    Geometric counterpart of :func:`flat_visor_point`, used as its oracle.
    """
    s_val = float(check_rib_param(s))
    return tangent_line(s_val).reflect((s_val, 0.0))
