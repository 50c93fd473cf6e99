"""
Catacaustic of rays parallel to the ribs reflecting inside the unit circle.

Rays travel along +y, hit the mirror at the rib base b = (s, r) and reflect about
the radial normal. Their envelope is a nephroid of half the size, turned a quarter
turn, with its cusps at (0, +/-1/2):

    (4x^2 + 4y^2 - 1)^3 = 27 x^2
"""

from typing import Tuple

import numpy as np

from curves.flat_visor import rib_base
from curves.primitives import Line2, Point2, PointLike, RibParam, check_rib_param
from envelopes.engine import Envelope, line_family_envelope
from envelopes.families import LineFamily
from utils.exceptions import ArgumentError, DomainError

INCIDENT = np.array([0.0, 1.0])
CAUSTIC_DOMAIN = (-0.999, 0.999)


def reflected_direction(s: RibParam) -> np.ndarray:
    """d' = d - 2 (d . n) n for d = (0, 1) and n the unit normal at the rib base."""
    n_hat = np.asarray(rib_base(s))
    return INCIDENT - 2.0 * float(INCIDENT @ n_hat) * n_hat


def reflect_ray_in_circle(s: RibParam) -> Line2:
    """
    Reflected ray through the rib base b = (s, sqrt(1 - s^2)).

    Raises:
        DomainError: If |s| >= 1 (grazing or no incidence).
    """
    s_val = float(check_rib_param(s))
    if abs(s_val) >= 1.0:
        raise DomainError(f"Grazing ray: reflection needs |s| < 1, got s={s_val}.")
    return Line2.through(rib_base(s_val), reflected_direction(s_val))


def reflected_chord(s: RibParam) -> Tuple[Point2, Point2]:
    """
    The reflected ray clipped to the disk: from b to its second mirror hit.

    The second hit lies at b + t d' with t = -2 b . d'.
    """
    b = np.asarray(rib_base(s))
    d = reflected_direction(s)
    end = b - 2.0 * float(b @ d) * d
    return Point2(float(b[0]), float(b[1])), Point2(float(end[0]), float(end[1]))


def caustic_residual(p: PointLike):
    """(4x^2 + 4y^2 - 1)^3 - 27 x^2; zero on the half-size rotated nephroid."""
    arr = np.asarray(p, dtype=float)
    x, y = arr[..., 0], arr[..., 1]
    value = (4.0 * (x * x + y * y) - 1.0) ** 3 - 27.0 * x * x
    return float(value) if np.ndim(value) == 0 else value


def caustic_curve(n: int) -> Envelope:
    """
    Envelope of the reflected rays for s in [-0.999, 0.999].

    Raises:
        ArgumentError: If n < 3.
    """
    if int(n) != n or n < 3:
        raise ArgumentError(f"Caustic needs at least 3 samples, got {n}.")
    return line_family_envelope(LineFamily(reflect_ray_in_circle, CAUSTIC_DOMAIN), n)


def find_cusp(curve) -> Point2:
    """Sample closest to the y-axis, the larger y winning ties."""
    pts = np.asarray(curve.points)
    order = np.lexsort((-pts[:, 1], np.abs(pts[:, 0])))
    x, y = pts[order[0]]
    return Point2(float(x), float(y))


def cusp_mask(points: np.ndarray, x_gap: float = 1e-2, y_cut: float = 0.45) -> np.ndarray:
    """True for samples away from the cusp at (0, 1/2): |x| > x_gap or y < y_cut."""
    pts = np.asarray(points)
    return (np.abs(pts[:, 0]) > x_gap) | (pts[:, 1] < y_cut)
