"""
Numeric rim oracle built only from the fold constraints.

The two spheres |p - b| = r and |p - b1| = r meet in a circle lying in the medial
plane; that circle passes through a = (s, 0, 0). The vertical plane V cuts it at a
and at the rim point. The circle is parameterised by angle with a at angle 0, the
other crossing of V is bracketed on a scan and refined with Brent's method.
"""

import numpy as np
from scipy.optimize import root_scalar

from curves.flat_visor import rib_lengths
from curves.primitives import RibParam, check_rib_param
from fold3d.kinematics import front_anchor, medial_plane, vertical_plane
from fold3d.primitives import FoldAngle, Point3, check_fold_angle
from utils.exceptions import ArgumentError, ConvergenceError, DegenerateRibError
from utils.helpers import get_logger

logger = get_logger(__name__)

SCAN_POINTS = 720
XTOL = 1e-15
MAXITER = 200


def constraint_residuals(p, s: RibParam, alpha: FoldAngle) -> np.ndarray:
    """
    Residuals of the fold constraints at ``p``: both spheres, medial plane, plane V.

    Sphere residuals are |p - centre|^2 - r^2, plane residuals signed distances.
    """
    p = np.asarray(p, dtype=float)
    s_val = float(check_rib_param(s))
    r = float(rib_lengths(s_val))
    b = np.array([s_val, r, 0.0])
    b1 = np.asarray(front_anchor(s_val, alpha))
    return np.array(
        [
            float(np.dot(p - b, p - b)) - r * r,
            float(np.dot(p - b1, p - b1)) - r * r,
            medial_plane(alpha).residual(p),
            vertical_plane(s_val).residual(p),
        ]
    )


def visor_point_3d_numeric(
    s: RibParam,
    alpha: FoldAngle,
    scan_points: int = SCAN_POINTS,
    xtol: float = XTOL,
    maxiter: int = MAXITER,
) -> Point3:
    """
    Solve the fold constraints for the rim point without the closed form.

    Args:
        s (float): Rib parameter, strictly inside (-1, 1).
        alpha (float): Fold angle, strictly inside (0, pi).
        scan_points (int): Angular samples used to bracket the crossing.
        xtol (float): Absolute angle tolerance for Brent's method.
        maxiter (int): Iteration budget per bracket.

    Returns:
        Point3: The solution with z > 0; ties broken by distance from a.

    Raises:
        DegenerateRibError: If |s| = 1.
        ArgumentError: If alpha is not inside (0, pi).
        ConvergenceError: If no crossing is bracketed or Brent's method fails.
    """
    s_val = float(check_rib_param(s))
    a_val = float(check_fold_angle(alpha))
    if abs(s_val) >= 1.0:
        raise DegenerateRibError(f"Numeric oracle needs |s| < 1, got s={s_val}.")
    if not 0.0 < a_val < np.pi:
        raise ArgumentError(f"Numeric oracle needs 0 < alpha < pi, got {a_val}.")

    r = float(rib_lengths(s_val))
    a = np.array([s_val, 0.0, 0.0])
    b = np.array([s_val, r, 0.0])
    b1 = np.asarray(front_anchor(s_val, a_val))
    centre = 0.5 * (b + b1)
    n_m = medial_plane(a_val).n
    v_plane = vertical_plane(s_val)

    e1 = a - centre
    radius = float(np.linalg.norm(e1))
    e1 /= radius
    e2 = np.cross(n_m, e1)

    def on_circle(phi):
        phi = np.asarray(phi, dtype=float)[..., None]
        return centre + radius * (np.cos(phi) * e1 + np.sin(phi) * e2)

    def crossing(phi):
        return v_plane.residual(on_circle(phi))

    # phi = 0 is a itself; scan strictly inside (0, 2 pi)
    phis = np.linspace(0.0, 2.0 * np.pi, scan_points + 1)[1:-1]
    values = crossing(phis)
    brackets = np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]
    exact = np.nonzero(values == 0.0)[0]
    if len(brackets) == 0 and len(exact) == 0:
        raise ConvergenceError(
            f"No crossing of plane V bracketed for s={s_val}, alpha={a_val}."
        )

    candidates = [on_circle(phis[i]) for i in exact]
    for i in brackets:
        try:
            sol = root_scalar(
                crossing,
                bracket=(phis[i], phis[i + 1]),
                method="brentq",
                xtol=xtol,
                maxiter=maxiter,
            )
        except (ValueError, RuntimeError) as e:
            logger.error("Brent solve failed.", exc_info=True)
            raise ConvergenceError(f"Brent solve failed: {e}") from e
        if not sol.converged:
            raise ConvergenceError(
                f"No convergence within {maxiter} iterations "
                f"for s={s_val}, alpha={a_val}: {sol.flag}"
            )
        logger.debug(f"s={s_val}, alpha={a_val}: root after {sol.iterations} iterations")
        candidates.append(on_circle(sol.root))

    upper = [p for p in candidates if p[2] > 0.0] or candidates
    best = max(upper, key=lambda p: float(np.linalg.norm(p - a)))
    return Point3(float(best[0]), float(best[1]), float(best[2]))
