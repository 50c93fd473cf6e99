"""
One-parameter families of lines and circles.
"""

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from curves.flat_visor import rib_base, rib_length, tangent_line
from curves.primitives import Line2, Point2, PointLike
from utils.exceptions import ArgumentError

Interval = Tuple[float, float]


def _check_domain(domain: Interval) -> Interval:
    lo, hi = float(domain[0]), float(domain[1])
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ArgumentError(f"Family domain must be a finite interval, got {domain}.")
    return lo, hi


@dataclass(frozen=True)
class LineFamily:
    """Lines indexed by u over a closed interval."""

    evaluator: Callable[[float], Line2]
    domain: Interval

    def __post_init__(self) -> None:
        object.__setattr__(self, "domain", _check_domain(self.domain))

    def coefficients(self, u: float) -> np.ndarray:
        """(a, b, c) of the member at u."""
        return self.evaluator(float(u)).coefficients()

    def check_continuity(self, n: int = 64, jump: float = 0.5) -> bool:
        """
        Sample the family and report whether neighbouring members stay close.

        A sign flip of the stored normal between samples counts as a jump.
        """
        u = np.linspace(*self.domain, int(n))
        coeffs = np.array([self.coefficients(v) for v in u])
        if not np.all(np.isfinite(coeffs)):
            return False
        return bool(np.all(np.linalg.norm(np.diff(coeffs, axis=0), axis=1) < jump))


@dataclass(frozen=True)
class CircleFamily:
    """Circles (centre, radius >= 0) indexed by u over a closed interval."""

    evaluator: Callable[[float], Tuple[PointLike, float]]
    domain: Interval

    def __post_init__(self) -> None:
        object.__setattr__(self, "domain", _check_domain(self.domain))

    def member(self, u: float) -> np.ndarray:
        """(cx, cy, radius) of the member at u."""
        centre, radius = self.evaluator(float(u))
        if radius < 0:
            raise ArgumentError(f"Negative radius {radius} at u={u}.")
        return np.array([float(centre[0]), float(centre[1]), float(radius)])

    def check_continuity(self, n: int = 64, jump: float = 0.5) -> bool:
        u = np.linspace(*self.domain, int(n))
        members = np.array([self.member(v) for v in u])
        if not np.all(np.isfinite(members)):
            return False
        return bool(np.all(np.linalg.norm(np.diff(members, axis=0), axis=1) < jump))


def circle_tangent_family(domain: Interval = (-0.99, 0.99)) -> LineFamily:
    """Tangent lines of the unit circle at the rib bases; its envelope is the circle."""
    return LineFamily(tangent_line, domain)


def visor_circle_family(domain: Interval = (-0.999, 0.999)) -> CircleFamily:
    """Circles centred on the rib bases with the rib lengths as radii."""

    def member(s: float) -> Tuple[Point2, float]:
        return rib_base(s), rib_length(s)

    return CircleFamily(member, domain)
