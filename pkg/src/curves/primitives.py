"""
Plane value types shared by every construction.

Lines are stored implicitly (a*x + b*y = c) with a unit normal, so the tangent and
perpendicular lines of the visor construction stay total at s = 0 and s = +/-1.
"""

from dataclasses import dataclass
from typing import ClassVar, Iterator, NamedTuple, Sequence, Union

import numpy as np

from utils.exceptions import ArgumentError, DomainError

# A rib parameter s in [-1, 1]; a bare float at runtime.
RibParam = float


class Point2(NamedTuple):
    x: float
    y: float


PointLike = Union[Point2, Sequence[float], np.ndarray]


def check_rib_param(s) -> np.ndarray:
    """
    Validate rib parameters and return them as a float array.

    Raises:
        DomainError: If any value is non-finite or outside [-1, 1].
    """
    arr = np.asarray(s, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"Rib parameter must be finite, got {s!r}.")
    if np.any(np.abs(arr) > 1.0):
        raise DomainError(f"Rib outside disk: |s| must be <= 1, got {s!r}.")
    return arr


@dataclass(frozen=True)
class Line2:
    """
    The locus a*x + b*y = c, normalised so that a**2 + b**2 == 1.

    With a unit normal, ``c`` is the signed distance of the line from the origin.
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        norm = float(np.hypot(self.a, self.b))
        if not np.isfinite(norm) or norm == 0.0 or not np.isfinite(self.c):
            raise ArgumentError(
                f"Line needs a finite non-zero normal, got ({self.a}, {self.b})."
            )
        object.__setattr__(self, "a", float(self.a) / norm)
        object.__setattr__(self, "b", float(self.b) / norm)
        object.__setattr__(self, "c", float(self.c) / norm)

    @classmethod
    def through(cls, point: PointLike, direction: PointLike) -> "Line2":
        """Line through ``point`` running along ``direction``."""
        px, py = float(point[0]), float(point[1])
        dx, dy = float(direction[0]), float(direction[1])
        return cls(dy, -dx, dy * px - dx * py)

    @property
    def normal(self) -> np.ndarray:
        return np.array([self.a, self.b])

    @property
    def direction(self) -> np.ndarray:
        return np.array([-self.b, self.a])

    def coefficients(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])

    def residual(self, p: PointLike) -> float:
        """Signed distance of ``p`` from the line."""
        return self.a * float(p[0]) + self.b * float(p[1]) - self.c

    def foot(self, p: PointLike) -> Point2:
        """Orthogonal projection of ``p`` onto the line."""
        d = self.residual(p)
        return Point2(float(p[0]) - d * self.a, float(p[1]) - d * self.b)

    def reflect(self, p: PointLike) -> Point2:
        """Mirror image of ``p``, found by doubling the perpendicular foot."""
        f = self.foot(p)
        return Point2(2.0 * f.x - float(p[0]), 2.0 * f.y - float(p[1]))

    def intersect(self, other: "Line2") -> Point2:
        """
        Intersection point with another line.

        Raises:
            DomainError: If the lines are parallel.
        """
        m = np.array([[self.a, self.b], [other.a, other.b]])
        det = float(np.linalg.det(m))
        if abs(det) < 1e-15:
            raise DomainError("Parallel lines do not intersect.")
        x, y = np.linalg.solve(m, np.array([self.c, other.c]))
        return Point2(float(x), float(y))


@dataclass(frozen=True, eq=False)
class Polyline:
    """
    Ordered samples of a curve together with their generating parameters.

    ``params`` has shape (N,), ``points`` shape (N, dim); params are strictly
    monotone (either direction).
    """

    params: np.ndarray
    points: np.ndarray

    dim: ClassVar[int] = 2
    min_points: ClassVar[int] = 2

    def __post_init__(self) -> None:
        params = np.array(self.params, dtype=float).reshape(-1)
        points = np.array(self.points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self.dim:
            raise ArgumentError(
                f"Expected points of shape (N, {self.dim}), got {points.shape}."
            )
        if len(params) != len(points):
            raise ArgumentError(
                f"params and points differ in length ({len(params)} vs {len(points)})."
            )
        if len(params) < self.min_points:
            raise ArgumentError(
                f"A polyline needs at least {self.min_points} samples, got {len(params)}."
            )
        steps = np.diff(params)
        if len(steps) and not (np.all(steps > 0) or np.all(steps < 0)):
            raise ArgumentError("Polyline params must be strictly monotone.")
        params.setflags(write=False)
        points.setflags(write=False)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.params)

    @property
    def xs(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self.points[:, 1]


@dataclass(frozen=True, eq=False)
class Polyline2(Polyline):
    dim: ClassVar[int] = 2

    def point(self, i: int) -> Point2:
        x, y = self.points[i]
        return Point2(float(x), float(y))

    def __iter__(self) -> Iterator[Point2]:
        for i in range(len(self)):
            yield self.point(i)
