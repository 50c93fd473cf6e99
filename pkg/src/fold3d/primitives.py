"""
Space value types for the folded card.

Frame: the card back is the xy-plane, the card centreline is the x-axis and the
card front rotates about the x-axis by the fold angle alpha.
"""

from dataclasses import dataclass
from typing import ClassVar, Iterator, NamedTuple, Sequence, Union

import numpy as np

from curves.primitives import Polyline
from utils.exceptions import ArgumentError, DomainError

# Dihedral angle between card front and back, radians in [0, pi].
FoldAngle = float

_ALPHA_SLACK = 1e-12


class Point3(NamedTuple):
    x: float
    y: float
    z: float


Point3Like = Union[Point3, Sequence[float], np.ndarray]


def check_fold_angle(alpha) -> np.ndarray:
    """
    Validate fold angles, snapping values within 1e-12 of the ends onto [0, pi].

    Raises:
        DomainError: If any angle is non-finite or outside [0, pi].
    """
    arr = np.asarray(alpha, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"Fold angle must be finite, got {alpha!r}.")
    if np.any(arr < -_ALPHA_SLACK) or np.any(arr > np.pi + _ALPHA_SLACK):
        raise DomainError(f"Fold angle must lie in [0, pi], got {alpha!r}.")
    return np.clip(arr, 0.0, np.pi)


@dataclass(frozen=True)
class Plane3:
    """The locus n . p = d with |n| = 1."""

    normal: tuple
    d: float

    def __post_init__(self) -> None:
        n = np.asarray(self.normal, dtype=float)
        norm = float(np.linalg.norm(n))
        if n.shape != (3,) or norm == 0.0 or not np.isfinite(norm):
            raise ArgumentError(f"Plane needs a finite non-zero 3-vector, got {self.normal}.")
        object.__setattr__(self, "normal", tuple(float(v) for v in n / norm))
        object.__setattr__(self, "d", float(self.d) / norm)

    @property
    def n(self) -> np.ndarray:
        return np.asarray(self.normal)

    def residual(self, p):
        """Signed distance n . p - d for one point or an (N, 3) array."""
        value = np.asarray(p, dtype=float) @ self.n - self.d
        return float(value) if np.ndim(value) == 0 else value


@dataclass(frozen=True, eq=False)
class Polyline3(Polyline):
    dim: ClassVar[int] = 3

    @property
    def zs(self) -> np.ndarray:
        return self.points[:, 2]

    def point(self, i: int) -> Point3:
        x, y, z = self.points[i]
        return Point3(float(x), float(y), float(z))

    def __iter__(self) -> Iterator[Point3]:
        for i in range(len(self)):
            yield self.point(i)
