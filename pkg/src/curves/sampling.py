"""
Sampling grids over the rib parameter and the flat curve sampler.
"""

from enum import Enum
from typing import Union

import numpy as np

from curves.flat_visor import flat_visor_points
from curves.primitives import Polyline2
from utils.exceptions import ArgumentError
from utils.helpers import antisymmetrize


class Grid(str, Enum):
    """Spacing of rib parameters over [-1, 1]."""

    UNIFORM_S = "uniform-s"
    UNIFORM_ANGLE = "uniform-angle"

    @classmethod
    def parse(cls, value: Union[str, "Grid"]) -> "Grid":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError as e:
            choices = ", ".join(g.value for g in cls)
            raise ArgumentError(f"Unknown grid '{value}' (expected {choices}).") from e


def rib_grid(n: int, grid: Union[str, Grid] = Grid.UNIFORM_ANGLE) -> np.ndarray:
    """
    Ascending rib parameters over [-1, 1], exactly symmetric about 0.

    ``uniform-angle`` places s = sin(phi) with phi uniform on [-pi/2, pi/2]
    (the same set as s = cos t, t uniform on [0, pi]), which crowds samples into
    the cusp neighbourhoods at s = +/-1.

    Raises:
        ArgumentError: If n < 2 or the grid name is unknown.
    """
    grid = Grid.parse(grid)
    if int(n) != n or n < 2:
        raise ArgumentError(f"Need at least 2 samples, got {n}.")
    n = int(n)
    if grid is Grid.UNIFORM_S:
        s = np.linspace(-1.0, 1.0, n)
    else:
        s = np.sin(np.linspace(-0.5 * np.pi, 0.5 * np.pi, n))
    s = antisymmetrize(s)
    s[0], s[-1] = -1.0, 1.0
    return s


def interval_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """
    Uniform grid on [lo, hi]; symmetric intervals are antisymmetrised.

    Raises:
        ArgumentError: If n < 2 or lo >= hi.
    """
    if int(n) != n or n < 2:
        raise ArgumentError(f"Need at least 2 samples, got {n}.")
    if not lo < hi:
        raise ArgumentError(f"Empty interval [{lo}, {hi}].")
    u = np.linspace(lo, hi, int(n))
    if lo == -hi:
        u = antisymmetrize(u)
    return u


def sample_flat_curve(n: int, grid: Union[str, Grid] = Grid.UNIFORM_ANGLE) -> Polyline2:
    """
    Sample the flat visor curve at n rib parameters covering [-1, 1].

    Raises:
        ArgumentError: If n < 2.
    """
    s = rib_grid(n, grid)
    return Polyline2(params=s, points=flat_visor_points(s))
