"""
Numerical envelopes of line and circle families.

Family derivatives use a fourth-order central stencil with step h = 1e-5. Samples
whose 2x2 envelope system has condition number above 1e8 are dropped; those in
(1e6, 1e8] are kept and flagged low-confidence.
"""

from dataclasses import dataclass, field
from typing import Callable, ClassVar, List

import numpy as np

from curves.primitives import Polyline2
from curves.sampling import interval_grid
from envelopes.families import CircleFamily, LineFamily
from utils.exceptions import ArgumentError, EnvelopeUndefinedError
from utils.helpers import get_logger

logger = get_logger(__name__)

STEP = 1e-5
LOW_CONFIDENCE_COND = 1e6
SINGULAR_COND = 1e8


@dataclass(frozen=True, eq=False)
class Envelope(Polyline2):
    """Envelope samples, their low-confidence flags and the dropped parameters."""

    low_confidence: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=bool))
    dropped: List[float] = field(default_factory=list)

    min_points: ClassVar[int] = 1

    def __post_init__(self) -> None:
        super().__post_init__()
        flags = np.asarray(self.low_confidence, dtype=bool).reshape(-1)
        if flags.size == 0:
            flags = np.zeros(len(self), dtype=bool)
        if flags.shape != (len(self),):
            raise ArgumentError("One low-confidence flag per envelope sample is required.")
        object.__setattr__(self, "low_confidence", flags)

    def as_polyline(self) -> Polyline2:
        return Polyline2(params=self.params, points=self.points)


def central_derivative(f: Callable[[float], np.ndarray], u: float, h: float = STEP):
    """Fourth-order central difference of a vector-valued function at u."""
    return (f(u - 2 * h) - 8 * f(u - h) + 8 * f(u + h) - f(u + 2 * h)) / (12 * h)


def _condition(m: np.ndarray) -> float:
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = float(np.linalg.cond(m))
    return cond if np.isfinite(cond) else np.inf


def _finish(
    params: List[float], points: List[np.ndarray], flags: List[bool], dropped: List[float]
) -> Envelope:
    if not params:
        raise EnvelopeUndefinedError(
            f"All {len(dropped)} samples are singular; the family has no envelope."
        )
    if dropped:
        logger.info(f"Dropped {len(dropped)} singular envelope sample(s).")
    if any(flags):
        logger.info(f"Flagged {sum(flags)} low-confidence envelope sample(s).")
    return Envelope(
        params=np.array(params),
        points=np.array(points),
        low_confidence=np.array(flags, dtype=bool),
        dropped=dropped,
    )


def line_family_envelope(f: LineFamily, n: int) -> Envelope:
    """
    Envelope of a line family sampled at n uniform parameters.

    For each u the point solving a x + b y = c and a' x + b' y = c' is returned.

    Raises:
        ArgumentError: If n < 3.
        EnvelopeUndefinedError: If every sample is singular.
    """
    if int(n) != n or n < 3:
        raise ArgumentError(f"Envelope needs at least 3 samples, got {n}.")
    params, points, flags, dropped = [], [], [], []
    for u in interval_grid(*f.domain, int(n)):
        try:
            a, b, c = f.coefficients(u)
            da, db, dc = central_derivative(f.coefficients, u)
        except (ValueError, ArithmeticError) as e:
            logger.debug(f"u={u}: family not evaluable near sample ({e})")
            dropped.append(float(u))
            continue
        m = np.array([[a, b], [da, db]])
        cond = _condition(m)
        if cond > SINGULAR_COND:
            logger.debug(f"u={u}: singular envelope system (cond={cond:.3g})")
            dropped.append(float(u))
            continue
        points.append(np.linalg.solve(m, np.array([c, dc])))
        params.append(float(u))
        flags.append(cond > LOW_CONFIDENCE_COND)
    return _finish(params, points, flags, dropped)


def circle_family_envelope(f: CircleFamily, n: int) -> Envelope:
    """
    Outer envelope of a circle family sampled at n uniform parameters.

    Solves F = |p - c(u)|^2 - rho(u)^2 = 0 together with dF/du = 0. The second
    equation is the line c'(u) . (p - c) = -rho rho'; its two crossings with the
    circle are exact, and the one with larger y is kept (the other branch of the
    visor family is the x-axis itself).

    Raises:
        ArgumentError: If n < 3.
        EnvelopeUndefinedError: If every sample is singular.
    """
    if int(n) != n or n < 3:
        raise ArgumentError(f"Envelope needs at least 3 samples, got {n}.")
    params, points, flags, dropped = [], [], [], []
    for u in interval_grid(*f.domain, int(n)):
        try:
            cx, cy, rho = f.member(u)
            dcx, dcy, drho = central_derivative(f.member, u)
        except (ValueError, ArithmeticError) as e:
            logger.debug(f"u={u}: family not evaluable near sample ({e})")
            dropped.append(float(u))
            continue
        speed = float(np.hypot(dcx, dcy))
        if speed == 0.0 or not np.isfinite(speed):
            dropped.append(float(u))
            continue
        normal = np.array([dcx, dcy]) / speed
        offset = -rho * drho / speed
        half_chord_sq = rho * rho - offset * offset
        if half_chord_sq < 0.0:
            logger.debug(f"u={u}: derivative line misses the circle")
            dropped.append(float(u))
            continue
        foot = np.array([cx, cy]) + offset * normal
        along = np.array([-normal[1], normal[0]]) * np.sqrt(half_chord_sq)
        p = max(foot + along, foot - along, key=lambda q: q[1])
        cond = _condition(np.array([p - np.array([cx, cy]), normal]))
        if cond > SINGULAR_COND:
            dropped.append(float(u))
            continue
        points.append(p)
        params.append(float(u))
        flags.append(cond > LOW_CONFIDENCE_COND)
    return _finish(params, points, flags, dropped)
