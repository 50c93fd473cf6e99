"""
Numerical envelopes of line and circle families, and the circle's catacaustic.
"""

from envelopes.caustic import (
    caustic_curve,
    caustic_residual,
    cusp_mask,
    find_cusp,
    reflect_ray_in_circle,
    reflected_chord,
    reflected_direction,
)
from envelopes.engine import (
    Envelope,
    central_derivative,
    circle_family_envelope,
    line_family_envelope,
)
from envelopes.families import (
    CircleFamily,
    LineFamily,
    circle_tangent_family,
    visor_circle_family,
)

__all__ = [
    "CircleFamily",
    "Envelope",
    "LineFamily",
    "caustic_curve",
    "caustic_residual",
    "central_derivative",
    "circle_family_envelope",
    "circle_tangent_family",
    "cusp_mask",
    "find_cusp",
    "line_family_envelope",
    "reflect_ray_in_circle",
    "reflected_chord",
    "reflected_direction",
    "visor_circle_family",
]
