"""
Tolerance table for the verification suite, keyed by check name.
"""

from typing import Dict, Mapping, Optional

from utils.exceptions import ConfigError

# Single-expression identities get 1e-12, composed expressions 1e-9.
DEFAULT_TOLERANCES: Dict[str, float] = {
    "flat_implicit": 1e-9,
    "named_points": 1e-12,
    "rib_length_preserved": 1e-12,
    "two_thirds": 1e-9,
    "standard_form": 1e-9,
    "epicycloid": 1e-12,
    "tangency": 1e-6,
    "midpoint_on_tangent": 1e-12,
    "midpoint_direction": 1e-12,
    "axis_symmetry": 1e-12,
    "fold_oracle": 1e-8,
    "spheres": 1e-9,
    "medial_plane": 1e-12,
    "vertical_plane": 1e-9,
    "cone_rim": 1e-9,
    "boundary_collapse": 1e-9,
    "boundary_continuity": 1.1e-4,
    "monotone_bowing": 0.0,
    "tangent_envelope": 1e-6,
    "circle_envelope": 1e-5,
    "circle_envelope_distance": 1e-4,
    "envelope_on_circle": 1e-8,
    "caustic_residual": 1e-5,
    "caustic_cusp": 1e-3,
    "caustic_symmetry": 1e-8,
}


def resolve_tolerances(
    overrides: Optional[Mapping[str, float]] = None, uniform: Optional[float] = None
) -> Dict[str, float]:
    """
    Merge overrides into the default table.

    Args:
        overrides (Mapping[str, float], optional): Per-check replacements.
        uniform (float, optional): When given, replaces every entry.

    Returns:
        Dict[str, float]: The effective tolerance table.

    Raises:
        ConfigError: If a key is unknown or a value is not positive.
    """
    table = dict(DEFAULT_TOLERANCES)
    for name, value in (overrides or {}).items():
        if name not in table:
            raise ConfigError(f"Unknown tolerance '{name}'.")
        if value <= 0:
            raise ConfigError(f"Tolerance '{name}' must be positive, got {value}.")
        table[name] = float(value)
    if uniform is not None:
        if uniform <= 0:
            raise ConfigError(f"Tolerance must be positive, got {uniform}.")
        table = {name: float(uniform) for name in table}
    return table
