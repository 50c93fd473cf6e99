"""
Run configuration: built-in defaults, then an optional JSON file, then CLI flags.
"""

import json
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from curves.sampling import Grid
from utils.exceptions import ArgumentError, ConfigError
from utils.helpers import get_logger
from utils.tolerances import resolve_tolerances
from visualization.template import CardSpec

logger = get_logger(__name__)

DEFAULT_SWEEP_DEG = [180.0, 157.5, 135.0, 112.5, 90.0, 67.5, 45.0, 22.5, 0.0]


@dataclass(frozen=True)
class RunConfig:
    card: CardSpec = field(default_factory=CardSpec)
    samples: int = 101
    grid: str = Grid.UNIFORM_ANGLE.value
    tolerances: Dict[str, float] = field(default_factory=dict)
    output: Optional[str] = None
    oracle_samples: int = 50
    envelope_samples: int = 1001
    sweep_alphas_deg: List[float] = field(
        default_factory=lambda: list(DEFAULT_SWEEP_DEG)
    )

    def __post_init__(self) -> None:
        for name in ("samples", "oracle_samples", "envelope_samples"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"'{name}' must be an integer, got {value!r}.")
        if self.samples < 2:
            raise ConfigError(f"'samples' must be at least 2, got {self.samples}.")
        if self.oracle_samples < 1:
            raise ConfigError(
                f"'oracle_samples' must be positive, got {self.oracle_samples}."
            )
        if self.envelope_samples < 3:
            raise ConfigError(
                f"'envelope_samples' must be at least 3, got {self.envelope_samples}."
            )
        try:
            object.__setattr__(self, "grid", Grid.parse(self.grid).value)
        except ArgumentError as e:
            raise ConfigError(str(e)) from e
        # validates names and positivity
        resolve_tolerances(self.tolerances)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _card_from(value: Any) -> CardSpec:
    if isinstance(value, CardSpec):
        return value
    if not isinstance(value, Mapping):
        raise ConfigError(f"'card' must be an object, got {type(value).__name__}.")
    try:
        return CardSpec(**value)
    except TypeError as e:
        raise ConfigError(f"Invalid card fields: {e}") from e
    except (ArgumentError, ValueError, OverflowError) as e:
        raise ConfigError(f"Invalid card: {e}") from e


def config_from_mapping(
    data: Mapping[str, Any], base: Optional[RunConfig] = None
) -> RunConfig:
    """
    Overlay a mapping of RunConfig fields onto ``base`` (defaults when omitted).

    ``card`` may be partial; missing card fields keep the base values.

    Raises:
        ConfigError: On unknown keys or invalid values.
    """
    base = base or RunConfig()
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"Unknown config field(s): {', '.join(unknown)}.")
    updates = dict(data)
    if "card" in updates:
        card = updates["card"]
        if isinstance(card, Mapping):
            card = {**asdict(base.card), **card}
        updates["card"] = _card_from(card)
    if "sweep_alphas_deg" in updates:
        alphas = updates["sweep_alphas_deg"]
        if not isinstance(alphas, list) or not all(
            isinstance(a, (int, float)) and not isinstance(a, bool) for a in alphas
        ):
            raise ConfigError("'sweep_alphas_deg' must be a list of numbers.")
        updates["sweep_alphas_deg"] = [float(a) for a in alphas]
    if "tolerances" in updates and not isinstance(updates["tolerances"], Mapping):
        raise ConfigError("'tolerances' must be an object of check name to value.")
    try:
        return replace(base, **updates)
    except TypeError as e:
        raise ConfigError(f"Invalid config: {e}") from e


def load_config(path: Union[str, Path]) -> RunConfig:
    """
    Read a JSON config file.

    Raises:
        ConfigError: If the file is missing, is not valid JSON or holds invalid fields.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read config {path}: {e}") from e
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        logger.error(f"Malformed config {path}.", exc_info=True)
        raise ConfigError(
            f"Malformed JSON in {path} at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config {path} must hold a JSON object.")
    config = config_from_mapping(data)
    logger.info(f"Loaded config from {path}")
    return config


def apply_overrides(
    config: RunConfig,
    samples: Optional[int] = None,
    grid: Optional[str] = None,
    ribs: Optional[int] = None,
    radius_mm: Optional[float] = None,
    output: Optional[str] = None,
) -> RunConfig:
    """Apply the CLI flags that were given; None leaves a field untouched."""
    updates: Dict[str, Any] = {}
    card: Dict[str, Any] = {}
    if samples is not None:
        updates["samples"] = samples
    if grid is not None:
        updates["grid"] = grid
    if output is not None:
        updates["output"] = output
    if ribs is not None:
        card["rib_count"] = ribs
    if radius_mm is not None:
        card["circle_radius_mm"] = radius_mm
    if card:
        updates["card"] = card
    return config_from_mapping(updates, base=config) if updates else config
