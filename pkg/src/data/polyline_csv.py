"""
CSV serialisation of sampled curves.

Header ``param,x,y`` or ``param,x,y,z``; one row per sample in parameter order.
The parameter column carries 12 significant digits, coordinates 12 decimals.
"""

import io
from pathlib import Path
from typing import Union

import pandas as pd

from curves.primitives import Polyline, Polyline2
from fold3d.primitives import Polyline3
from utils.exceptions import ArgumentError
from utils.helpers import get_logger

logger = get_logger(__name__)

COLUMNS = ("param", "x", "y", "z")
_ZERO = f"{0.0:.12f}"


def _coord(value: float) -> str:
    text = f"{value:.12f}"
    return _ZERO if text == "-" + _ZERO else text


def polyline_frame(c: Polyline) -> pd.DataFrame:
    """The polyline as a DataFrame of already-formatted strings."""
    columns = COLUMNS[: 1 + c.points.shape[1]]
    data = {"param": [f"{float(v) + 0.0:.12g}" for v in c.params]}
    for j, name in enumerate(columns[1:]):
        data[name] = [_coord(float(v)) for v in c.points[:, j]]
    return pd.DataFrame(data, columns=list(columns))


def export_polyline_csv(c: Polyline) -> bytes:
    """
    Serialise a 2D or 3D polyline to UTF-8 CSV with LF line endings.

    Raises:
        ArgumentError: If the polyline has no samples.
    """
    if c is None or len(c) == 0:
        raise ArgumentError("Cannot export an empty polyline.")
    text = polyline_frame(c).to_csv(index=False, lineterminator="\n")
    return text.encode("utf-8")


def write_polyline_csv(c: Polyline, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(export_polyline_csv(c))
    logger.info(f"Saved CSV ({len(c)} rows): {path}")
    return path


def read_polyline_csv(source: Union[str, Path, bytes]) -> Polyline:
    """
    Parse a CSV written by :func:`export_polyline_csv`.

    Args:
        source: A file path or the raw CSV bytes.

    Returns:
        Polyline2 or Polyline3 depending on the header.

    Raises:
        ArgumentError: On an unreadable file or a non-polyline header.
    """
    handle = io.BytesIO(source) if isinstance(source, bytes) else source
    try:
        df = pd.read_csv(handle, dtype=float)
    except (OSError, ValueError, pd.errors.ParserError) as e:
        logger.error("Failed to read polyline CSV.", exc_info=True)
        raise ArgumentError(f"Unreadable polyline CSV: {e}") from e

    header = tuple(df.columns)
    if header == COLUMNS[:3]:
        cls = Polyline2
    elif header == COLUMNS:
        cls = Polyline3
    else:
        raise ArgumentError(f"Unexpected CSV header {header}.")
    return cls(params=df["param"].to_numpy(), points=df[list(header[1:])].to_numpy())
