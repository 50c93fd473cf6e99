"""
Minimal SVG 1.1 document model: lines, paths and circles in millimetres.

Output is fully deterministic (fixed number formatting and element order) so that
generated files can be compared byte for byte.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.exceptions import ArgumentError
from utils.helpers import get_logger

logger = get_logger(__name__)

CLASS_TAGS = ("cut", "mountain", "valley", "guide", "curve")
STROKE_WIDTH_MM = 0.2
VIEWPORT_SLACK = 1e-6

STYLESHEET = (
    f".cut {{ stroke: #000000; stroke-width: {STROKE_WIDTH_MM}; fill: none; }}\n"
    f".mountain {{ stroke: #c0392b; stroke-width: {STROKE_WIDTH_MM}; fill: none; "
    "stroke-dasharray: 6 2; }\n"
    f".valley {{ stroke: #2471a3; stroke-width: {STROKE_WIDTH_MM}; fill: none; "
    "stroke-dasharray: 1.5 1.5; }\n"
    f".guide {{ stroke: #7f8c8d; stroke-width: {STROKE_WIDTH_MM}; fill: none; "
    "opacity: 0.35; }\n"
    f".curve {{ stroke: #000000; stroke-width: {STROKE_WIDTH_MM}; fill: none; }}\n"
)


def fmt(value: float, digits: int = 4) -> str:
    """Fixed-point formatting with negative zero folded into zero."""
    text = f"{float(value) + 0.0:.{digits}f}"
    return "0." + "0" * digits if text == "-0." + "0" * digits else text


@dataclass(frozen=True)
class SvgElement:
    """One primitive: ``kind`` is line, path or circle; ``cls`` a class tag."""

    kind: str
    cls: str
    attrs: Tuple[Tuple[str, str], ...]
    bbox: Tuple[float, float, float, float]

    def to_xml(self) -> str:
        attrs = " ".join(f'{k}="{v}"' for k, v in self.attrs)
        return f'<{self.kind} class="{self.cls}" {attrs} />'


@dataclass
class SvgDocument:
    """Ordered primitives on a width x height millimetre page."""

    width_mm: float
    height_mm: float
    elements: List[SvgElement] = field(default_factory=list)
    title: Optional[str] = None

    def __post_init__(self) -> None:
        if not (self.width_mm > 0 and self.height_mm > 0):
            raise ArgumentError(
                f"Document size must be positive: {self.width_mm} x {self.height_mm}."
            )

    def _check(self, cls: str, bbox: Tuple[float, float, float, float]) -> None:
        if cls not in CLASS_TAGS:
            raise ArgumentError(
                f"Unknown class tag '{cls}' (expected one of {CLASS_TAGS})."
            )
        x0, y0, x1, y1 = bbox
        if (
            x0 < -VIEWPORT_SLACK
            or y0 < -VIEWPORT_SLACK
            or x1 > self.width_mm + VIEWPORT_SLACK
            or y1 > self.height_mm + VIEWPORT_SLACK
        ):
            raise ArgumentError(
                f"Element {bbox} leaves the {self.width_mm}x{self.height_mm} viewport."
            )

    def add_line(
        self, cls: str, start: Sequence[float], end: Sequence[float], **extra: str
    ) -> None:
        (x1, y1), (x2, y2) = start, end
        bbox = (min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2))
        self._check(cls, bbox)
        attrs = (("x1", fmt(x1)), ("y1", fmt(y1)), ("x2", fmt(x2)), ("y2", fmt(y2)))
        self._append("line", cls, attrs, extra, bbox)

    def add_path(
        self,
        cls: str,
        points: Union[np.ndarray, Iterable[Sequence[float]]],
        closed: bool = False,
        **extra: str,
    ) -> None:
        pts = np.asarray(list(points), dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise ArgumentError("A path needs at least two 2D points.")
        bbox = (pts[:, 0].min(), pts[:, 1].min(), pts[:, 0].max(), pts[:, 1].max())
        self._check(cls, bbox)
        d = "M " + " L ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
        if closed:
            d += " Z"
        self._append("path", cls, (("d", d),), extra, bbox)

    def add_circle(
        self, cls: str, centre: Sequence[float], radius: float, **extra: str
    ) -> None:
        cx, cy = centre
        if radius < 0:
            raise ArgumentError(f"Circle radius must be non-negative, got {radius}.")
        bbox = (cx - radius, cy - radius, cx + radius, cy + radius)
        self._check(cls, bbox)
        attrs = (("cx", fmt(cx)), ("cy", fmt(cy)), ("r", fmt(radius)))
        self._append("circle", cls, attrs, extra, bbox)

    def _append(self, kind: str, cls: str, attrs: tuple, extra: dict, bbox) -> None:
        self.elements.append(SvgElement(kind, cls, attrs + tuple(extra.items()), bbox))

    def count(self, cls: Optional[str] = None, kind: Optional[str] = None) -> int:
        return sum(
            1
            for e in self.elements
            if (cls is None or e.cls == cls) and (kind is None or e.kind == kind)
        )

    def counts(self) -> Dict[str, int]:
        return {tag: self.count(tag) for tag in CLASS_TAGS if self.count(tag)}

    def to_string(self) -> str:
        w, h = fmt(self.width_mm), fmt(self.height_mm)
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{w}mm" height="{h}mm" viewBox="0 0 {w} {h}">',
        ]
        if self.title:
            lines.append(f"  <title>{self.title}</title>")
        lines.append("  <style>")
        lines.extend(f"    {rule}" for rule in STYLESHEET.splitlines())
        lines.append("  </style>")
        lines.extend(f"  {e.to_xml()}" for e in self.elements)
        lines.append("</svg>")
        return "\n".join(lines) + "\n"

    def to_bytes(self) -> bytes:
        return self.to_string().encode("utf-8")

    def write(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.to_bytes())
        logger.info(f"Saved SVG ({len(self.elements)} elements): {path}")
        return path
