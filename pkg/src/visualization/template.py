"""
Printable cut/crease template of the Knight's Visor card.

Card coordinates are millimetres with the origin at the top-left corner; the card
centreline (fold) runs horizontally through the middle and the circle C is centred
on it. Ribs are the strips between consecutive vertical cuts.

Valley creases are drawn as chords between neighbouring cut endpoints. The
mathematics treats each rib-base crease as the exact tangent at the rib base; a
physical template needs finite segments, and the chord is the segment the crease
actually follows on paper.
"""

from dataclasses import dataclass
from numbers import Real
from typing import List, Tuple

import numpy as np

from utils.exceptions import ArgumentError
from utils.helpers import get_logger
from visualization.svg import SvgDocument

logger = get_logger(__name__)


@dataclass(frozen=True)
class CardSpec:
    """Physical template parameters, all lengths in millimetres."""

    circle_radius_mm: float = 30.0
    rib_count: int = 24
    card_width_mm: float = 150.0
    card_height_mm: float = 100.0
    margin_mm: float = 10.0

    def __post_init__(self) -> None:
        for name in (
            "circle_radius_mm",
            "rib_count",
            "card_width_mm",
            "card_height_mm",
            "margin_mm",
        ):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ArgumentError(f"{name} must be a number, got {value!r}.")
            if not np.isfinite(value):
                raise ArgumentError(f"{name} must be finite, got {value!r}.")
        if not self.circle_radius_mm > 0:
            raise ArgumentError(
                f"circle_radius_mm must be positive, got {self.circle_radius_mm}."
            )
        if not (self.card_width_mm > 0 and self.card_height_mm > 0):
            raise ArgumentError("Card dimensions must be positive.")
        if self.margin_mm < 0:
            raise ArgumentError(f"margin_mm must be non-negative: {self.margin_mm}.")
        if int(self.rib_count) != self.rib_count or self.rib_count < 3:
            raise ArgumentError(f"rib_count must be an integer >= 3: {self.rib_count}.")
        object.__setattr__(self, "rib_count", int(self.rib_count))
        needed = 2 * self.circle_radius_mm + 2 * self.margin_mm
        if needed > min(self.card_width_mm, self.card_height_mm):
            raise ArgumentError(
                f"Circle of radius {self.circle_radius_mm}mm with "
                f"{self.margin_mm}mm margin "
                f"needs {needed}mm but the card is "
                f"{self.card_width_mm}x{self.card_height_mm}mm."
            )

    @property
    def centre(self) -> Tuple[float, float]:
        return 0.5 * self.card_width_mm, 0.5 * self.card_height_mm

    @property
    def cut_spacing_mm(self) -> float:
        return 2.0 * self.circle_radius_mm / (self.rib_count + 1)


def cut_offsets(spec: CardSpec) -> np.ndarray:
    """x-offsets of the cuts from the circle centre: -R + i 2R/(n+1), i = 1..n."""
    i = np.arange(1, spec.rib_count + 1)
    return -spec.circle_radius_mm + i * spec.cut_spacing_mm


def rib_params(spec: CardSpec) -> np.ndarray:
    """Cut positions as rib parameters s in (-1, 1)."""
    return cut_offsets(spec) / spec.circle_radius_mm


def _half_heights(radius: float, offsets: np.ndarray) -> np.ndarray:
    return np.sqrt(np.clip(radius * radius - offsets * offsets, 0.0, None))


Chord = Tuple[Tuple[float, float], Tuple[float, float]]


def valley_chords(spec: CardSpec) -> List[Chord]:
    """
    Rib-base chords on both sides of the centreline, upper side first.

    Each side has rib_count + 1 chords joining consecutive cut endpoints, the
    outermost ones ending at the diameter's ends.
    """
    cx, cy = spec.centre
    radius = spec.circle_radius_mm
    xs = np.concatenate([[-radius], cut_offsets(spec), [radius]])
    hs = _half_heights(radius, xs)
    hs[0] = hs[-1] = 0.0
    chords = []
    for sign in (-1.0, 1.0):
        for j in range(len(xs) - 1):
            start = (cx + xs[j], cy + sign * hs[j])
            end = (cx + xs[j + 1], cy + sign * hs[j + 1])
            chords.append((start, end))
    return chords


def make_template(spec: CardSpec) -> SvgDocument:
    """
    Build the cut/crease template for a card.

    Elements, in order: guides (card outline, circle C, card fold outside C), cuts
    (one vertical line per cut crossing the centreline from circle to circle),
    mountain creases (centreline pieces of each rib) and valley creases (rib-base
    chords).
    """
    cx, cy = spec.centre
    radius = spec.circle_radius_mm
    w, h = spec.card_width_mm, spec.card_height_mm
    doc = SvgDocument(w, h, title="Knight's Visor template")

    doc.add_path("guide", [(0, 0), (w, 0), (w, h), (0, h)], closed=True)
    doc.add_circle("guide", (cx, cy), radius)
    doc.add_line("guide", (0.0, cy), (cx - radius, cy))
    doc.add_line("guide", (cx + radius, cy), (w, cy))

    offsets = cut_offsets(spec)
    heights = _half_heights(radius, offsets)
    for dx, dy in zip(offsets, heights):
        doc.add_line("cut", (cx + dx, cy - dy), (cx + dx, cy + dy))

    stops = np.concatenate([[-radius], offsets, [radius]])
    for x0, x1 in zip(stops[:-1], stops[1:]):
        doc.add_line("mountain", (cx + x0, cy), (cx + x1, cy))

    for start, end in valley_chords(spec):
        doc.add_line("valley", start, end)

    logger.info(
        f"Template: {doc.count('cut')} cuts, {doc.count('mountain')} mountain, "
        f"{doc.count('valley')} valley creases."
    )
    return doc
