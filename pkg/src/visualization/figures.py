"""
Plot-style SVG figures of 2D curves in abstract (unit circle) coordinates.

Every figure shares one affine map from model to page: a uniform scale chosen to fit
the content, centred on the page, with y flipped for the screen convention.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from curves.flat_visor import rib_bases, rib_lengths
from curves.nephroid import epicycloid_points, mirror_over_axis, rolling_circle_center
from curves.primitives import Polyline2
from curves.sampling import interval_grid, sample_flat_curve
from envelopes.caustic import reflected_chord
from envelopes.engine import Envelope
from fold3d.primitives import Polyline3
from utils.exceptions import ArgumentError
from visualization.svg import SvgDocument

PAGE_MM = (160.0, 160.0)
MARGIN_MM = 8.0

Circle = Tuple[float, float, float]
Segment = Tuple[Sequence[float], Sequence[float]]


@dataclass(frozen=True)
class Viewport:
    """Uniform-scale model-to-page map with y pointing down on the page."""

    scale: float
    x0: float
    y0: float

    @classmethod
    def fit(
        cls, bounds: Tuple[float, float, float, float], size_mm, margin_mm: float
    ) -> "Viewport":
        xmin, ymin, xmax, ymax = bounds
        width, height = size_mm
        span_x = max(xmax - xmin, 1e-12)
        span_y = max(ymax - ymin, 1e-12)
        scale = min((width - 2 * margin_mm) / span_x, (height - 2 * margin_mm) / span_y)
        x0 = 0.5 * width - scale * 0.5 * (xmin + xmax)
        y0 = 0.5 * height + scale * 0.5 * (ymin + ymax)
        return cls(scale=scale, x0=x0, y0=y0)

    def apply(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        xs = self.x0 + self.scale * pts[:, 0]
        ys = self.y0 - self.scale * pts[:, 1]
        return np.column_stack([xs, ys])


def _bounds(
    curves: Sequence[Polyline2],
    circles: Sequence[Circle],
    segments: Sequence[Segment],
    unit_circle: bool,
) -> Tuple[float, float, float, float]:
    chunks = [c.points for c in curves]
    chunks += [np.array([[cx - r, cy - r], [cx + r, cy + r]]) for cx, cy, r in circles]
    chunks += [np.asarray(seg, dtype=float).reshape(2, 2) for seg in segments]
    if unit_circle:
        chunks.append(np.array([[-1.0, -1.0], [1.0, 1.0]]))
    pts = np.vstack(chunks)
    return pts[:, 0].min(), pts[:, 1].min(), pts[:, 0].max(), pts[:, 1].max()


def export_curve_svg(
    curves: Sequence[Polyline2],
    styles: Optional[Sequence[str]] = None,
    unit_circle: bool = False,
    x_axis: bool = False,
    circles: Sequence[Circle] = (),
    segments: Sequence[Segment] = (),
    size_mm: Tuple[float, float] = PAGE_MM,
    margin_mm: float = MARGIN_MM,
    title: Optional[str] = None,
) -> SvgDocument:
    """
    Draw polylines as SVG paths under a single viewport transform.

    Args:
        curves: Curves to draw, in model coordinates.
        styles: Class tag per curve; defaults to ``curve``.
        unit_circle: Add the unit circle as a guide.
        x_axis: Add the x-axis across the content as a guide.
        circles: Extra guide circles as (cx, cy, radius).
        segments: Extra guide segments as pairs of points.

    Returns:
        SvgDocument: Guides first, then one path per curve in input order.

    Raises:
        ArgumentError: If no curve is given or styles do not match the curves.
    """
    curves = list(curves)
    if not curves:
        raise ArgumentError("export_curve_svg needs at least one curve.")
    styles = list(styles) if styles is not None else ["curve"] * len(curves)
    if len(styles) != len(curves):
        raise ArgumentError(f"Got {len(styles)} styles for {len(curves)} curves.")

    xmin, ymin, xmax, ymax = _bounds(curves, circles, segments, unit_circle)
    view = Viewport.fit((xmin, ymin, xmax, ymax), size_mm, margin_mm)
    doc = SvgDocument(size_mm[0], size_mm[1], title=title)

    if x_axis:
        left, right = view.apply([[xmin, 0.0], [xmax, 0.0]])
        doc.add_line("guide", left, right)
    if unit_circle:
        doc.add_circle("guide", view.apply([0.0, 0.0])[0], view.scale)
    for cx, cy, r in circles:
        doc.add_circle("guide", view.apply([cx, cy])[0], view.scale * r)
    for start, end in segments:
        a, b = view.apply([start, end])
        doc.add_line("guide", a, b)
    for curve, cls in zip(curves, styles):
        doc.add_path(cls, view.apply(curve.points))
    return doc


def kidney_figure(n: int) -> SvgDocument:
    """Flat visor curve and its mirror over the x-axis: the whole nephroid."""
    flat = sample_flat_curve(n)
    return export_curve_svg(
        [flat, mirror_over_axis(flat)],
        unit_circle=True,
        x_axis=True,
        title="Kidney",
    )


def epicycloid_curve(n: int) -> Polyline2:
    """The traced nephroid over one full period t in [0, 2 pi]."""
    t = np.linspace(0.0, 2.0 * np.pi, int(n))
    return Polyline2(params=t, points=epicycloid_points(t))


def rolling_circle_figure(n: int, snapshots: int = 6) -> SvgDocument:
    """Traced nephroid with snapshots of the radius-1/2 rolling circle."""
    if int(snapshots) != snapshots or snapshots < 0:
        raise ArgumentError(f"snapshots must be a non-negative integer: {snapshots}.")
    ts = np.linspace(0.0, 2.0 * np.pi, int(snapshots), endpoint=False)
    circles = [(*rolling_circle_center(t), 0.5) for t in ts]
    return export_curve_svg(
        [epicycloid_curve(n)],
        unit_circle=True,
        x_axis=True,
        circles=circles,
        title="Epicycloid",
    )


def circle_envelope_figure(envelope: Envelope, k: int) -> SvgDocument:
    """Guide circle, k generating circles centred on rib bases, and the envelope."""
    if int(k) != k or k < 1:
        raise ArgumentError(f"Need at least one generating circle, got {k}.")
    s = interval_grid(-1.0, 1.0, int(k) + 2)[1:-1]
    centres = rib_bases(s)
    radii = rib_lengths(s)
    circles = [(float(c[0]), float(c[1]), float(r)) for c, r in zip(centres, radii)]
    return export_curve_svg(
        [envelope.as_polyline()],
        unit_circle=True,
        x_axis=True,
        circles=circles,
        title="Envelope of rib circles",
    )


def caustic_figure(caustic: Envelope, rays: int) -> SvgDocument:
    """Reflected chords of vertical rays in the unit circle and their caustic."""
    if int(rays) != rays or rays < 1:
        raise ArgumentError(f"Need at least one ray, got {rays}.")
    s = interval_grid(-1.0, 1.0, int(rays) + 2)[1:-1]
    segments = [reflected_chord(v) for v in s]
    return export_curve_svg(
        [caustic.as_polyline()],
        unit_circle=True,
        x_axis=True,
        segments=segments,
        title="Caustic",
    )


def medial_projection(rim: Polyline3) -> Polyline2:
    """
    Rotate a rim about the x-axis into the card back.

    Each rim lies in its medial plane, which contains the x-axis, so the map
    (x, y, z) -> (x, hypot(y, z)) keeps its true shape.
    """
    pts = rim.points
    flat = np.column_stack([pts[:, 0], np.hypot(pts[:, 1], pts[:, 2])])
    return Polyline2(params=rim.params, points=flat)


def sweep_projection_figure(rims: Sequence[Polyline3]) -> SvgDocument:
    """True shapes of rims at several fold angles, overlaid on the unit circle."""
    curves = [medial_projection(rim) for rim in rims]
    return export_curve_svg(
        curves, unit_circle=True, x_axis=True, title="Fold sweep"
    )
