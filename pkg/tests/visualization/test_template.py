import re

import numpy as np
import pytest

from utils.exceptions import ArgumentError
from visualization.template import (
    CardSpec,
    cut_offsets,
    make_template,
    rib_params,
    valley_chords,
)


def _lines(svg: str, cls: str):
    num = r"([-\d.]+)"
    pattern = rf'<line class="{cls}" x1="{num}" y1="{num}" x2="{num}" y2="{num}"'
    return [tuple(map(float, m)) for m in re.findall(pattern, svg)]


class TestCardSpec:
    """Validation of the physical card parameters."""

    def test_defaults(self, default_card):
        assert default_card.circle_radius_mm == 30.0
        assert default_card.rib_count == 24

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"margin_mm": 25.0},
            {"rib_count": 2},
            {"rib_count": 3.5},
            {"circle_radius_mm": 0.0},
            {"card_height_mm": -1.0},
            {"margin_mm": -1.0},
            {"circle_radius_mm": 45.0},
            {"rib_count": "abc"},
            {"rib_count": float("inf")},
            {"rib_count": True},
            {"circle_radius_mm": float("nan")},
            {"card_width_mm": None},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ArgumentError):
            CardSpec(**kwargs)


class TestMakeTemplate:
    """The printable cut and crease template."""

    def test_three_ribs(self):
        spec = CardSpec(rib_count=3)
        np.testing.assert_allclose(cut_offsets(spec), [-15.0, 0.0, 15.0], atol=1e-12)
        np.testing.assert_allclose(rib_params(spec), [-0.5, 0.0, 0.5], atol=1e-12)
        doc = make_template(spec)
        assert doc.count("cut") == 3
        assert doc.count("mountain") == 4
        assert doc.count("valley") == 8

    def test_cut_positions_in_svg(self):
        svg = make_template(CardSpec(rib_count=3)).to_string()
        xs = sorted(x1 for x1, _, _, _ in _lines(svg, "cut"))
        assert xs == [60.0, 75.0, 90.0]

    def test_uniform_spacing(self, default_card):
        gaps = np.diff(cut_offsets(default_card))
        np.testing.assert_allclose(gaps, 60.0 / 25.0, rtol=1e-9)

    @pytest.mark.parametrize("ribs", [3, 4, 24])
    def test_valley_chords_end_on_circle(self, ribs):
        spec = CardSpec(rib_count=ribs)
        cx, cy = spec.centre
        chords = valley_chords(spec)
        assert len(chords) == 2 * (ribs + 1)
        for start, end in chords:
            for x, y in (start, end):
                assert np.hypot(x - cx, y - cy) == pytest.approx(30.0, abs=0.01)

    def test_valley_chords_not_parallel_to_centreline(self):
        # with an even count the middle chord spans two cuts of equal height
        for (x0, y0), (x1, y1) in valley_chords(CardSpec(rib_count=23)):
            assert abs(y1 - y0) > 1e-6

    def test_mirror_symmetric_about_centreline(self, default_card):
        svg = make_template(default_card).to_string()
        cy = default_card.centre[1]
        for x1, y1, x2, y2 in _lines(svg, "cut"):
            assert x1 == x2
            assert (y1 - cy) == pytest.approx(cy - y2, abs=0.01)
        valleys = _lines(svg, "valley")
        upper = sorted(
            (x1, x2, round(cy - y1, 2), round(cy - y2, 2))
            for x1, y1, x2, y2 in valleys
            if y1 <= cy and y2 <= cy
        )
        lower = sorted(
            (x1, x2, round(y1 - cy, 2), round(y2 - cy, 2))
            for x1, y1, x2, y2 in valleys
            if y1 >= cy and y2 >= cy
        )
        assert upper == lower

    def test_mountain_creases_cover_diameter(self, default_card):
        svg = make_template(default_card).to_string()
        mountains = _lines(svg, "mountain")
        assert min(m[0] for m in mountains) == pytest.approx(45.0)
        assert max(m[2] for m in mountains) == pytest.approx(105.0)
        assert all(m[1] == m[3] == 50.0 for m in mountains)

    def test_deterministic(self, default_card):
        first = make_template(default_card).to_bytes()
        assert first == make_template(default_card).to_bytes()
