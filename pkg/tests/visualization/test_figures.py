import re

import numpy as np
import pytest

from curves.primitives import Polyline2
from curves.sampling import sample_flat_curve
from envelopes.caustic import caustic_curve
from envelopes.engine import circle_family_envelope
from envelopes.families import visor_circle_family
from fold3d.kinematics import sample_fold_curve
from utils.exceptions import ArgumentError
from visualization.figures import (
    caustic_figure,
    circle_envelope_figure,
    export_curve_svg,
    kidney_figure,
    medial_projection,
    rolling_circle_figure,
    sweep_projection_figure,
)


SEGMENT = r'd="M ([\d.]+),([\d.]+) L ([\d.]+),([\d.]+)"'


class TestExportCurveSvg:
    """Plot-style figures under one viewport transform."""

    def test_single_segment(self):
        c = Polyline2(params=[0.0, 1.0], points=[[0.0, 0.0], [1.0, 1.0]])
        doc = export_curve_svg([c])
        assert doc.count("curve", kind="path") == 1
        d = re.search(r'd="([^"]+)"', doc.to_string()).group(1)
        assert d.count(",") == 2

    def test_y_axis_points_up(self):
        c = Polyline2(params=[0.0, 1.0], points=[[0.0, 0.0], [0.0, 1.0]])
        d = re.search(SEGMENT, export_curve_svg([c]).to_string())
        assert float(d.group(4)) < float(d.group(2))

    def test_uniform_scale(self):
        c = Polyline2(params=[0.0, 1.0], points=[[0.0, 0.0], [2.0, 1.0]])
        d = re.search(SEGMENT, export_curve_svg([c]).to_string())
        x0, y0, x1, y1 = map(float, d.groups())
        assert (x1 - x0) == pytest.approx(2.0 * (y0 - y1), abs=1e-3)

    def test_empty_input(self):
        with pytest.raises(ArgumentError):
            export_curve_svg([])

    def test_styles_must_match(self):
        with pytest.raises(ArgumentError):
            export_curve_svg([sample_flat_curve(5)], styles=["curve", "guide"])


class TestFigureBuilders:
    def test_kidney_has_two_paths(self):
        doc = kidney_figure(101)
        assert doc.count(kind="path") == 2
        assert doc.count("guide", kind="circle") == 1

    def test_rolling_circle_snapshots(self):
        doc = rolling_circle_figure(181, snapshots=4)
        assert doc.count(kind="circle") == 5

    def test_circle_envelope_figure(self):
        env = circle_family_envelope(visor_circle_family(), 101)
        doc = circle_envelope_figure(env, 8)
        assert doc.count(kind="circle") == 9
        assert doc.count("curve", kind="path") == 1

    def test_caustic_rays(self):
        doc = caustic_figure(caustic_curve(101), 12)
        assert doc.count("guide", kind="line") == 13

    def test_sweep_projection(self):
        rims = [sample_fold_curve(a, 51) for a in (0.0, np.pi / 2, np.pi)]
        doc = sweep_projection_figure(rims)
        assert doc.count("curve", kind="path") == 3

    def test_medial_projection_keeps_distance_from_fold(self):
        rim = sample_fold_curve(np.pi / 2, 21)
        flat = medial_projection(rim)
        np.testing.assert_allclose(flat.ys, np.hypot(rim.ys, rim.zs))
        np.testing.assert_array_equal(flat.xs, rim.xs)
