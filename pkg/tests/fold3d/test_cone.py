import numpy as np
import pytest

from curves.flat_visor import flat_visor_point, reflection_midpoint
from fold3d.cone import cone_angle, cone_rim_point, cone_rim_points, sample_cone_rim
from fold3d.kinematics import visor_point_3d
from utils.exceptions import DegenerateRibError, DomainError


class TestConeRim:
    """The semicircle swept by a rib tip while the card opens."""

    def test_ends_of_semicircle(self):
        start, end = cone_rim_point(0.6, 0.0), cone_rim_point(0.6, np.pi)
        np.testing.assert_allclose(start, (0.6, 0.0, 0.0), atol=1e-12)
        np.testing.assert_allclose(end, (*flat_visor_point(0.6), 0.0), atol=1e-12)

    @pytest.mark.parametrize(
        "theta, expected", [(0.0, (0.0, 0.0, 0.0)), (np.pi / 2, (0.0, 1.0, 1.0))]
    )
    def test_centre_rib(self, theta, expected):
        np.testing.assert_allclose(cone_rim_point(0.0, theta), expected, atol=1e-12)

    def test_radius(self):
        pts = cone_rim_points(0.6, np.linspace(0.0, np.pi, 19))
        c = np.array([*reflection_midpoint(0.6), 0.0])
        np.testing.assert_allclose(np.linalg.norm(pts - c, axis=1), 0.64, atol=1e-12)

    def test_spot_distance(self):
        c = np.array([*reflection_midpoint(0.6), 0.0])
        p = np.asarray(visor_point_3d(0.6, np.pi / 2))
        assert np.linalg.norm(p - c) == pytest.approx(0.64, abs=1e-9)

    @pytest.mark.parametrize("alpha", [0.3, 1.0, np.pi / 2, 2.5])
    def test_cone_angle_recovers_rim_point(self, alpha):
        theta = cone_angle(0.6, alpha)
        np.testing.assert_allclose(
            cone_rim_point(0.6, theta), visor_point_3d(0.6, alpha), atol=1e-12
        )

    def test_cone_angle_ends(self):
        assert cone_angle(0.4, 0.0) == pytest.approx(np.pi)
        assert cone_angle(0.4, np.pi) == pytest.approx(0.0, abs=1e-12)

    def test_sample_cone_rim(self):
        rim = sample_cone_rim(-0.2, 7)
        assert len(rim) == 7
        assert np.all(rim.zs >= 0.0)

    def test_zero_length_rib(self):
        with pytest.raises(DegenerateRibError):
            cone_rim_point(1.0, 0.5)

    def test_angle_out_of_range(self):
        with pytest.raises(DomainError):
            cone_rim_point(0.2, -0.1)
