import numpy as np
import pytest

from fold3d.constraint_solver import constraint_residuals, visor_point_3d_numeric
from fold3d.kinematics import visor_point_3d, visor_points_3d
from utils.exceptions import ArgumentError, DegenerateRibError


class TestNumericOracle:
    """The constraint solve agrees with the closed form."""

    def test_spot_value(self):
        p = visor_point_3d_numeric(0.6, np.pi / 2)
        np.testing.assert_allclose(p, (1.068293, 0.624390, 0.624390), atol=1e-6)

    def test_grid_agreement(self):
        ss = np.linspace(-0.999, 0.999, 25)
        aa = np.linspace(0.01, np.pi - 0.01, 25)
        worst = 0.0
        for s in ss:
            closed = visor_points_3d(s, aa)
            for a, p in zip(aa, closed):
                numeric = np.asarray(visor_point_3d_numeric(float(s), float(a)))
                worst = max(worst, float(np.linalg.norm(numeric - p)))
        assert worst < 1e-8

    def test_centre_rib_at_right_angle(self):
        p = visor_point_3d_numeric(0.0, np.pi / 2)
        np.testing.assert_allclose(p, (0.0, 1.0, 1.0), atol=1e-12)

    def test_matches_closed_form_at_obtuse_angle(self):
        alpha = 2.0 * np.pi / 3.0
        numeric = visor_point_3d_numeric(0.3, alpha)
        np.testing.assert_allclose(numeric, visor_point_3d(0.3, alpha), atol=1e-12)

    def test_solution_lies_above_card_back(self):
        assert visor_point_3d_numeric(-0.3, 2.0).z > 0.0

    @pytest.mark.parametrize("s", [1.0, -1.0])
    def test_zero_length_rib(self, s):
        with pytest.raises(DegenerateRibError):
            visor_point_3d_numeric(s, 1.0)

    @pytest.mark.parametrize("alpha", [0.0, np.pi])
    def test_boundary_angles_rejected(self, alpha):
        with pytest.raises(ArgumentError):
            visor_point_3d_numeric(0.2, alpha)


def test_residuals_vanish_on_closed_form():
    p = visor_point_3d(0.35, 1.2)
    np.testing.assert_allclose(constraint_residuals(p, 0.35, 1.2), 0.0, atol=1e-12)


def test_residuals_detect_off_rim_point():
    assert np.max(np.abs(constraint_residuals((0.0, 0.0, 0.0), 0.35, 1.2))) > 0.1
