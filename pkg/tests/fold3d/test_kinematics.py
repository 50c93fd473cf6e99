import numpy as np
import pytest

from curves.flat_visor import flat_visor_points, reflection_midpoints
from fold3d.kinematics import (
    front_anchor,
    medial_plane,
    sample_fold_curve,
    specialise,
    vertical_plane,
    visor_point_3d,
    visor_points_3d,
)
from fold3d.primitives import Plane3, check_fold_angle
from utils.exceptions import ArgumentError, DegenerateRibError, DomainError


class TestClosedForm:
    """The rim point p(alpha, s) from the closed-form solution."""

    def test_spot_value(self):
        p = visor_point_3d(0.6, np.pi / 2)
        np.testing.assert_allclose(p, (1.068293, 0.624390, 0.624390), atol=1e-6)

    def test_apex_when_closed(self):
        np.testing.assert_allclose(visor_point_3d(0.0, 0.0), (0.0, 2.0, 0.0), atol=1e-12)

    def test_open_card_collapses_to_diameter(self, s_grid):
        p = visor_points_3d(s_grid, np.pi)
        expected = np.column_stack([s_grid, np.zeros_like(s_grid), np.zeros_like(s_grid)])
        np.testing.assert_allclose(p, expected, atol=1e-9)

    def test_closed_card_is_flat_curve(self, s_grid):
        p = visor_points_3d(s_grid, 0.0)
        np.testing.assert_allclose(p[:, :2], flat_visor_points(s_grid), atol=1e-9)
        np.testing.assert_array_equal(p[:, 2], 0.0)

    @pytest.mark.parametrize("s", [-1.0, 1.0])
    @pytest.mark.parametrize("alpha", [0.0, 1.0, np.pi])
    def test_zero_length_rib(self, s, alpha):
        assert visor_point_3d(s, alpha) == (s, 0.0, 0.0)

    def test_spheres_and_planes(self, s_grid, alpha_grid):
        s, a = np.meshgrid(s_grid, alpha_grid, indexing="ij")
        s, a = s.ravel(), a.ravel()
        p = visor_points_3d(s, a)
        r2 = 1.0 - s * s
        r = np.sqrt(r2)
        b = np.column_stack([s, r, 0 * s])
        b1 = np.column_stack([s, r * np.cos(a), r * np.sin(a)])
        assert np.max(np.abs(np.sum((p - b) ** 2, axis=1) - r2)) < 1e-9
        assert np.max(np.abs(np.sum((p - b1) ** 2, axis=1) - r2)) < 1e-9
        medial = p[:, 2] * np.cos(a / 2) - p[:, 1] * np.sin(a / 2)
        assert np.max(np.abs(medial)) < 1e-12
        assert np.max(np.abs(r * p[:, 0] - s * p[:, 1] - r * s)) < 1e-9

    def test_rim_stays_on_cone(self, s_grid, alpha_grid):
        s, a = np.meshgrid(s_grid, alpha_grid, indexing="ij")
        s, a = s.ravel(), a.ravel()
        c = np.column_stack([reflection_midpoints(s), 0 * s])
        dist = np.linalg.norm(visor_points_3d(s, a) - c, axis=1)
        np.testing.assert_allclose(dist, 1.0 - s * s, atol=1e-9)

    def test_continuity_near_boundaries(self, s_grid):
        delta = 1e-4
        near_open = visor_points_3d(s_grid, np.pi - delta)
        axis = np.column_stack([s_grid, 0 * s_grid, 0 * s_grid])
        assert np.max(np.linalg.norm(near_open - axis, axis=1)) <= 1.1 * delta
        near_closed = visor_points_3d(s_grid, delta)
        flat = np.column_stack([flat_visor_points(s_grid), 0 * s_grid])
        assert np.max(np.linalg.norm(near_closed - flat, axis=1)) <= 1.1 * delta

    @pytest.mark.parametrize("s", [-0.9, -0.4, 0.0, 0.3, 0.99])
    def test_monotone_bowing(self, s):
        alphas = np.linspace(0.0, np.pi, 181)
        y = visor_points_3d(s, alphas)[:, 1]
        assert np.all(np.diff(y) < 0)

    @pytest.mark.parametrize("alpha", [-0.1, np.pi + 0.1, np.nan])
    def test_fold_angle_out_of_range(self, alpha):
        with pytest.raises(DomainError):
            visor_point_3d(0.5, alpha)

    def test_fold_angle_snaps_rounding_noise(self):
        assert float(check_fold_angle(np.pi + 1e-13)) == np.pi


class TestPlanes:
    """Front anchor, medial plane and plane V."""

    def test_front_anchor(self):
        np.testing.assert_allclose(front_anchor(0.6, np.pi / 2), (0.6, 0.0, 0.8), atol=1e-15)
        np.testing.assert_allclose(front_anchor(0.6, np.pi), (0.6, -0.8, 0.0), atol=1e-15)

    def test_medial_plane_bisects_card(self):
        plane = medial_plane(np.pi / 2)
        assert plane.residual((1.0, 1.0, 1.0)) == pytest.approx(0.0, abs=1e-15)
        assert plane.residual((5.0, 0.0, 0.0)) == 0.0

    def test_vertical_plane_contains_rib_foot(self):
        plane = vertical_plane(0.6)
        assert plane.residual((0.6, 0.0, 0.0)) == pytest.approx(0.0, abs=1e-15)
        assert plane.residual((0.6, 0.0, 3.0)) == pytest.approx(0.0, abs=1e-15)

    def test_vertical_plane_undefined_for_zero_length_rib(self):
        with pytest.raises(DegenerateRibError):
            vertical_plane(1.0)

    def test_plane_needs_non_zero_normal(self):
        with pytest.raises(ArgumentError):
            Plane3((0.0, 0.0, 0.0), 1.0)


class TestSampling:
    def test_sample_fold_curve(self):
        rim = sample_fold_curve(np.pi / 2, 101, "uniform-s")
        assert len(rim) == 101
        i = int(np.argmin(np.abs(rim.params - 0.6)))
        np.testing.assert_allclose(rim.point(i), (1.068293, 0.624390, 0.624390), atol=1e-6)

    def test_specialise_keeps_denominator(self):
        x_of, y_of, z_of = specialise(np.pi / 3)
        assert y_of(0.0) == pytest.approx(1.5)
        s = np.linspace(-0.9, 0.9, 19)
        p = visor_points_3d(s, np.pi / 3)
        np.testing.assert_allclose(np.column_stack([x_of(s), y_of(s), z_of(s)]), p, atol=1e-12)
