import numpy as np
import pytest

from curves.flat_visor import flat_visor_points
from data.obj_export import export_fold_obj, obj_rib_params, read_obj
from utils.exceptions import ArgumentError, DomainError
from visualization.template import CardSpec


def _rim(mesh, spec):
    """Rim vertices (unit circle scale) without the two diameter ends."""
    rim = np.array([mesh.vertices[i] for i in mesh.lines[-1]]) / spec.circle_radius_mm
    return rim[1:-1]


class TestExportFoldObj:
    """OBJ export of the folded card."""

    def test_counts_at_right_angle(self, default_card):
        mesh = read_obj(export_fold_obj(np.pi / 2, default_card))
        assert len(mesh.vertices) == 80
        assert len(mesh.lines) == 51
        assert mesh.faces == []

    def test_rim_satisfies_sphere_constraints(self, default_card):
        alpha = np.pi / 2
        mesh = read_obj(export_fold_obj(alpha, default_card, n=24))
        s = obj_rib_params(24)
        r = np.sqrt(1.0 - s * s)
        p = _rim(mesh, default_card)
        b = np.column_stack([s, r, 0 * s])
        b1 = np.column_stack([s, r * np.cos(alpha), r * np.sin(alpha)])
        assert np.max(np.abs(np.sum((p - b) ** 2, axis=1) - r * r)) < 1e-9
        assert np.max(np.abs(np.sum((p - b1) ** 2, axis=1) - r * r)) < 1e-9

    def test_open_card_is_flat(self, default_card):
        mesh = read_obj(export_fold_obj(np.pi, default_card))
        assert all(z == 0.0 for _, _, z in mesh.vertices)
        assert np.all(_rim(mesh, default_card)[:, 1] == 0.0)

    def test_closed_card_front_coincides_with_back(self, default_card):
        mesh = read_obj(export_fold_obj(0.0, default_card, n=24))
        assert len(mesh.vertices) == 54
        assert mesh.lines[0] == mesh.lines[1]
        rim = _rim(mesh, default_card)
        flat = flat_visor_points(obj_rib_params(24))
        np.testing.assert_allclose(rim[:, :2], flat, atol=1e-9)
        assert np.all(rim[:, 2] == 0.0)

    def test_quad_ribs(self):
        spec = CardSpec(rib_count=5)
        mesh = read_obj(export_fold_obj(1.0, spec, rib_width_mm=1.0))
        assert len(mesh.faces) == 10
        assert all(len(face) == 4 for face in mesh.faces)
        assert len(mesh.lines) == 3

    def test_deterministic(self, default_card):
        assert export_fold_obj(1.2, default_card) == export_fold_obj(1.2, default_card)

    def test_one_based_indices(self, default_card):
        text = export_fold_obj(1.2, default_card).decode("utf-8")
        first_line = next(row for row in text.splitlines() if row.startswith("l "))
        assert min(int(i) for i in first_line.split()[1:]) == 1

    @pytest.mark.parametrize("n", [1, 0])
    def test_too_few_ribs(self, default_card, n):
        with pytest.raises(ArgumentError):
            export_fold_obj(1.0, default_card, n=n)

    def test_angle_out_of_range(self, default_card):
        with pytest.raises(DomainError):
            export_fold_obj(4.0, default_card)

    def test_bad_rib_width(self, default_card):
        with pytest.raises(ArgumentError):
            export_fold_obj(1.0, default_card, rib_width_mm=0.0)


def test_read_obj_rejects_dangling_index():
    with pytest.raises(ArgumentError):
        read_obj(b"v 0 0 0\nl 1 2\n")


def test_read_obj_rejects_unknown_record():
    with pytest.raises(ArgumentError):
        read_obj(b"v 0 0 0\nvt 0 0\n")
