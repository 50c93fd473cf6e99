import numpy as np

from visualization.preview import RimVisualizer, plot_fold_sweep


class TestRimVisualizer:
    """Raster previews of the fold sweep."""

    def test_writes_png(self, tmp_out):
        path = plot_fold_sweep(str(tmp_out), [np.pi, np.pi / 2, 0.0], samples=21)
        with open(path, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"

    def test_rims_follow_angles(self, tmp_out):
        viz = RimVisualizer(str(tmp_out), samples=11)
        rims = viz.rims([0.0, 1.0])
        assert [len(r) for r in rims] == [11, 11]
