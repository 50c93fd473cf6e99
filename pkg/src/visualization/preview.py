import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from curves.sampling import Grid  # noqa: E402
from fold3d.kinematics import sample_fold_curve  # noqa: E402
from fold3d.primitives import Polyline3  # noqa: E402
from utils.helpers import get_logger  # noqa: E402

logger = get_logger(__name__)


class RimVisualizer:
    """
    Raster previews of the folded rim with matplotlib.

    Attributes:
        output_dir (str): Directory the PNG files are written to.
        samples (int): Rib samples per rim.
        grid (str): Sampling grid name.
    """

    def __init__(
        self,
        output_dir: str = "plots",
        samples: int = 101,
        grid: str = Grid.UNIFORM_ANGLE,
    ):
        """
        Args:
            output_dir (str): Folder to store the generated plots.
            samples (int): Rib samples per rim.
            grid (str): ``uniform-s`` or ``uniform-angle``.
        """
        self.output_dir = output_dir
        self.samples = samples
        self.grid = grid
        os.makedirs(output_dir, exist_ok=True)

    def rims(self, alphas: Sequence[float]) -> list:
        return [sample_fold_curve(a, self.samples, self.grid) for a in alphas]

    def plot_fold_sweep(
        self, alphas: Sequence[float], filename: str = "fold_sweep.png"
    ) -> str:
        """
        Draw the rims for several fold angles in one 3D axes, with the unit circle
        of the card back for reference.

        Args:
            alphas: Fold angles in radians.
            filename (str): Output file name inside ``output_dir``.

        Returns:
            str: Path of the saved PNG.

        Raises:
            RuntimeError: If the figure cannot be rendered or written.
        """
        try:
            fig = plt.figure(figsize=(7, 6))
            ax = fig.add_subplot(projection="3d")
            theta = np.linspace(0.0, np.pi, 181)
            ax.plot(np.cos(theta), np.sin(theta), 0 * theta, color="0.7", lw=0.8)
            colours = plt.cm.viridis(np.linspace(0.0, 1.0, max(len(alphas), 1)))
            for rim, alpha, colour in zip(self.rims(alphas), alphas, colours):
                self._draw_rim(ax, rim, colour, label=f"{np.degrees(alpha):.1f}°")
            ax.set_xlabel("x")
            ax.set_ylabel("y")
            ax.set_zlabel("z")
            ax.set_title("Visor rim from open to closed")
            ax.legend(loc="upper left", fontsize="small")
            return self._save_plot(fig, filename)
        except Exception as e:
            logger.error("Could not generate fold sweep preview.", exc_info=True)
            raise RuntimeError("Failed to render fold sweep preview.") from e

    @staticmethod
    def _draw_rim(ax, rim: Polyline3, colour, label: str) -> None:
        ax.plot(rim.xs, rim.ys, rim.zs, color=colour, lw=1.2, label=label)

    def _save_plot(self, fig, filename: str) -> str:
        full_path = os.path.join(self.output_dir, filename)
        fig.tight_layout()
        fig.savefig(full_path, dpi=150)
        plt.close(fig)
        logger.info(f"Saved plot: {full_path}")
        return full_path


def plot_fold_sweep(
    output_dir: str,
    alphas: Sequence[float],
    samples: int = 101,
    grid: str = Grid.UNIFORM_ANGLE,
) -> str:
    """Render the fold sweep preview PNG into ``output_dir``."""
    return RimVisualizer(output_dir, samples, grid).plot_fold_sweep(alphas)
