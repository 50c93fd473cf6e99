"""
The cmd_* operations behind the command line.

Each command takes a resolved :class:`RunConfig` and an output directory, writes its
files deterministically and returns a process exit status. Library errors are left
to propagate; the CLI maps them to exit statuses.
"""

from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from rich.console import Console
from rich.table import Table

from analytics.verification import InvariantSuite
from curves.flat_visor import flat_visor_points
from curves.nephroid import implicit_residual
from curves.sampling import sample_flat_curve
from data.obj_export import export_fold_obj
from data.polyline_csv import write_polyline_csv
from envelopes.caustic import caustic_curve, caustic_residual, cusp_mask, find_cusp
from envelopes.engine import circle_family_envelope
from envelopes.families import visor_circle_family
from fold3d.kinematics import sample_fold_curve
from fold3d.primitives import check_fold_angle
from pipeline.config import RunConfig
from utils.exceptions import ArgumentError
from utils.helpers import get_logger
from visualization.figures import (
    caustic_figure,
    circle_envelope_figure,
    epicycloid_curve,
    export_curve_svg,
    kidney_figure,
    rolling_circle_figure,
    sweep_projection_figure,
)
from visualization.template import make_template

console = Console()
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def degrees_to_alpha(alpha_deg: float) -> float:
    """Fold angle in radians from degrees, validated against [0, pi]."""
    return float(check_fold_angle(np.radians(float(alpha_deg))))


def angle_tag(alpha_deg: float) -> str:
    """File-name fragment for an angle: 90 -> '90deg', 22.5 -> '22.5deg'."""
    return f"{float(alpha_deg):g}deg"


def _summary(title: str, rows: Sequence[Sequence[str]]) -> None:
    table = Table(title=title, show_header=False)
    table.add_column("Item", justify="left")
    table.add_column("Value", justify="right")
    for row in rows:
        table.add_row(*row)
    console.print(table)


def cmd_template(config: RunConfig, out_dir: Path) -> int:
    """Write the printable cut/crease template and print its element counts."""
    doc = make_template(config.card)
    path = doc.write(Path(out_dir) / "template.svg")
    _summary(
        "Template",
        [
            ("Cuts", str(doc.count("cut"))),
            ("Mountain creases", str(doc.count("mountain"))),
            ("Valley creases", str(doc.count("valley"))),
            ("File", str(path)),
        ],
    )
    return EXIT_OK


def _write_curve(config: RunConfig, out_dir: Path, alpha_deg: float) -> List[Path]:
    alpha = degrees_to_alpha(alpha_deg)
    stem = Path(out_dir) / f"curve_{angle_tag(alpha_deg)}"
    if alpha == 0.0:
        flat = sample_flat_curve(config.samples, config.grid)
        svg = export_curve_svg(
            [flat], unit_circle=True, x_axis=True, title="Flat visor"
        )
        paths = [write_polyline_csv(flat, stem.with_suffix(".csv"))]
    else:
        rim = sample_fold_curve(alpha, config.samples, config.grid)
        svg = sweep_projection_figure([rim])
        paths = [write_polyline_csv(rim, stem.with_suffix(".csv"))]
    paths.append(svg.write(stem.with_suffix(".svg")))
    return paths


def cmd_curve(config: RunConfig, out_dir: Path, alpha_deg: float) -> int:
    """
    Sample the rim at one fold angle and write it as CSV and SVG.

    At 0 degrees the flat curve is written in 2D, together with the whole kidney
    (the curve and its mirror) as ``kidney.svg``.
    """
    paths = _write_curve(config, out_dir, alpha_deg)
    if degrees_to_alpha(alpha_deg) == 0.0:
        paths.append(kidney_figure(config.samples).write(Path(out_dir) / "kidney.svg"))
    _summary(
        f"Rim at {alpha_deg:g} degrees",
        [("Samples", str(config.samples)), ("Grid", config.grid)]
        + [("File", str(p)) for p in paths],
    )
    return EXIT_OK


def cmd_sweep(
    config: RunConfig,
    out_dir: Path,
    alphas_deg: Optional[Sequence[float]] = None,
    preview: bool = False,
) -> int:
    """
    One curve file per fold angle plus the combined projection figure.

    Raises:
        ArgumentError: If the angle list is empty.
    """
    alphas_deg = list(config.sweep_alphas_deg if alphas_deg is None else alphas_deg)
    if not alphas_deg:
        raise ArgumentError("The sweep needs at least one fold angle.")
    alphas = [degrees_to_alpha(a) for a in alphas_deg]

    for a in alphas_deg:
        _write_curve(config, out_dir, a)
    rims = [sample_fold_curve(a, config.samples, config.grid) for a in alphas]
    combined = sweep_projection_figure(rims).write(Path(out_dir) / "sweep.svg")
    rows = [
        ("Angles", ", ".join(f"{a:g}" for a in alphas_deg)),
        ("Combined", str(combined)),
    ]
    if preview:
        from visualization.preview import plot_fold_sweep

        png = plot_fold_sweep(str(out_dir), alphas, config.samples, config.grid)
        rows.append(("Preview", png))
    _summary("Fold sweep", rows)
    return EXIT_OK


def cmd_verify(
    config: RunConfig, out_dir: Path, uniform_tolerance: Optional[float] = None
) -> int:
    """
    Run the invariant suite, print the residual table and save it as CSV.

    Returns 0 when every check passes and 1 otherwise.
    """
    suite = InvariantSuite(
        samples=config.samples,
        grid=config.grid,
        oracle_samples=config.oracle_samples,
        envelope_samples=config.envelope_samples,
        tolerances=config.tolerances,
        uniform_tolerance=uniform_tolerance,
    )
    report = suite.run(display=False)
    report.render(console)
    path = Path(out_dir) / "verify_report.csv"
    path.parent.mkdir(parents=True, exist_ok=True)
    report.to_frame().to_csv(
        path, index=False, lineterminator="\n", float_format="%.6e"
    )
    logger.info(f"Saved verification report: {path}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_caustic(config: RunConfig, out_dir: Path) -> int:
    """
    Compute the caustic of vertical rays in the unit circle, draw it with the
    reflected ray bundle and report the cusp and the residual statistics.
    """
    caustic = caustic_curve(config.samples)
    away = caustic.points[cusp_mask(caustic.points)]
    residual = np.abs(caustic_residual(away)) if len(away) else np.zeros(1)
    cusp = find_cusp(caustic)

    csv_path = write_polyline_csv(caustic.as_polyline(), Path(out_dir) / "caustic.csv")
    svg_path = caustic_figure(caustic, config.card.rib_count).write(
        Path(out_dir) / "caustic.svg"
    )
    _summary(
        "Caustic",
        [
            ("Cusp", f"({cusp.x:.6f}, {cusp.y:.6f})"),
            ("Max residual", f"{residual.max():.3e}"),
            ("Mean residual", f"{residual.mean():.3e}"),
            ("Samples away from cusp", str(len(away))),
            ("Dropped samples", str(len(caustic.dropped))),
            ("Low-confidence samples", str(int(caustic.low_confidence.sum()))),
            ("Files", f"{csv_path}, {svg_path}"),
        ],
    )
    return EXIT_OK


def cmd_epicycloid(config: RunConfig, out_dir: Path, snapshots: int = 6) -> int:
    """Trace the nephroid by a rolling circle over one full turn."""
    curve = epicycloid_curve(config.samples)
    worst = np.abs(implicit_residual(curve.points)).max()
    csv_path = write_polyline_csv(curve, Path(out_dir) / "epicycloid.csv")
    svg_path = rolling_circle_figure(config.samples, snapshots).write(
        Path(out_dir) / "epicycloid.svg"
    )
    _summary(
        "Epicycloid",
        [
            ("Max implicit residual", f"{worst:.3e}"),
            ("Files", f"{csv_path}, {svg_path}"),
        ],
    )
    return EXIT_OK


def cmd_envelope(config: RunConfig, out_dir: Path) -> int:
    """Envelope of the circles centred on the rib bases through the rib feet."""
    envelope = circle_family_envelope(visor_circle_family(), config.envelope_samples)
    exact = flat_visor_points(envelope.params)
    distance = np.linalg.norm(envelope.points - exact, axis=1)
    worst = np.abs(implicit_residual(envelope.points)).max()
    csv_path = write_polyline_csv(
        envelope.as_polyline(), Path(out_dir) / "circle_envelope.csv"
    )
    svg_path = circle_envelope_figure(envelope, config.card.rib_count).write(
        Path(out_dir) / "circle_envelope.svg"
    )
    _summary(
        "Envelope of rib circles",
        [
            ("Samples", str(len(envelope))),
            ("Max implicit residual", f"{worst:.3e}"),
            ("Max distance to flat curve", f"{distance.max():.3e}"),
            ("Files", f"{csv_path}, {svg_path}"),
        ],
    )
    return EXIT_OK


def cmd_fold(
    config: RunConfig,
    out_dir: Path,
    alpha_deg: float,
    rib_width_mm: Optional[float] = None,
) -> int:
    """Write the folded card at one angle as an OBJ mesh."""
    alpha = degrees_to_alpha(alpha_deg)
    data = export_fold_obj(alpha, config.card, rib_width_mm=rib_width_mm)
    path = Path(out_dir) / f"fold_{angle_tag(alpha_deg)}.obj"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    logger.info(f"Saved OBJ: {path}")
    text = data.decode("utf-8").splitlines()
    _summary(
        f"Folded card at {alpha_deg:g} degrees",
        [
            ("Vertices", str(sum(1 for line in text if line.startswith("v ")))),
            ("Line elements", str(sum(1 for line in text if line.startswith("l ")))),
            ("Faces", str(sum(1 for line in text if line.startswith("f ")))),
            ("File", str(path)),
        ],
    )
    return EXIT_OK
