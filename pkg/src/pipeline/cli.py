"""
visorlab command line.

    visorlab template|curve|sweep|verify|caustic|epicycloid|envelope|fold [options]

Exit status: 0 on success, 1 when verification or a numeric solve fails, 2 on
usage, config or argument errors. Angles are given in degrees.
"""

import argparse
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

from rich.console import Console

from analytics.path_config import resolve_out_dir
from curves.sampling import Grid
from pipeline import commands
from pipeline.config import RunConfig, apply_overrides, load_config
from utils.exceptions import (
    ArgumentError,
    ConfigError,
    ConvergenceError,
    DomainError,
    EnvelopeUndefinedError,
)
from utils.helpers import get_logger, set_log_level

console = Console(stderr=True)
logger = get_logger(__name__)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="JSON run configuration")
    common.add_argument("--samples", type=int, default=None, help="Samples per curve")
    common.add_argument(
        "--grid", choices=[g.value for g in Grid], default=None, help="Rib parameter grid"
    )
    common.add_argument("--out", type=Path, default=None, help="Output directory")
    common.add_argument("--ribs", type=int, default=None, help="Number of cuts on the card")
    common.add_argument(
        "--radius-mm", type=float, default=None, help="Radius of the circle C in mm"
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="Override every verification tolerance with this value",
    )
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="Debug logging")
    noise.add_argument("--quiet", action="store_true", help="Warnings and errors only")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="visorlab",
        description="Geometry of the Knight's Visor pop-up card: templates, rims, envelopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("template", parents=[common], help="Printable cut/crease template (SVG)")

    curve = sub.add_parser("curve", parents=[common], help="Rim at one fold angle (CSV, SVG)")
    curve.add_argument("--alpha", type=float, default=0.0, help="Fold angle in degrees")

    sweep = sub.add_parser("sweep", parents=[common], help="Rims over several fold angles")
    sweep.add_argument(
        "--alphas",
        type=float,
        nargs="*",
        default=None,
        help="Fold angles in degrees (default: the configured sweep)",
    )
    sweep.add_argument("--preview", action="store_true", help="Also render a PNG preview")

    sub.add_parser("verify", parents=[common], help="Run the invariant suite")
    sub.add_parser("caustic", parents=[common], help="Caustic of parallel rays in a circle")

    epi = sub.add_parser("epicycloid", parents=[common], help="Nephroid by a rolling circle")
    epi.add_argument("--snapshots", type=int, default=6, help="Rolling circles drawn")

    sub.add_parser("envelope", parents=[common], help="Envelope of the rib circles")

    fold = sub.add_parser("fold", parents=[common], help="Folded card as an OBJ mesh")
    fold.add_argument("--alpha", type=float, default=90.0, help="Fold angle in degrees")
    fold.add_argument(
        "--rib-width-mm", type=float, default=None, help="Export ribs as quads of this width"
    )
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the --config file, then the flags that were given."""
    config = load_config(args.config) if args.config else RunConfig()
    return apply_overrides(
        config,
        samples=args.samples,
        grid=args.grid,
        ribs=args.ribs,
        radius_mm=args.radius_mm,
    )


def _dispatch(args: argparse.Namespace, config: RunConfig, out_dir: Path) -> int:
    handlers: Dict[str, Callable[[], int]] = {
        "template": lambda: commands.cmd_template(config, out_dir),
        "curve": lambda: commands.cmd_curve(config, out_dir, args.alpha),
        "sweep": lambda: commands.cmd_sweep(config, out_dir, args.alphas, args.preview),
        "verify": lambda: commands.cmd_verify(config, out_dir, args.tolerance),
        "caustic": lambda: commands.cmd_caustic(config, out_dir),
        "epicycloid": lambda: commands.cmd_epicycloid(config, out_dir, args.snapshots),
        "envelope": lambda: commands.cmd_envelope(config, out_dir),
        "fold": lambda: commands.cmd_fold(config, out_dir, args.alpha, args.rib_width_mm),
    }
    return handlers[args.command]()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help
        return int(e.code) if isinstance(e.code, int) else commands.EXIT_USAGE

    if args.verbose:
        set_log_level(logging.DEBUG)
    elif args.quiet:
        set_log_level(logging.WARNING)
    else:
        set_log_level(logging.INFO)

    try:
        config = resolve_config(args)
        out_dir = resolve_out_dir(args.out, config.output)
        return _dispatch(args, config, out_dir)
    except (ConfigError, ArgumentError, DomainError) as e:
        logger.error(f"{args.command}: {e}")
        console.print(f"[red]error:[/red] {e}")
        return commands.EXIT_USAGE
    except (ConvergenceError, EnvelopeUndefinedError, RuntimeError) as e:
        # RuntimeError also covers a failed matplotlib preview
        logger.error(f"{args.command} failed.", exc_info=True)
        console.print(f"[red]failed:[/red] {e}")
        return commands.EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
