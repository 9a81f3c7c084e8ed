"""
Main CLI entry point for B-spline transform inversion experiments.
"""
import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

from dotenv import dotenv_values

from ..config.settings import settings
from ..config.logging_config import get_logger, resolve_level, setup_logging
from ..core.entities.experiment import ExperimentConfig
from ..core.exceptions import (
    CatalogError,
    ConfigurationError,
    NumericalError,
    ReportError,
    ValidationError,
)
from ..application.use_cases.run_experiment import TABLES, RunExperimentUseCase, render_table
from ..services.error_metrics import print_summary

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

CONFIG_KEYS = tuple(ExperimentConfig.model_fields)


def _add_common_options(parser: argparse.ArgumentParser):
    parser.add_argument('--out', type=Path, default=None, help='Output path')
    parser.add_argument('--format', choices=['csv', 'json'], default=None, help='Report format (default: csv)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')


def _add_experiment_options(parser: argparse.ArgumentParser):
    parser.add_argument('--config', type=Path, default=None, help='Flat key=value configuration file')
    parser.add_argument('--function', type=str, default=None, help='Catalog function f1..f5 (exp/one for Laplace)')
    parser.add_argument('--alpha', type=float, default=None, help='f2 decay rate (default: 50)')
    parser.add_argument('--sigma', type=float, default=None, help='f5 standard deviation (default: 0.1)')
    parser.add_argument('--method', choices=['wa', 'cos', 'bromwich'], default=None, help='Inversion method')
    parser.add_argument('--order', type=int, default=None, help='B-spline order j (wa)')
    parser.add_argument('--scale', type=int, default=None, help='Scale m (wa)')
    parser.add_argument('--terms', type=int, default=None, help='Series terms N (cos, bromwich)')
    parser.add_argument(
        '--radius', type=float, default=None,
        help=f'Circle radius r (default: {settings.wa_radius})'
    )
    parser.add_argument('--panels', type=int, default=None, help='Trapezoid panels M (default: (j+1)2^m)')
    parser.add_argument('--rule', choices=['standard', 'fast', 'optimal'], default=None, help='WA coefficient rule')
    parser.add_argument('--beta', type=float, default=None, help='Laplace damping beta (wa on exp/one)')
    parser.add_argument(
        '--grid', type=int, default=None,
        help=f'Evaluation grid points (default: {settings.grid_points})'
    )
    parser.add_argument('--interval', type=str, default=None, help='Interval override a,b')
    _add_common_options(parser)


def create_parser() -> argparse.ArgumentParser:
    """Create CLI argument parser."""
    parser = argparse.ArgumentParser(
        description=f"{settings.app_name} - WA and COS inversion experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Recover the hat function with linear B-splines
  python -m src.cli.main invert --function f3 --method wa --order 1 --scale 1

  # COS reconstruction of a Gaussian
  python -m src.cli.main invert --function f5 --sigma 0.1 --method cos --terms 64

  # Pre-factor table
  python -m src.cli.main table prefactor

  # Error surface over the radius
  python -m src.cli.main sweep-r --function f2 --alpha 50 --order 1 --scale 5 --r-min 0.9 --r-max 1.1 --steps 21
        """
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest='command', required=True)

    invert = subparsers.add_parser('invert', help='Invert one function and report the grid error')
    _add_experiment_options(invert)

    table = subparsers.add_parser('table', help='Regenerate a prefactor or error table')
    table.add_argument('which', choices=TABLES)
    _add_common_options(table)

    sweep = subparsers.add_parser('sweep-r', help='Log-error surface over (r, x) for the WA method')
    _add_experiment_options(sweep)
    sweep.add_argument('--r-min', type=float, required=True, help='Smallest radius')
    sweep.add_argument('--r-max', type=float, required=True, help='Largest radius')
    sweep.add_argument('--steps', type=int, default=21, help='Number of radii (default: 21)')

    return parser


def load_options(args: argparse.Namespace) -> Dict[str, object]:
    """
    Merge the --config file with command-line flags (flags win).

    Raises:
        ConfigurationError: Missing file or unknown keys
    """
    options: Dict[str, object] = {}

    if args.config is not None:
        if not args.config.is_file():
            raise ConfigurationError(f"config file not found: {args.config}")
        for key, value in dotenv_values(args.config).items():
            name = key.strip().lower().lstrip('-').replace('-', '_')
            if name not in CONFIG_KEYS:
                raise ConfigurationError(f"unknown config key '{key}' in {args.config}")
            options[name] = value
        logger.debug(f"Loaded {len(options)} options from {args.config}")

    for name in CONFIG_KEYS:
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    return options


def _run(args: argparse.Namespace) -> int:
    if args.command == 'table':
        use_case = RunExperimentUseCase(output_dir=args.out)
        header, rows = use_case.execute_table(args.which)
        print(render_table(header, rows))
        return EXIT_OK

    config = ExperimentConfig.from_options(load_options(args))
    use_case = RunExperimentUseCase()

    if args.command == 'sweep-r':
        rows = use_case.execute_sweep(config, args.r_min, args.r_max, args.steps)
        print(f"sweep WA{config.order}-{config.scale} on {config.function}: {len(rows)} rows")
        return EXIT_OK

    result = use_case.execute_invert(config)
    if args.verbose:
        print_summary(result.report)
    print(result.report.summary_line())
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Returns:
        Exit status: 0 success, 1 output or unexpected failure,
        2 configuration error, 3 numerical failure
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_CONFIG

    setup_logging(level=resolve_level(args.verbose), log_file=settings.log_file)

    try:
        return _run(args)

    except (ConfigurationError, ValidationError, CatalogError) as e:
        logger.error(f"Configuration error: {e}")
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    except NumericalError as e:
        logger.error(f"Numerical failure: {e}")
        print(f"❌ Numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL

    except ReportError as e:
        logger.error(f"Output error: {e}")
        print(f"❌ Output error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FAILURE

    except Exception as e:
        logger.exception("Fatal error")
        print(f"❌ Fatal error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
