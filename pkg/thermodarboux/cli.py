"""Command-line interface for thermodarboux."""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

import coloredlogs
from dotenv import load_dotenv
from pydantic import ValidationError

from core.config.config_loader import ConfigurationError
from core.interfaces.errors import (
    ArgumentError,
    LambdaValidationError,
    SingularityError,
    ThermoDarbouxError,
    UnsupportedError,
)
from core.models.config import LoggingConfig
from thermodarboux.orchestrator import ThermoDarbouxOrchestrator
from thermodarboux.output import emit_document, emit_table, write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VERIFY_FAILED = 3

# Options whose values may start with '-' (negative grids and lambdas)
VALUE_OPTIONS = ("--grid", "--lambda")

# Parsed arguments that are not RunConfig fields
CLI_ONLY = {"config", "verbose", "command", "func", "log"}


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def setup_logging(config: LoggingConfig, verbose: bool = False) -> None:
    """Send log records to standard error, colored when configured."""
    level = logging.DEBUG if verbose else getattr(logging, config.level.upper(), logging.INFO)
    if config.console_colors:
        coloredlogs.install(level=level, fmt=config.format, stream=sys.stderr)
    else:
        logging.basicConfig(level=level, format=config.format, stream=sys.stderr, force=True)


def parse_lambdas(text: str) -> List[float]:
    """Parse a comma-separated lambda list such as '1,2,inf'."""
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid lambda list '{text}' (expected e.g. 1,2,inf)")
    if not values:
        raise argparse.ArgumentTypeError("lambda list must not be empty")
    return values


def attach_values(argv: List[str]) -> List[str]:
    """Rewrite '--grid -2:2:5' as '--grid=-2:2:5' so argparse keeps negative values."""
    result: List[str] = []
    i = 0
    while i < len(argv):
        item = argv[i]
        if item in VALUE_OPTIONS and i + 1 < len(argv):
            result.append(f"{item}={argv[i + 1]}")
            i += 2
            continue
        result.append(item)
        i += 1
    return result


def run_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """RunConfig fields given on the command line."""
    return {key: value for key, value in vars(args).items() if key not in CLI_ONLY}


def _prepare(args: argparse.Namespace):
    orchestrator = ThermoDarbouxOrchestrator(config_path=args.config)
    setup_logging(orchestrator.settings.logging, args.verbose)
    run = orchestrator.run_config(args.command, run_overrides(args), getattr(args, "log", None))
    return orchestrator, run


def cmd_action(args: argparse.Namespace) -> int:
    """Tabulate one action over a grid.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit status
    """
    orchestrator, run = _prepare(args)
    table = orchestrator.action_table(run)
    emit_table(table, run.output_format, run.output_path)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    """Tabulate Darboux family members over a grid.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit status
    """
    orchestrator, run = _prepare(args)
    table = orchestrator.family_table(run)
    emit_table(table, run.output_format, run.output_path)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run a verification suite and report every check.

    Args:
        args: Parsed command-line arguments

    Returns:
        0 if every check passed, 3 otherwise
    """
    orchestrator, run = _prepare(args)
    report = orchestrator.verify(run)
    if run.output_format == "json":
        emit_document(report.model_dump(), run.output_path)
    else:
        emit_table(orchestrator.verify_table(report), "csv", run.output_path)

    for check in report.failed():
        logger.error(f"FAILED {check.name}: max residual {check.max_residual:.3e} > {check.tolerance:.1e}")
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_spectrum(args: argparse.Namespace) -> int:
    """Tabulate the noise power spectrum.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit status
    """
    orchestrator, run = _prepare(args)
    table = orchestrator.spectrum_table(run)
    emit_table(table, run.output_format, run.output_path)
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--hbar",
        type=float,
        default=argparse.SUPPRESS,
        help="Action unit (default: 1)"
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["csv", "json"],
        default=argparse.SUPPRESS,
        help="Output format (default: csv)"
    )
    common.add_argument(
        "--output",
        dest="output_path",
        default=argparse.SUPPRESS,
        help="Output file; relative paths land in $THERMODARBOUX_OUTPUT_DIR (default: stdout)"
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=argparse.SUPPRESS,
        help="Residual tolerance (default: 1e-8)"
    )
    strictness = common.add_mutually_exclusive_group()
    strictness.add_argument(
        "--strict",
        dest="strict_lambda",
        action="store_const",
        const=True,
        default=argparse.SUPPRESS,
        help="Require lambda > 0 and abort on singular grid points (default)"
    )
    strictness.add_argument(
        "--permissive",
        dest="strict_lambda",
        action="store_const",
        const=False,
        default=argparse.SUPPRESS,
        help="Allow lambda <= 0 and flag singular grid points instead of aborting"
    )
    return common


def _grid_options() -> argparse.ArgumentParser:
    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument(
        "--grid",
        default=argparse.SUPPRESS,
        help="Grid as start:stop:count or a comma-separated list (default: 0.1:10:64 log-spaced)"
    )
    grid.add_argument(
        "--log",
        action="store_true",
        default=None,
        help="Log-spaced range grid"
    )
    grid.add_argument(
        "--lambda",
        dest="lambdas",
        type=parse_lambdas,
        default=argparse.SUPPRESS,
        help="Darboux parameters, e.g. 1,2,inf (default: inf)"
    )
    grid.add_argument(
        "--seed",
        default=argparse.SUPPRESS,
        help="Seed family: planck, vacuum, fermi_symmetric or general (default: planck)"
    )
    grid.add_argument("--A", type=float, default=argparse.SUPPRESS, help="Zero-mode coefficient A")
    grid.add_argument("--B", type=float, default=argparse.SUPPRESS, help="Zero-mode coefficient B")
    grid.add_argument(
        "--scale",
        type=float,
        default=argparse.SUPPRESS,
        help="Zero-mode normalization W (default: 1)"
    )
    grid.add_argument(
        "--include-seed",
        dest="include_seed",
        action="store_const",
        const=True,
        default=argparse.SUPPRESS,
        help="Add the lambda = inf reference series"
    )
    grid.add_argument(
        "--allow-negative-x",
        dest="allow_negative_x",
        action="store_const",
        const=True,
        default=argparse.SUPPRESS,
        help="Evaluate Planck-seeded families at x <= 0"
    )
    grid.add_argument(
        "--i0-mode",
        dest="i0_mode",
        choices=["closed_form", "quadrature"],
        default=argparse.SUPPRESS,
        help="How I0 is computed (default: closed_form where available)"
    )
    return grid


def build_parser() -> ArgumentParser:
    """Build the argument parser with its four subcommands."""
    parser = ArgumentParser(
        prog="thermodarboux",
        description="thermodarboux - thermodynamic actions, Darboux families and noise spectra",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    # Global options
    parser.add_argument(
        "--config",
        help="Path to configuration file"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging"
    )

    # Subcommands
    subparsers = parser.add_subparsers(
        title="commands",
        description="Available commands",
        dest="command"
    )
    common = _common_options()
    grid = _grid_options()

    # Action command
    action_parser = subparsers.add_parser(
        "action",
        parents=[common, grid],
        help="Evaluate an action f(x) and f'(x) over a grid"
    )
    action_parser.add_argument(
        "--family",
        default=argparse.SUPPRESS,
        help="planck, vacuum, thermal, fermi_symmetric, general or darboux (default: planck)"
    )
    action_parser.add_argument(
        "--omega",
        type=float,
        default=argparse.SUPPRESS,
        help="Frequency for the internal-energy column U = omega f"
    )
    action_parser.set_defaults(func=cmd_action)

    # Family command
    family_parser = subparsers.add_parser(
        "family",
        parents=[common, grid],
        help="Evaluate Darboux family members over a grid"
    )
    family_parser.set_defaults(func=cmd_family)

    # Verify command
    verify_parser = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Run the verification suites"
    )
    verify_parser.add_argument(
        "--suite",
        choices=["riccati", "darboux", "limits", "entropy", "fdt", "all"],
        default=argparse.SUPPRESS,
        help="Suite to run (default: all)"
    )
    verify_parser.set_defaults(func=cmd_verify)

    # Spectrum command
    spectrum_parser = subparsers.add_parser(
        "spectrum",
        parents=[common, grid],
        help="Tabulate the Nyquist-Johnson power and its Darboux generalization"
    )
    spectrum_parser.add_argument(
        "--resistance",
        default=argparse.SUPPRESS,
        help="Resistance model, e.g. constant:R=1 or parallel_rlc:R=100,L=10,C=0.1"
    )
    spectrum_parser.add_argument(
        "--beta",
        type=float,
        default=argparse.SUPPRESS,
        help="Inverse temperature (default: 1)"
    )
    spectrum_parser.set_defaults(func=cmd_spectrum)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point.

    Args:
        argv: Command-line arguments (default: sys.argv[1:])

    Returns:
        Exit status: 0 success, 1 usage or configuration error,
        2 lambda or domain validation failure, 3 verification failure
    """
    load_dotenv()
    parser = build_parser()
    argv = attach_values(list(sys.argv[1:] if argv is None else argv))

    # Parse arguments
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(LoggingConfig(), args.verbose)

    if not hasattr(args, 'func'):
        parser.print_help()
        return EXIT_USAGE

    # Execute command
    try:
        return args.func(args)
    except ValidationError as e:
        logger.error(f"Invalid run configuration: {e}")
        return EXIT_USAGE
    except (ConfigurationError, ArgumentError, UnsupportedError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except LambdaValidationError as e:
        logger.error(str(e))
        if e.report is not None:
            write_json(e.report.to_dict(), sys.stderr)
        return EXIT_VALIDATION
    except SingularityError as e:
        logger.error(f"Singular point at x = {e.x!r}: {e}")
        return EXIT_VALIDATION
    except ThermoDarbouxError as e:
        logger.error(str(e))
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
