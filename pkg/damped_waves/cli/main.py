#######################################################################
# Project: Damped Waves Module
# File: main.py
# Description: Command-line entry point for damped-waves experiments
# Author: AbigailWilliams1692
# Created: 2026-10-02
# Updated: 2026-10-17
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

# Local Packages
from damped_waves.cli.config import COMMANDS, parse_config
from damped_waves.cli.runner import ExperimentRunner
from damped_waves.model.exceptions import ConfigurationError, DampedWavesError

EXIT_PASS = 0
EXIT_VERDICT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_RUNTIME_ERROR = 3

logger = logging.getLogger("damped_waves.cli")


#######################################################################
# Argument Parser
#######################################################################
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="damped-waves",
        description="Simulate and verify u_tt - Laplace u + mu (-Laplace)^sigma u_t = f(u).",
        epilog="Exit codes: 0 pass, 1 verdict failure, 2 configuration error, 3 runtime error.",
    )
    parser.add_argument("command", choices=COMMANDS, help="Experiment to run")
    parser.add_argument("--config", type=Path, default=None, help="Path to a `section.key = value` config file")
    parser.add_argument("--out", type=Path, default=None, help="Output directory (overrides output.directory)")
    parser.add_argument("--quiet", action="store_true", help="Log warnings and errors only")
    parser.add_argument("--seed", type=int, default=None, help="Override data.seed")
    return parser


#######################################################################
# Main
#######################################################################
def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run the subcommand and map the outcome to an exit code.

    :param argv: Arguments without the program name; sys.argv by default.
    :return: int: 0 pass, 1 verdict failure, 2 configuration error, 3 runtime error.
    """
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")

    try:
        text = args.config.read_text(encoding="utf-8") if args.config else ""
        overrides = {"data.seed": str(args.seed)} if args.seed is not None else None
        config = parse_config(text, command=args.command, overrides=overrides)
    except ConfigurationError as exc:
        for violation in exc.violations:
            logger.error(f"config: {violation}")
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        logger.error(f"cannot read config: {exc}")
        return EXIT_CONFIG_ERROR

    try:
        result = ExperimentRunner(config, output_directory=args.out, log_level=level).run()
    except ConfigurationError as exc:
        for violation in exc.violations:
            logger.error(f"config: {violation}")
        return EXIT_CONFIG_ERROR
    except ValueError as exc:
        logger.error(f"invalid input: {exc}")
        return EXIT_CONFIG_ERROR
    except DampedWavesError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_RUNTIME_ERROR

    if not args.quiet:
        print("\n".join(result.report_lines))
    return EXIT_PASS if result.passed else EXIT_VERDICT_FAILURE


def run_cli(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run_cli()
