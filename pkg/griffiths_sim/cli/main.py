# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The ``griffiths-sim`` command.

Exit codes: 0 on success, 2 when the configuration (or a recipe name) is invalid, 3 when a run
finished with failed cells or sessions, was interrupted, or a recipe or check failed.
"""

import argparse
import logging
import sys
import tomllib
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from griffiths_sim.cli.commands import cmd_analyze, cmd_calibrate, cmd_generate, cmd_report, cmd_run, cmd_verify
from griffiths_sim.cli.config import ExperimentConfig, load_config
from griffiths_sim.errors import FitError, UnknownRecipeError
from griffiths_sim.logging import logger
from griffiths_sim.verification import Level

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PARTIAL = 3


def _seed(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed < 2**64:
        msg = f"seed must be an unsigned 64-bit integer, got {value}"
        raise argparse.ArgumentTypeError(msg)
    return seed


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, required=True, help="Experiment TOML file.")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes; overrides run.workers.")
    parser.add_argument("--seed", type=_seed, default=None, help="Master seed; overrides master_seed.")
    parser.add_argument("--out", type=Path, default=None, help="Output directory; overrides output.directory.")


def build_argparser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="griffiths-sim", description="Griffiths-phase simulations on diluted Chimera graphs: QMC, simulated annealer and figure analysis.")
    parser.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    _add_config_flags(sub.add_parser("generate", help="Draw the disorder instances of the experiment."))

    run = sub.add_parser("run", help="Run the QMC grid or the simulated-device sessions.")
    _add_config_flags(run)
    run.add_argument("--resume", action="store_true", help="Reuse the checkpoints of an earlier, unfinished run.")
    run.add_argument("--progress", action="store_true", help="Show a progress bar.")

    _add_config_flags(sub.add_parser("calibrate", help="Calibrate the flux biases of every simulated device."))

    analyze = sub.add_parser("analyze", help="Run one figure recipe on the record logs.")
    analyze.add_argument("recipe", help="Recipe name, e.g. fig4 or dfig19.")
    _add_config_flags(analyze)

    _add_config_flags(sub.add_parser("report", help="Run every recipe of the run mode and write report.json."))

    verify = sub.add_parser("verify", help="Run the verification battery.")
    verify.add_argument("level", choices=[level.value for level in Level], help="quick (minutes) or full (hours).")
    return parser


def _load(args: argparse.Namespace) -> ExperimentConfig:
    return load_config(args.config, seed=args.seed, out=args.out, workers=args.workers)


def _dispatch(args: argparse.Namespace) -> int:
    if args.cmd == "verify":
        battery = cmd_verify(args.level)
        for result in battery.results:
            print(f"{'PASS' if result.passed else 'FAIL'}  {result.name:<22} {result.seconds:8.1f} s  {result.detail}")  # noqa: T201
        return EXIT_OK if battery.passed else EXIT_PARTIAL

    config = _load(args)
    if args.cmd == "generate":
        paths = cmd_generate(config)
        logger.info("CLI - %d instance files in %s", len(paths), config.output.directory)
        return EXIT_OK
    if args.cmd == "run":
        manifest = cmd_run(config, resume=args.resume, progress=args.progress)
        return EXIT_PARTIAL if manifest.partial else EXIT_OK
    if args.cmd == "calibrate":
        manifest = cmd_calibrate(config)
        return EXIT_PARTIAL if manifest.partial else EXIT_OK
    if args.cmd == "analyze":
        try:
            paths = cmd_analyze(config, args.recipe)
        except (FitError, FileNotFoundError) as e:
            logger.error("CLI - recipe %s failed: %s", args.recipe, e)  # noqa: TRY400
            return EXIT_PARTIAL
        logger.info("CLI - wrote %s", ", ".join(str(path) for path in paths))
        return EXIT_OK
    outcome = cmd_report(config)
    logger.info("CLI - report written to %s", outcome.path)
    return EXIT_PARTIAL if outcome.failed else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_argparser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(message)s")
    try:
        return _dispatch(args)
    except ValidationError as e:
        logger.error("CLI - invalid configuration:\n%s", e)  # noqa: TRY400
        return EXIT_INVALID
    except tomllib.TOMLDecodeError as e:
        logger.error("CLI - %s is not valid TOML: %s", args.config, e)  # noqa: TRY400
        return EXIT_INVALID
    except (UnknownRecipeError, ValueError) as e:
        logger.error("CLI - %s", e)  # noqa: TRY400
        return EXIT_INVALID
    except OSError as e:
        logger.error("CLI - %s", e)  # noqa: TRY400
        return EXIT_INVALID
    except KeyboardInterrupt:
        logger.warning("CLI - interrupted")
        return EXIT_PARTIAL


if __name__ == "__main__":
    sys.exit(main())
