# src/cli.py
"""Command-line entry point for the truncation experiments."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .config.settings import settings
from .experiments.factory import study_factory
from .experiments.schema import ExperimentConfig
from .pipeline import ExperimentPipeline
from .utils.error_handler import ConvergenceError, DomainError, TruncationError
from .utils.logger import logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3

DESCRIPTIONS = {
    "distortion": "Sampled distortion of the pullback: max |d_n - W1| over random pure-state pairs (a lower estimate).",
    "approximate": "Three-stage approximation of a circle state by pullbacks of pure states.",
    "recover-circle": "Distortion of Fejér states under d_n against arc distance, with the derived GH bound.",
    "distance": "d_n and W1 between the pullbacks of two persisted states.",
    "net": "Sampled covering radius of pure-state pullbacks over random target measures.",
}


def parse_n_range(text: str) -> List[int]:
    """Parse ``A..B`` (inclusive) or a comma list such as ``4,8,16``."""
    try:
        if ".." in text:
            start, stop = text.split("..", 1)
            values = list(range(int(start), int(stop) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid n-range '{text}'; use A..B or a comma list")
    if not values:
        raise argparse.ArgumentTypeError(f"n-range '{text}' is empty")
    return values


def _number_list(cast):
    def parse(text: str):
        try:
            return [cast(float(part)) for part in text.split(",") if part.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"Invalid list '{text}'")
    return parse


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-range", dest="n_values", type=parse_n_range, help="Truncation sizes: A..B or a comma list")
    common.add_argument("--samples", type=int, help="Random pure states per n")
    common.add_argument("--seed", type=int, help="Base seed of all random streams")
    common.add_argument("--grid", type=int, help="Transport grid size G (>= 256)")
    common.add_argument("--max-iters", dest="max_iters", type=int, help="Iteration cap of the d_n solver")
    common.add_argument("--tol", type=float, help="Stall tolerance of the d_n solver")
    common.add_argument("--workers", type=int, help="Thread pool size")
    common.add_argument("--out", help="Output file; stdout if absent")
    common.add_argument("--format", choices=["csv", "json"], help="Table format")
    common.add_argument("--config", help="JSON file whose keys override the flags")
    common.add_argument("--strict", action="store_true", default=None, help="Fail on solver non-convergence")
    common.add_argument("--timings", action="store_true", default=None, help="Append a runtime column")
    common.add_argument("--quiet", action="store_true", default=None, help="No progress bars, warnings only")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toeplitz-truncation",
        description="Numerical experiments on the Toeplitz truncation of the circle",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    common = _common_parser()

    commands = {}
    for name in study_factory.get_supported_subcommands():
        study = study_factory.get_study(name)
        commands[name] = subparsers.add_parser(
            name,
            parents=[common],
            help=DESCRIPTIONS.get(name),
            description=DESCRIPTIONS.get(name),
            epilog=f"Columns: {', '.join(study.columns)} (runtime with --timings)",
        )

    commands["recover-circle"].add_argument("--points", type=int, help="Number L of Fejér centres")
    approximate = commands["approximate"]
    approximate.add_argument("--m", type=int, help="Number of roots of unity for the snapped target")
    approximate.add_argument("--N-values", dest="N_values", type=_number_list(float), help="Comma list of sharpness values")
    approximate.add_argument("--powers", type=_number_list(int), help="Comma list of kernel powers")
    approximate.add_argument("--target", help="JSON measure file; defaults to ½ev_0 + ½ev_π")
    net = commands["net"]
    net.add_argument("--targets", type=int, help="Number of random target measures")
    net.add_argument("--m", type=int, help="Roots of unity carrying the targets' atoms")
    distance = commands["distance"]
    distance.add_argument("state_a", help="JSON file with the first state")
    distance.add_argument("state_b", help="JSON file with the second state")
    return parser


def load_config(path: str) -> Dict[str, Any]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise DomainError(f"Cannot read config file {path}", original_error=e)
    except json.JSONDecodeError as e:
        raise DomainError(f"Config file {path} is not valid JSON (line {e.lineno}, column {e.colno})", original_error=e)
    if not isinstance(payload, dict):
        raise DomainError(f"Config file {path} must hold a JSON object")
    return payload


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    """Settings defaults, overridden by the given flags, overridden by --config."""
    values = {k: v for k, v in vars(args).items() if v is not None and k != "config"}
    if args.config:
        overrides = load_config(args.config)
        if overrides.get("subcommand", args.subcommand) != args.subcommand:
            raise DomainError(f"Config file is for '{overrides['subcommand']}', not '{args.subcommand}'")
        values.update(overrides)
    try:
        return ExperimentConfig(**values)
    except ValidationError as e:
        raise DomainError(f"Invalid configuration: {e}", original_error=e)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.debug(f"Settings: {settings.to_dict()}")
    try:
        cfg = build_config(args)
        if cfg.quiet:
            logger.set_level("WARNING")
        summary = ExperimentPipeline(cfg).run()
    except ConvergenceError as e:
        logger.error(e.message)
        return EXIT_CONVERGENCE
    except DomainError as e:
        logger.error(e.message)
        return EXIT_DOMAIN
    except TruncationError as e:
        logger.error(e.message)
        return EXIT_FAILURE
    logger.debug(f"Run summary: {summary}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
