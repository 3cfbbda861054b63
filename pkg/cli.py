import argparse
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Union

from services.constructible_service import get_constructible_data
from services.family_service import get_irreducible_data
from services.lusztig_service import get_counterexample_data, get_family_data
from services.verification_service import get_verification_data
from utils.parameter_validator import validate_rank, validate_ratio
from utils.report_formatter import to_json, to_text

logger = logging.getLogger("symbol_calculus")

COMMANDS = ("irr", "families", "constructible", "verify", "counterexample")

DEFAULT_N = 2
DEFAULT_R = "1"
DEFAULT_N_MAX = 5
DEFAULT_R_MAX = 4

EXIT_OK = 0
EXIT_FAILURE = 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = DEFAULT_N
    r: Union[int, str] = 1
    n_max: int = DEFAULT_N_MAX
    r_max: int = DEFAULT_R_MAX
    format: str = "text"
    output: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}")
        if self.format not in ("text", "json"):
            raise ValueError(f"Unknown format {self.format!r}")
        if self.n < 1 or self.n_max < 1 or self.r_max < 1:
            raise ValueError("n, n_max and r_max must be positive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbol-calculus",
        description="Symbols, families and constructible characters of type B_n with integral weight ratio r.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level on stderr.")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format.")
    common.add_argument("--output", default=None, help="Write the document to PATH instead of stdout.")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("irr", "List the irreducible characters with symbols and b-invariants."),
        ("families", "List the Lusztig families with special and minimal members."),
        ("constructible", "List the constructible characters with minimal constituents."),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--n", default=str(DEFAULT_N), help="Rank n (positive integer).")
        sub.add_argument("--r", default=DEFAULT_R, help="Weight ratio: positive integer or 'nonintegral'.")

    verify = subparsers.add_parser("verify", parents=[common], help="Run every identity check and Theorem L.")
    verify.add_argument("--n-max", dest="n_max", default=str(DEFAULT_N_MAX), help="Largest rank.")
    verify.add_argument("--r-max", dest="r_max", default=str(DEFAULT_R_MAX), help="Largest ratio.")

    counterexample = subparsers.add_parser(
        "counterexample", parents=[common],
        help="Search a family whose constructible characters share no constituent.",
    )
    counterexample.add_argument("--n", default="3", help="Rank n (positive integer).")
    counterexample.add_argument("--r-max", dest="r_max", default=str(DEFAULT_R_MAX),
                                help="Scan the ratios 1..r_max.")
    return parser


def config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    """Validates the raw flag values; invalid values end in parser.error (exit 2)."""
    values = {"command": args.command, "format": args.format, "output": args.output}

    if hasattr(args, "n"):
        is_valid, n, error = validate_rank(args.n, "n", allow_zero=False)
        if not is_valid:
            parser.error(error)
        values["n"] = n
    if hasattr(args, "r"):
        is_valid, r, error = validate_ratio(args.r)
        if not is_valid:
            parser.error(error)
        values["r"] = r
    if hasattr(args, "n_max"):
        is_valid, n_max, error = validate_rank(args.n_max, "n-max", allow_zero=False)
        if not is_valid:
            parser.error(error)
        values["n_max"] = n_max
    if hasattr(args, "r_max"):
        is_valid, r_max, error = validate_ratio(args.r_max, allow_nonintegral=False)
        if not is_valid:
            parser.error(error)
        values["r_max"] = r_max

    return RunConfig(**values)


def build_document(config: RunConfig) -> dict:
    if config.command == "irr":
        return get_irreducible_data(config.n, config.r)
    if config.command == "families":
        return get_family_data(config.n, config.r)
    if config.command == "constructible":
        return get_constructible_data(config.n, config.r)
    if config.command == "verify":
        return get_verification_data(config.n_max, config.r_max)
    return get_counterexample_data(config.n, range(1, config.r_max + 1))


def emit(document: dict, config: RunConfig):
    rendered = to_json(document) if config.format == "json" else to_text(document)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
        logger.info("Wrote %s", config.output)
    else:
        sys.stdout.write(rendered)


def run(config: RunConfig) -> int:
    """
    Builds the document for one command and emits it.

    Args:
        config (RunConfig): Validated run configuration

    Returns:
        int: 0 on success, 1 when a service failed or a verification check failed
    """
    logger.debug("Running %s", config)
    document = build_document(config)
    if "error" in document:
        logger.error(document["error"])
        return EXIT_FAILURE

    emit(document, config)
    if config.command == "verify" and not document["passed"]:
        logger.error("Verification failed")
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    config = config_from_args(parser, args)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
