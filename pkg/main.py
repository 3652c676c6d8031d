import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from config import get_settings
from data_types import CheckStatus, Command, OutputFormat
from exceptions import (
    EnumerationGuardExceededError,
    InexactDivisionError,
    JobParseError,
    RankMacWilliamsException,
)
from job_parser.job_parser import JsonJobParser
from job_runner import run
from output_manager.base_output_manager import BaseOutputManager
from output_manager.file_output_manager import FileOutputManager
from output_manager.multi_output_manager import MultiOutputManager
from output_manager.stream_output_manager import StreamOutputManager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def configure_logging() -> None:
    settings = get_settings()
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file))
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank-macwilliams",
        description="Weight enumerators, MacWilliams identities and their verification for rank-metric codes",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        sub = subparsers.add_parser(command.value)
        sub.add_argument("--spec", type=Path, help="JSON job file; flags below override its fields")
        sub.add_argument("--field", help='field JSON, e.g. \'{"p":2,"s":1,"m":4}\'')
        sub.add_argument("--generator", help='generator rows as JSON, e.g. \'[["1","a^1","1"]]\'')
        sub.add_argument("--code-name", help="reference code: c1, c2 or c3")
        sub.add_argument("--n", type=int, help="code length (empty generator, or the mrd command)")
        sub.add_argument("--k", type=int, help="code dimension for the mrd command")
        sub.add_argument("--metric", choices=["rank", "hamming"])
        sub.add_argument("--nu", type=int, help="single moment order")
        sub.add_argument("--guard", type=int, help="enumeration guard")
        sub.add_argument("--hadamard-guard", type=int, help="Hadamard oracle guard")
        sub.add_argument("--workers", type=int, help="enumeration worker processes")
        sub.add_argument("--format", choices=[f.value for f in OutputFormat])
        sub.add_argument("--output-dir", type=Path, help="also write the JSON report to this directory")
        sub.add_argument("--no-validate", action="store_true", help="skip input enumerator validation")
    return parser


def _json_flag(value: str, name: str) -> Any:
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise JobParseError(f"--{name} is not valid JSON: {e}") from e


def build_job(args: argparse.Namespace) -> Dict[str, Any]:
    """Merge the optional job file with the command-line flags."""
    raw: Dict[str, Any] = dict(JsonJobParser.from_file(args.spec).raw) if args.spec else {}
    raw["command"] = args.command
    if args.field:
        raw["field"] = _json_flag(args.field, "field")
    if args.generator or args.code_name:
        code: Dict[str, Any] = {}
        if args.generator:
            code["generator"] = _json_flag(args.generator, "generator")
            if args.n is not None:
                code["n"] = args.n
        if args.code_name:
            code["name"] = args.code_name
        raw.pop("generator", None)
        raw["code"] = code
    for key in ("metric", "nu", "n", "k"):
        value = getattr(args, key)
        if value is not None and not (key == "n" and args.generator):
            raw[key] = value
    options = dict(raw.get("options") or {})
    for key in ("guard", "hadamard_guard", "workers", "format"):
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    if args.output_dir is not None:
        options["output_dir"] = str(args.output_dir)
    if args.no_validate:
        options["validate_input"] = False
    raw["options"] = options
    return raw


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    args = build_arg_parser().parse_args(argv)
    try:
        job = JsonJobParser(build_job(args)).parse()
        options = job.spec.options
        managers: List[BaseOutputManager] = [StreamOutputManager(options.format)]
        if options.output_dir:
            managers.append(FileOutputManager(Path(options.output_dir)))
        report = run(job, save_manager=MultiOutputManager(managers))
    except EnumerationGuardExceededError as e:
        logger.error(e.message)
        return EXIT_GUARD
    except InexactDivisionError as e:
        logger.error(e.message)
        return EXIT_VIOLATION
    except RankMacWilliamsException as e:
        logger.error(e.message)
        return EXIT_PARSE
    return EXIT_VIOLATION if report.status is CheckStatus.FAIL else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
