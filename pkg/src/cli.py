"""
hereditas command-line interface
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import ValidationError

from .config import config
from .errors import HereditasError
from .jobs import JobSpec, Report, build_report, report_json, run_demo, run_job, verify_report, write_report
from .jobs.demos import DEMOS

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """Setup logging configuration"""
    logger.remove()  # Remove default handler

    # Console logging
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        level=level or config.logging.level,
    )

    # File logging
    log_file = log_file or config.logging.file
    if log_file:
        logger.add(
            log_file,
            rotation="1 day",
            retention="30 days",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
            level="DEBUG",
        )


def parse_bound(text: str) -> Dict[str, int]:
    """'RxC' -> {"rows": R, "cols": C}"""
    try:
        rows, cols = (int(part) for part in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bound must look like 2x2, got {text!r}")
    if rows < 1 or cols < 1:
        raise argparse.ArgumentTypeError(f"bound must be at least 1x1, got {text!r}")
    return {"rows": rows, "cols": cols}


def _load_json(path: str) -> Any:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _emit(report: Report, output: Optional[str]) -> None:
    if output:
        write_report(report, output)
    else:
        sys.stdout.write(report_json(report))


def cmd_run(args) -> int:
    data = _load_json(args.spec)
    if not isinstance(data, dict):
        raise HereditasError("A job specification must be a JSON object")
    if args.seed is not None:
        data["seed"] = args.seed
    if args.bound is not None:
        data["bound"] = {**data.get("bound", {}), **args.bound}
    if args.jobs is not None:
        data["jobs"] = args.jobs
    job = JobSpec.model_validate(data)
    report = build_report([run_job(job)])
    _emit(report, args.output or job.output)
    return report.exit_code


def cmd_verify(args) -> int:
    report = Report.model_validate(_load_json(args.report))
    checked, failures = verify_report(report)
    for failure in failures:
        logger.error(failure)
    print(f"{checked} certificates checked, {len(failures)} failed")
    return EXIT_OK if not failures else EXIT_REFUTED


def cmd_demo(args) -> int:
    report = run_demo(args.name, args.seed, args.bound, args.jobs)
    _emit(report, args.output)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hereditas", description="Exact workbench for hereditary rings and torsion classes"
    )
    parser.add_argument("--log-level", help="Console log level (default from HEREDITAS_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    def add_common(sub):
        sub.add_argument("--seed", type=int, help="Seed for sampled searches")
        sub.add_argument("--bound", type=parse_bound, help="Search bound RxC")
        sub.add_argument("--jobs", type=int, help="Worker processes")
        sub.add_argument("--output", help="Report path (default: standard output)")

    # Run command
    run_parser = subparsers.add_parser("run", help="Run a job specification")
    run_parser.add_argument("spec", help="Job specification (JSON)")
    add_common(run_parser)

    # Verify command
    verify_parser = subparsers.add_parser("verify", help="Re-check the certificates of a report")
    verify_parser.add_argument("report", help="Report produced by run or demo")

    # Demo command
    demo_parser = subparsers.add_parser("demo", help="Run a built-in demo")
    demo_parser.add_argument("name", choices=sorted(DEMOS), help="Demo name")
    add_common(demo_parser)

    return parser


COMMANDS = {"run": cmd_run, "verify": cmd_verify, "demo": cmd_demo}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    try:
        return COMMANDS[args.command](args)
    except (HereditasError, ValidationError, json.JSONDecodeError, OSError) as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_INPUT
