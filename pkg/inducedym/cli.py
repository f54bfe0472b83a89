"""
Command-line front end.

Usage:
    python run.py oneplaq --nc 3 --nb 2 --alpha-b 0.4 --engine det
    python run.py zg --nc 1 --kind cauchy --mu 1 --genus 1
    python run.py dual --complex torus2x2.json --alpha 0.3 --nmax 12
    python run.py mc --complex plaquette.json --nc 2 --nb 2 --alpha-b 0.5 --format csv --out series.csv

Every failure is written to stdout as a JSON object {code, module, message}.
Usage, validation and computation errors exit with status 2, unexpected
internal errors with status 1. Logs go to stderr.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from . import __version__
from .commands import CommandRegistry, CommandResult, OutputFormat, RunConfig
from .config import Config
from .errors import InducedError, InvalidInput
from .logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_ERROR = 2

# Parser destinations that steer the CLI itself rather than the computation
_CLI_ONLY = {"config", "log_level", "command"}


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing usage and exiting."""

    def error(self, message):
        raise InvalidInput(message, module="cli", code="usage")


def _add_global_arguments(parser: argparse.ArgumentParser, default=None) -> None:
    parser.add_argument("--seed", type=int, default=default, help="Random seed (default 0)")
    parser.add_argument("--threads", type=int, default=default, help="Worker thread cap")
    parser.add_argument("--out", default=default, help="Write output here instead of stdout")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=default,
        help="Output format (default depends on the command)",
    )
    parser.add_argument("--config", default=default, help="TOML file with parameters")
    parser.add_argument("--log-level", dest="log_level", default=default, help="Log level (default from LOG_LEVEL)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="inducedym",
        description="Numerics for induced lattice gauge models of U(N_c)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_arguments(parser)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    for cmd in sorted(CommandRegistry.all(), key=lambda c: c.id):
        sub = subparsers.add_parser(cmd.id, help=cmd.description, description=cmd.description)
        # Global flags are also accepted after the subcommand
        _add_global_arguments(sub, default=argparse.SUPPRESS)
        cmd.add_arguments(sub)
    return parser


def _json_default(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating, Fraction)):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return {"real": value.real, "imag": value.imag}
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


def render(result: CommandResult, fmt: OutputFormat | None) -> str:
    """Serialize a result deterministically."""
    fmt = fmt or result.default_format
    if fmt == OutputFormat.JSON:
        body = {"command": result.command, **result.payload}
        return json.dumps(body, sort_keys=True, indent=2, default=_json_default) + "\n"

    fieldnames: list[str] = []
    for row in result.rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in result.rows:
        writer.writerow({
            k: json.dumps(v, default=_json_default) if isinstance(v, (list, dict, tuple)) else v
            for k, v in row.items()
        })
    return buffer.getvalue()


def _emit_error(payload: dict) -> int:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_ERROR


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InducedError as e:
        return _emit_error(e.to_dict())

    setup_logging(args.log_level or Config.LOG_LEVEL, Config.LOG_FILE)
    for problem in Config.validate():
        logger.warning("Configuration: %s", problem)

    if not args.command:
        return _emit_error(InvalidInput("no command given", module="cli", code="usage").to_dict())

    overrides = {k: v for k, v in vars(args).items() if k not in _CLI_ONLY}
    try:
        config = RunConfig.from_sources(args.command, args.config, overrides)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        return _emit_error({"code": "cli.validation", "module": "cli", "message": problems})
    except InducedError as e:
        return _emit_error(e.to_dict())

    if config.threads is not None:
        Config.THREADS = config.threads

    try:
        result = CommandRegistry.dispatch(config)
        text = render(result, config.format)
    except InducedError as e:
        logger.error("%s failed: %s", config.command, e.message)
        return _emit_error(e.to_dict())
    except Exception as e:
        logger.debug("Unexpected failure", exc_info=True)
        _emit_error({"code": "cli.internal", "module": "cli", "message": f"{type(e).__name__}: {e}"})
        return EXIT_INTERNAL

    if config.out:
        path = Path(config.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", path)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
