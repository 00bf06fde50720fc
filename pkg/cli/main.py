"""CLI entry point."""

import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel

from cli.commands import dispatch_command
from cli.config import Config
from cli.constants import EXIT_PARSE, EXIT_PRECONDITION, EXIT_THEOREM_VIOLATION
from cli.formatting import render
from cli.models import CommandRequest, RunConfig
from cli.parser import ParseError, parse_command
from cli.schemas import ErrorResponse, RunConfigSchema
from common.exceptions import CodeParseError, FactorCodesError, TheoremViolationError
from common.logging_config import set_run_tag, setup_logging


def _inputs(cmd: CommandRequest) -> tuple[str, ...]:
    path = getattr(cmd, "path", None)
    return (path,) if path else ()


def _error(e: Exception, exit_code: int, run: Optional[RunConfig]) -> ErrorResponse:
    return ErrorResponse(
        run=RunConfigSchema(**run.to_json()) if run else None,
        error=type(e).__name__,
        detail=str(e),
        exit_code=exit_code,
        bundle=getattr(e, "bundle", None) or {},
    )


def _emit(response: BaseModel, output_format: str, out_path: Optional[str]) -> None:
    text = render(response, output_format)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for CLI; returns the process exit code."""
    args = list(sys.argv[1:] if argv is None else argv)
    log_level = 'DEBUG' if '--debug' in args else os.getenv('LOG_LEVEL', 'INFO')

    logger = setup_logging('cli', log_level=log_level)

    if '--debug' in args:
        logger.info("Debug logging enabled")

    run: Optional[RunConfig] = None
    output_format, out_path = "json", None
    try:
        cmd, options = parse_command(args)
        out_path = options.out_path
        output_format = options.output_format or output_format
        config = Config(Config.resolve_path(options.config_path))
        run = config.resolve(cmd.command, _inputs(cmd), options)
        output_format = run.output_format
        set_run_tag(f"seed={run.seed}")
        result = dispatch_command(cmd, run)
    except (ParseError, CodeParseError) as e:
        logger.error(f"Parse error: {e}")
        _emit(_error(e, EXIT_PARSE, run), output_format, out_path)
        return EXIT_PARSE
    except TheoremViolationError as e:
        logger.error(f"Theorem violation: {e.finding}")
        _emit(_error(e, EXIT_THEOREM_VIOLATION, run), output_format, out_path)
        return EXIT_THEOREM_VIOLATION
    except FactorCodesError as e:
        logger.error(f"{type(e).__name__}: {e}")
        _emit(_error(e, EXIT_PRECONDITION, run), output_format, out_path)
        return EXIT_PRECONDITION
    except Exception as e:
        logger.error(f"CLI error: {e}", exc_info=True)
        raise

    _emit(result.response, output_format, out_path)
    logger.info(f"{cmd.command} finished with exit code {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
