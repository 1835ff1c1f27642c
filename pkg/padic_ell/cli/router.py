"""Command-line interface router for padic-ell."""

import sys

from pydantic import ValidationError

from padic_ell.cli.commands.command_type import CommandType, get_command_type
from padic_ell.cli.help import MAIN_HELP
from padic_ell.cli.parser import parse_cli_args
from padic_ell.errors import PadicEllError, PrecisionError
from padic_ell.utils.const import EMOJI, FAILURE, INDETERMINATE, SUCCESS


def _report_error(kind: str, error: Exception) -> None:
    print(f"{EMOJI['error']} {kind}: {error}", file=sys.stderr)


def _validation_messages(error: ValidationError) -> str:
    return "; ".join(str(e.get("ctx", {}).get("error") or e["msg"]) for e in error.errors())


def handle(**kwargs):
    """Command line interface for padic-ell."""
    args = parse_cli_args(kwargs.get('args', None))
    config = vars(args)
    command_type = get_command_type(args.command)

    # Handle help command explicitly
    if command_type == CommandType.HELP:
        print(MAIN_HELP)
        return SUCCESS

    from padic_ell.config import Config
    from padic_ell.utils.log import log, set_level

    if args.debug:
        set_level("DEBUG")
    log.info("Starting padic-ell CLI")
    log.debug(f"Parsed arguments: {args}")
    log.info(f"Executing command type: {command_type}")

    from padic_ell.cli.commands import (
        basechange_command,
        cache_command,
        curves_command,
        series_command,
        taylor_command,
        verify_command,
    )

    if 'command' in config:
        del config['command']

    try:
        Config().load(config.get('config'))
        log.debug(f"Settings: {Config().as_dict()}")
        match command_type:
            case CommandType.SERIES:
                return series_command.execute(**config)
            case CommandType.TAYLOR:
                return taylor_command.execute(**config)
            case CommandType.VERIFY:
                return verify_command.execute(**config)
            case CommandType.BASECHANGE:
                return basechange_command.execute(**config)
            case CommandType.CACHE:
                return cache_command.execute(**config)
            case CommandType.CURVES:
                return curves_command.execute(**config)
    except ValidationError as e:
        _report_error("invalid input", _validation_messages(e))
        return FAILURE
    except PrecisionError as e:
        log.warning(f"{type(e).__name__}: {e}")
        _report_error(type(e).__name__, e)
        return INDETERMINATE
    except (PadicEllError, ValueError, FileNotFoundError) as e:
        log.error(f"{type(e).__name__}: {e}")
        _report_error(type(e).__name__, e)
        return FAILURE

    return SUCCESS
