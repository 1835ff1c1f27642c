"""Command type enum for the padic-ell CLI."""

from enum import Enum


class CommandType(Enum):
    """The commands the CLI can execute; each maps to a module in cli.commands."""

    SERIES = "series"
    TAYLOR = "taylor"
    VERIFY = "verify"
    BASECHANGE = "basechange"
    CACHE = "cache"
    CURVES = "curves"
    HELP = "help"


def get_command_type(command_name: str) -> CommandType:
    """Map a subcommand name to its CommandType; no name, -h and --help mean HELP.

    Raises:
        ValueError: for a name that is not a subcommand.
    """
    if command_name is None or command_name in ("-h", "--help"):
        return CommandType.HELP

    try:
        return CommandType(command_name)
    except ValueError:
        raise ValueError(f"Unknown command: {command_name}")
