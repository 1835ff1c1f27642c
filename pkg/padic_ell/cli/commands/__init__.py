"""The padic-ell CLI commands; each module exposes execute(**kwargs) -> int."""

from . import (
    basechange_command,
    cache_command,
    command_type,
    curves_command,
    series_command,
    taylor_command,
    verify_command,
)

__all__ = [
    'basechange_command',
    'cache_command',
    'command_type',
    'curves_command',
    'series_command',
    'taylor_command',
    'verify_command',
]
