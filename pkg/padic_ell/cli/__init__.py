from .router import handle as router
from .parser import parse_cli_args
from .jobs import JobConfig, expand_jobs, render_report, run_jobs, verdict_exit_code, write_report
from .help import (
    MAIN_HELP,
    SERIES_HELP,
    TAYLOR_HELP,
    VERIFY_HELP,
    BASECHANGE_HELP,
    CACHE_HELP,
    CURVES_HELP,
)

__all__ = [
    # Classes
    'JobConfig',
    # Functions
    'router',
    'parse_cli_args',
    'expand_jobs',
    'render_report',
    'run_jobs',
    'verdict_exit_code',
    'write_report',
    # Help text
    'MAIN_HELP',
    'SERIES_HELP',
    'TAYLOR_HELP',
    'VERIFY_HELP',
    'BASECHANGE_HELP',
    'CACHE_HELP',
    'CURVES_HELP',
]
