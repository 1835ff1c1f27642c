"""Utility packages for padic-ell.

Logging, path management, constants and decorators shared by every module.
"""

from .log import get_logger, log, set_level
from .paths import Paths
from padic_ell.utils.const import (
    SUCCESS,
    FAILURE,
    INDETERMINATE,
    CHECK_FAILED,
    CACHE_DIR,
    OUTPUT_DIR,
    ENV_CACHE,
    ENV_OUTPUT,
    SCHEMA_VERSION,
)

__all__ = [
    # Functions
    'get_logger',
    'log',
    'set_level',
    'Paths',

    # Constants
    'SUCCESS',
    'FAILURE',
    'INDETERMINATE',
    'CHECK_FAILED',
    'CACHE_DIR',
    'OUTPUT_DIR',
    'ENV_CACHE',
    'ENV_OUTPUT',
    'SCHEMA_VERSION',
]
