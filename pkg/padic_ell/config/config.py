"""
Runtime configuration for padic-ell.

Defaults live in `ini/padic_ell.ini` next to this module. A user file passed with
`--config` is read on top of the defaults, so it only needs the keys it changes.
"""

import configparser
import os
from typing import Optional

from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths
from padic_ell.utils.decorators.singleton import singleton
from padic_ell.utils.const import (
    DEFAULT_WORKING_DIGITS,
    DEFAULT_REAL_DIGITS,
    DEFAULT_DEN_BOUND,
    DEFAULT_ELL_MAX,
    DEFAULT_CHECK_PRIMES,
    DEFAULT_LEVEL,
    DEFAULT_T_ORDER,
)

CONFIG_FILE = "padic_ell.ini"


@singleton
class Config:
    """Typed access to the ini settings."""

    def __init__(self):
        self._parser = configparser.ConfigParser()
        default_file = os.path.join(Paths().get_config_dir(), CONFIG_FILE)
        read = self._parser.read(default_file)
        if not read:
            log.warning(f"Default configuration not found at {default_file}, using built-in values")

    def load(self, path: Optional[str]) -> None:
        """Overlay a user ini file on top of the defaults."""
        if not path:
            return
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Configuration file not found: {path}")
        self._parser.read(path)
        log.info(f"Loaded configuration overlay from {path}")

    def _int(self, section: str, key: str, fallback: int) -> int:
        return self._parser.getint(section, key, fallback=fallback)

    @property
    def working_digits(self) -> int:
        return self._int("precision", "working_digits", DEFAULT_WORKING_DIGITS)

    @property
    def real_digits(self) -> int:
        return self._int("precision", "real_digits", DEFAULT_REAL_DIGITS)

    @property
    def den_bound(self) -> int:
        return self._int("precision", "den_bound", DEFAULT_DEN_BOUND)

    @property
    def ell_max(self) -> int:
        return self._int("modsym", "ell_max", DEFAULT_ELL_MAX)

    @property
    def check_primes(self) -> int:
        return self._int("modsym", "check_primes", DEFAULT_CHECK_PRIMES)

    @property
    def level(self) -> int:
        return self._int("series", "level", DEFAULT_LEVEL)

    @property
    def t_order(self) -> int:
        return self._int("series", "t_order", DEFAULT_T_ORDER)

    @property
    def cache_enabled(self) -> bool:
        return self._parser.getboolean("cache", "enabled", fallback=True)

    def as_dict(self) -> dict:
        """Flattened view of every section, used for debug logging."""
        return {
            f"{section}.{key}": value
            for section in self._parser.sections()
            for key, value in self._parser.items(section)
        }
