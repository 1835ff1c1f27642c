"""
Logging for padic-ell.

`log` names each record after the module that emitted it, so library code can write
`log.info(...)` without holding its own logger. Everything goes to stderr; stdout is kept
for reports. Records from pool workers carry the process name.
"""

import logging
import sys
from typing import Any, Dict, Optional, Union

ROOT = "padic_ell"
FORMAT = "%(asctime)s - %(processName)s - %(name)s - %(levelname)s - %(message)s"
DATEFMT = "%Y-%m-%d %H:%M:%S"


class Logger:
    """Process-wide registry of the loggers padic-ell hands out."""

    _loggers: Dict[str, logging.Logger] = {}
    _handler: Optional[logging.Handler] = None
    _level: int = logging.INFO

    @classmethod
    def initialize(cls) -> None:
        if cls._handler is not None:
            return
        cls._handler = logging.StreamHandler(sys.stderr)
        cls._handler.setFormatter(logging.Formatter(FORMAT, datefmt=DATEFMT))
        cls.get_logger(ROOT)

    @classmethod
    def get_logger(cls, name: Optional[str] = None) -> logging.Logger:
        """The named logger, attached to the shared stderr handler; the package logger if no name."""
        cls.initialize()
        name = name or ROOT
        if name not in cls._loggers:
            managed = logging.getLogger(name)
            managed.setLevel(cls._level)
            managed.propagate = False
            managed.handlers.clear()
            managed.addHandler(cls._handler)
            cls._loggers[name] = managed
        return cls._loggers[name]

    @classmethod
    def set_level(cls, level: Union[int, str]) -> None:
        """Switch every managed logger, and those created later, to `level`."""
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
        cls._level = level
        for managed in cls._loggers.values():
            managed.setLevel(level)


class ContextAwareLogger:
    """Forwards to the logger of the calling module."""

    def _target(self) -> logging.Logger:
        # two frames up: past the level method to its caller
        frame = sys._getframe(2)
        return Logger.get_logger(frame.f_globals.get("__name__", ROOT))

    def debug(self, msg: Any, *args, **kwargs) -> None:
        self._target().debug(msg, *args, **kwargs)

    def info(self, msg: Any, *args, **kwargs) -> None:
        self._target().info(msg, *args, **kwargs)

    def warning(self, msg: Any, *args, **kwargs) -> None:
        self._target().warning(msg, *args, **kwargs)

    def error(self, msg: Any, *args, **kwargs) -> None:
        self._target().error(msg, *args, **kwargs)

    def exception(self, msg: Any, *args, **kwargs) -> None:
        self._target().exception(msg, *args, **kwargs)


Logger.initialize()

log = ContextAwareLogger()

get_logger = Logger.get_logger

set_level = Logger.set_level

# the acceptance harness runs under asyncio
Logger.get_logger("asyncio").setLevel(logging.WARNING)
