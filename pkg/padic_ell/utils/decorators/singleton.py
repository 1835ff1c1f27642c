"""
Singleton decorator for padic-ell.

`Paths`, `Config` and `CurveTable` are process-wide: each is built on first use and every
later call returns the same object. A forked pool worker inherits the parent's instances.
"""

import functools
from typing import Any, Dict, Type, TypeVar

from padic_ell.utils.log import log

T = TypeVar('T')

_instances: Dict[Type, Any] = {}


def singleton(cls: Type[T]) -> Type[T]:
    """
    Make `cls()` return one shared instance.

    The decorated classes take no constructor arguments; calling one with arguments after
    it has been built logs a warning and returns the existing instance unchanged.
    """
    original_init = cls.__init__

    @functools.wraps(cls.__new__)
    def __new__(klass, *args, **kwargs):
        if klass not in _instances:
            _instances[klass] = object.__new__(klass)
        return _instances[klass]

    @functools.wraps(original_init)
    def __init__(self, *args, **kwargs):
        if getattr(self, '_singleton_ready', False):
            if args or kwargs:
                log.warning(f"{cls.__name__} already exists; ignoring arguments {args} {kwargs}")
            return
        log.debug(f"Creating {cls.__name__}")
        original_init(self, *args, **kwargs)
        self._singleton_ready = True

    cls.__new__ = __new__
    cls.__init__ = __init__
    return cls
