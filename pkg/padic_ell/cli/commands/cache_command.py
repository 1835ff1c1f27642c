"""
Cache command module for padic-ell.

This module handles the 'cache' command: building, loading, listing and clearing the
on-disk modular symbol maps.
"""

import os

from padic_ell.curve import get_curve
from padic_ell.modsym import SymbolCache, build_symbol_map, eval_symbol
from padic_ell.utils.const import EMOJI, FAILURE, SUCCESS
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths

SIGNS = (1, -1)


def _build(curve: str) -> int:
    E = get_curve(curve)
    cache = SymbolCache()
    for sign in SIGNS:
        m = cache.load(E, sign)
        if m is None:
            m = build_symbol_map(E, sign)
            cache.save(m, E)
        print(f"{EMOJI['check']} {E.name} {m.sign_name}: {cache.path_for(E, sign)}")
    return SUCCESS


def _load(curve: str) -> int:
    E = get_curve(curve)
    cache = SymbolCache()
    status = SUCCESS
    for sign in SIGNS:
        m = cache.load(E, sign)
        if m is None:
            print(f"{EMOJI['warning']} {E.name} {'plus' if sign == 1 else 'minus'}: not cached")
            status = FAILURE
            continue
        print(f"{EMOJI['check']} {E.name} {m.sign_name}: [0] = {eval_symbol(m, 0)}, scale {m.scale}")
    return status


def execute(**kwargs):
    """Execute the cache command.

    Returns:
        int: Command exit code; a corrupt entry raises CacheCorrupt, which maps to 1
    """
    action = kwargs.get("action")
    curve = kwargs.get("curve")
    log.info(f"Symbol cache at {Paths().get_cache_dir()}: {action}")

    match action:
        case "build" | "load":
            if not curve:
                log.error(f"cache {action} needs --curve")
                return FAILURE
            return _build(curve) if action == "build" else _load(curve)
        case "list":
            entries = SymbolCache().entries()
            for path in entries:
                print(os.path.basename(path))
            log.info(f"{len(entries)} cached file(s)")
            return SUCCESS
        case "clear":
            removed = SymbolCache().clear()
            print(f"{EMOJI['check']} removed {removed} file(s)")
            return SUCCESS
    log.error(f"Unknown cache action: {action}")
    return FAILURE
