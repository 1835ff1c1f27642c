"""
End-to-end construction of the normalised symbol maps of a curve.

Maps are memoised per process and, when the cache is enabled, stored on disk, so a
cache hit skips the linear algebra and the complex L-values entirely.
"""

from typing import Dict, Optional, Tuple

from padic_ell.config import Config
from padic_ell.curve import CurveData
from padic_ell.modsym.cache import SymbolCache
from padic_ell.modsym.normalize import normalize_map
from padic_ell.modsym.space import build_space
from padic_ell.modsym.symbols import ModularSymbolMap, eigen_projection
from padic_ell.utils.log import log

_built: Dict[Tuple[CurveData, int], ModularSymbolMap] = {}


def build_symbol_map(E: CurveData, sign: int) -> ModularSymbolMap:
    """Space, eigen-functional and normalisation, with no cache involved."""
    config = Config()
    space = build_space(E.N, sign)
    m = eigen_projection(space, E, config.ell_max, config.check_primes)
    return normalize_map(m, E, config.real_digits, config.den_bound)


def get_symbol_map(E: CurveData, sign: int, use_cache: Optional[bool] = None) -> ModularSymbolMap:
    """The normalised map for (E, sign), from memory, from disk, or built."""
    key = (E, sign)
    if key in _built:
        return _built[key]
    if use_cache is None:
        use_cache = Config().cache_enabled

    m = SymbolCache().load(E, sign) if use_cache else None
    if m is None:
        log.info(f"Building {'plus' if sign == 1 else 'minus'} modular symbols for {E.name}")
        m = build_symbol_map(E, sign)
        if use_cache:
            SymbolCache().save(m, E)
    _built[key] = m
    return m


def symbol_maps(E: CurveData, use_cache: Optional[bool] = None) -> Tuple[ModularSymbolMap, ModularSymbolMap]:
    """(plus, minus)."""
    return get_symbol_map(E, 1, use_cache), get_symbol_map(E, -1, use_cache)


def forget_built_maps() -> None:
    """Drop the in-process memo (the on-disk cache is untouched)."""
    _built.clear()
