"""Exact weight-2 modular symbols for Gamma0(N) and the normalised maps r -> [r]+-."""

from .p1 import P1Element, P1List, p1_enumerate
from .space import (
    ManinSymbolSpace,
    build_space,
    cuspidal_dimension,
    cusps_equivalent,
    heilbronn_matrices,
    hecke_matrix,
    lift_to_sl2,
)
from .symbols import ModularSymbolMap, eigen_projection, eval_symbol, path_value
from .normalize import admissible_discriminants, normalize_map, twisted_sum
from .atkin_lehner import atkin_lehner_matrix, atkin_lehner_sign
from .cache import SymbolCache, curve_key, map_from_json, map_to_json
from .builder import build_symbol_map, forget_built_maps, get_symbol_map, symbol_maps

__all__ = [
    # Classes
    "ManinSymbolSpace",
    "ModularSymbolMap",
    "P1Element",
    "P1List",
    "SymbolCache",

    # Functions
    "admissible_discriminants",
    "atkin_lehner_matrix",
    "atkin_lehner_sign",
    "build_space",
    "build_symbol_map",
    "curve_key",
    "cuspidal_dimension",
    "cusps_equivalent",
    "eigen_projection",
    "eval_symbol",
    "forget_built_maps",
    "get_symbol_map",
    "heilbronn_matrices",
    "hecke_matrix",
    "lift_to_sl2",
    "map_from_json",
    "map_to_json",
    "normalize_map",
    "p1_enumerate",
    "path_value",
    "symbol_maps",
    "twisted_sum",
]
