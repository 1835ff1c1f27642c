"""Measures, Riemann sums and Taylor expansions of p-adic L-series."""

from .measure import (
    ALPHA_SELECTORS,
    MeasureContext,
    alpha_repr,
    choose_alpha,
    measure_context,
    measure_value,
    symbol_denominator,
)
from .riemann import LpApproximation, lp_series, riemann_series, truncation_bound
from .taylor import interpolation_check, taylor_at_1

__all__ = [
    # Classes
    "MeasureContext",
    "LpApproximation",

    # Functions
    "alpha_repr",
    "choose_alpha",
    "interpolation_check",
    "lp_series",
    "measure_context",
    "measure_value",
    "riemann_series",
    "symbol_denominator",
    "taylor_at_1",
    "truncation_bound",

    # Constants
    "ALPHA_SELECTORS",
]
