"""Elliptic curves over Q: models, point counts, reduction data, periods and L-values."""

from .model import CurveData, ReductionInfo, ReductionKind, parse_curve_text
from .counting import (
    allowable_roots,
    an_expansion,
    ap_count,
    good_primes,
    reduction_type,
    trace_of_frobenius,
)
from .periods import PeriodData, periods
from .lseries import l_value_numeric, root_number
from .table import CurveTable, get_curve

__all__ = [
    # Classes
    "CurveData",
    "CurveTable",
    "PeriodData",
    "ReductionInfo",
    "ReductionKind",

    # Functions
    "allowable_roots",
    "an_expansion",
    "ap_count",
    "get_curve",
    "good_primes",
    "l_value_numeric",
    "parse_curve_text",
    "periods",
    "reduction_type",
    "root_number",
    "trace_of_frobenius",
]
