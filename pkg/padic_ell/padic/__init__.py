"""Finite-precision arithmetic in Q_p and in the quadratic extension Q_p(alpha)."""

from .number import INFINITE, PadicNumber
from .quadratic import PadicQuadExt
from .functions import (
    CyclotomicGenerator,
    angle_part,
    hensel_unit_root,
    one_unit_dlog,
    padic_binomial,
    pexp,
    plog,
    teichmuller,
)

__all__ = [
    # Classes
    "PadicNumber",
    "PadicQuadExt",
    "CyclotomicGenerator",

    # Functions
    "angle_part",
    "hensel_unit_root",
    "one_unit_dlog",
    "padic_binomial",
    "pexp",
    "plog",
    "teichmuller",

    # Constants
    "INFINITE",
]
