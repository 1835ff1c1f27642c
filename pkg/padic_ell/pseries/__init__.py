"""Truncated p-adic power series, their invariants, and the functional-equation checks."""

from .series import (
    PadicPowerSeries,
    VARIABLE_S,
    VARIABLE_T,
    certified_nonzero,
    coefficient_precision,
    coefficient_valuation,
    cut,
    onepT_power,
    series_from_values,
    subst_recip,
)
from .invariants import AT_LEAST, EXACT, MuInvariant, VanishingOrder, lambda_invariant, mu_invariant, order_vanish
from .checks import (
    CoefficientCheck,
    VerificationReport,
    check_names,
    compare_coefficient,
    finish_report,
    fe_level,
    fe_rhs_T,
    fe_sign,
    log_angle,
    mechanism_suite,
    random_integral_series,
    verify_fe_T,
    verify_fe_s,
    verify_mu_bar,
    verify_parity,
    verify_thm_main_T,
    verify_thm_mains,
)

__all__ = [
    # Classes
    "PadicPowerSeries",
    "VanishingOrder",
    "MuInvariant",
    "CoefficientCheck",
    "VerificationReport",

    # Functions
    "certified_nonzero",
    "check_names",
    "coefficient_precision",
    "coefficient_valuation",
    "compare_coefficient",
    "finish_report",
    "cut",
    "fe_level",
    "fe_rhs_T",
    "fe_sign",
    "lambda_invariant",
    "log_angle",
    "mechanism_suite",
    "mu_invariant",
    "onepT_power",
    "order_vanish",
    "random_integral_series",
    "series_from_values",
    "subst_recip",
    "verify_fe_T",
    "verify_fe_s",
    "verify_mu_bar",
    "verify_parity",
    "verify_thm_main_T",
    "verify_thm_mains",

    # Constants
    "AT_LEAST",
    "EXACT",
    "VARIABLE_S",
    "VARIABLE_T",
]
