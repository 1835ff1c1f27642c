"""
From T to s - 1, and the interpolation identity at s = 1.
"""

import math
from fractions import Fraction
from typing import Optional, Union

from sympy.functions.combinatorial.numbers import stirling

from padic_ell.errors import PrecisionExhausted
from padic_ell.lpbuild.riemann import LpApproximation
from padic_ell.padic import INFINITE, CyclotomicGenerator
from padic_ell.pseries.series import PadicPowerSeries, VARIABLE_S, VARIABLE_T, coefficient_precision
from padic_ell.utils.log import log


def taylor_at_1(
    approx: Union[LpApproximation, PadicPowerSeries],
    gen: Optional[CyclotomicGenerator] = None,
    order: Optional[int] = None,
) -> PadicPowerSeries:
    """
    Re-expand sum c_j T^j with T = exp((s-1) L) - 1, L = log kappa(gamma):

        a_i = sum_{j <= i} c_j j! S(i, j) L^i / i!

    Raises:
        PrecisionExhausted: if a requested a_i carries no digit above the floor.
    """
    if isinstance(approx, LpApproximation):
        series, gen = approx.series, gen or approx.context.gen
    else:
        series = approx
    if gen is None:
        raise TypeError("a CyclotomicGenerator is required for a bare series")
    if series.variable != VARIABLE_T:
        raise ValueError(f"expected a series in T, got one in {series.variable}")
    order = series.order if order is None else min(order, series.order)

    L = gen.log_kappa
    coefficients = []
    if order:
        coefficients.append(series[0])
    for i in range(1, order):
        total = series[1]
        for j in range(2, i + 1):
            total = total + series[j] * (math.factorial(j) * int(stirling(i, j)))
        coefficients.append(total * (L ** i / math.factorial(i)))

    result = PadicPowerSeries(series.p, tuple(coefficients), VARIABLE_S, series.floor)
    for i in range(order):
        if result.certified_digits(i) == 0:
            raise PrecisionExhausted(f"a_{i} has no certified digits (precision {coefficient_precision(result[i])})")
    return result


def interpolation_check(approx: LpApproximation):
    """
    Compare the constant term with (1 - 1/alpha)^(2 - delta) [0]+.

    Returns the number of digits above the floor to which the two agree.
    """
    ctx = approx.context
    if not ctx.psi.is_trivial():
        raise ValueError("the interpolation identity is checked for the trivial character only")
    euler = (1 - ctx.alpha ** -1) ** (2 - ctx.delta)
    expected = euler * ctx.embed(ctx.plus(Fraction(0)))
    c0 = approx.series[0]
    diff = c0 - expected
    agreement = diff.valuation()
    agreement = min(agreement, coefficient_precision(c0))
    if agreement == INFINITE:
        return INFINITE
    digits = max(Fraction(0), Fraction(agreement) - approx.series.floor)
    log.info(f"Interpolation at s=1 for {ctx.E.name}, p={ctx.p}: {digits} digit(s)")
    return digits
