"""
Central values L(E, chi_D, 1) from the exponentially convergent series.

For the twist by a fundamental discriminant D prime to N the conductor is N' = N D^2
and, for every t > 0,

    L(E, chi_D, 1) = sum_n (chi_D(n) a_n / n) (exp(-2 pi n t / sqrt(N')) + w exp(-2 pi n / (t sqrt(N'))))

where w is the root number. Evaluating at t = 1 and at a second t pins down w.
"""

import math
from functools import lru_cache
from typing import List, Tuple

import mpmath
from sympy import kronecker_symbol

from padic_ell.curve.counting import an_expansion
from padic_ell.curve.model import CurveData
from padic_ell.errors import PrecisionUnreachable
from padic_ell.utils.const import MAX_LSERIES_TERMS
from padic_ell.utils.log import log

# Second evaluation point used to detect the root number
ROOT_NUMBER_T = mpmath.mpf("1.2")


def _check_discriminant(E: CurveData, D: int):
    if D == 0:
        raise ValueError("D must be nonzero")
    if math.gcd(D, E.N) != 1:
        raise ValueError(f"D = {D} is not coprime to the conductor {E.N}")


def _terms_needed(conductor: int, t_min, digits: int) -> int:
    """Smallest B with sum_{n > B} exp(-2 pi n t_min / sqrt(N')) below 10^-(digits+2)."""
    c = 2 * math.pi * float(t_min) / math.sqrt(conductor)
    target = (digits + 2) * math.log(10) + math.log(2 / -math.expm1(-c))
    B = max(1, math.ceil(target / c))
    if B > MAX_LSERIES_TERMS:
        raise PrecisionUnreachable(
            f"{B} terms needed for {digits} digits at conductor {conductor} (cap {MAX_LSERIES_TERMS})"
        )
    return B


@lru_cache(maxsize=64)
def _twisted_coefficients(E: CurveData, D: int, bound: int) -> Tuple[int, ...]:
    period = abs(D)
    chi = [int(kronecker_symbol(D, n)) for n in range(period)]
    an = an_expansion(E, bound)
    return tuple(chi[n % period] * an[n - 1] for n in range(1, bound + 1))


def _smoothed_sum(coeffs: List[int], sqrt_conductor, t, w: int):
    total = mpmath.mpf(0)
    x = 2 * mpmath.pi / sqrt_conductor
    for n, c in enumerate(coeffs, start=1):
        if c:
            total += mpmath.mpf(c) / n * (mpmath.exp(-x * n * t) + w * mpmath.exp(-x * n / t))
    return total


def root_number(E: CurveData, D: int = 1, digits: int = 20) -> int:
    """Sign w of the functional equation of L(E, chi_D, s), found numerically."""
    _check_discriminant(E, D)
    conductor = E.N * D * D
    B = _terms_needed(conductor, 1 / ROOT_NUMBER_T, digits)
    coeffs = _twisted_coefficients(E, D, B)
    with mpmath.workdps(digits + 10):
        sqrt_conductor = mpmath.sqrt(conductor)
        discrepancy = {}
        for w in (1, -1):
            at_one = _smoothed_sum(coeffs, sqrt_conductor, mpmath.mpf(1), w)
            at_t = _smoothed_sum(coeffs, sqrt_conductor, ROOT_NUMBER_T, w)
            discrepancy[w] = abs(at_one - at_t)
        w = 1 if discrepancy[1] < discrepancy[-1] else -1
        tolerance = mpmath.mpf(10) ** (-(digits // 2))
        if discrepancy[w] > tolerance:
            raise PrecisionUnreachable(
                f"root number of {E.name} twisted by {D} undetermined "
                f"(discrepancies {mpmath.nstr(discrepancy[1], 3)}, {mpmath.nstr(discrepancy[-1], 3)})"
            )
    log.debug(f"Root number of {E.name} twisted by {D}: {w:+d}")
    return w


def l_value_numeric(E: CurveData, D: int = 1, digits: int = 25) -> mpmath.mpf:
    """
    L(E, chi_D, 1) to within 10^-digits; exactly zero when the root number is -1.

    Raises:
        PrecisionUnreachable: if the series needs more than MAX_LSERIES_TERMS terms.
    """
    w = root_number(E, D, min(digits, 20))
    if w == -1:
        return mpmath.mpf(0)
    conductor = E.N * D * D
    B = _terms_needed(conductor, 1, digits)
    coeffs = _twisted_coefficients(E, D, B)
    with mpmath.workdps(digits + 10):
        value = _smoothed_sum(coeffs, mpmath.sqrt(conductor), mpmath.mpf(1), 1)
    log.debug(f"L({E.name}, chi_{D}, 1) = {mpmath.nstr(value, 15)} from {B} terms")
    return value
