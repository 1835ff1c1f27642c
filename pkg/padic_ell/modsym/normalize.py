"""
Fixing the scale of [r]+- from complex L-values.

For a fundamental discriminant D prime to N with sign(D) equal to the symbol sign,

    sum_{a mod |D|} chi_D(a) [a/|D|] = L(E, chi_D, 1) sqrt(|D|) / Omega,

with Omega = Omega_plus or Omega_minus/i. The left side is known exactly up to the
unknown scale, so the scale is the rational reconstruction of the numeric quotient.
The minus side carries a fixed sign convention of its own, which the scale absorbs.
"""

import math
from fractions import Fraction
from typing import Iterator, Optional, Tuple

import mpmath
from sympy import kronecker_symbol

from padic_ell.charset import is_fundamental_discriminant
from padic_ell.curve import CurveData, l_value_numeric, periods
from padic_ell.errors import Inconsistent, NoReconstruction
from padic_ell.exactla import rational_reconstruct
from padic_ell.modsym.symbols import ModularSymbolMap, eval_symbol
from padic_ell.utils.const import DEFAULT_DEN_BOUND, DEFAULT_REAL_DIGITS
from padic_ell.utils.log import log

# Largest |D| tried before giving up on a nonvanishing twist
MAX_TWIST_DISCRIMINANT = 1000


def admissible_discriminants(N: int, sign: int) -> Iterator[int]:
    """Fundamental discriminants D prime to N with sign(D) = sign, by increasing |D|."""
    for n in range(1, MAX_TWIST_DISCRIMINANT + 1):
        D = sign * n
        if math.gcd(D, N) == 1 and is_fundamental_discriminant(D):
            yield D


def twisted_sum(m: ModularSymbolMap, D: int) -> Fraction:
    """sum_{a mod |D|} chi_D(a) [a/|D|] with the current scale of m."""
    M = abs(D)
    total = Fraction(0)
    for a in range(M):
        chi = 1 if D == 1 else int(kronecker_symbol(D, a))
        if chi:
            total += chi * eval_symbol(m, Fraction(a, M))
    return total


def _scale_from(m: ModularSymbolMap, E: CurveData, D: int, S: Fraction, digits: int, den_bound: int) -> Fraction:
    L = l_value_numeric(E, D, digits)
    data = periods(E, digits)
    omega = data.omega_plus if m.sign == 1 else data.omega_minus_over_i
    with mpmath.workdps(digits + 10):
        target = L * mpmath.sqrt(abs(D)) / omega
        approx = target / mpmath.mpf(S.numerator) * S.denominator
        size = max(1, math.ceil(abs(approx)))
    eps = Fraction(size, 10 ** (digits - 6))
    return rational_reconstruct(approx, eps, den_bound)


def _nonvanishing(m: ModularSymbolMap, count: int) -> Iterator[Tuple[int, Fraction]]:
    found = 0
    for D in admissible_discriminants(m.N, m.sign):
        S = twisted_sum(m, D)
        if S:
            yield D, S
            found += 1
            if found == count:
                return
        else:
            log.debug(f"Twisted sum for D = {D} vanishes exactly")


def normalize_map(
    m: ModularSymbolMap,
    E: CurveData,
    digits: int = DEFAULT_REAL_DIGITS,
    den_bound: int = DEFAULT_DEN_BOUND,
    cross_check: bool = True,
) -> ModularSymbolMap:
    """
    Rescale m so that [r] = lambda(r)/Omega.

    The first admissible D with a nonzero twisted sum fixes the scale; when
    `cross_check` is set the next one is used to confirm it. A disagreement is logged
    and recorded in `consistent` rather than raised.

    Raises:
        NoReconstruction: if the numeric quotient has no rational within the bound.
        Inconsistent: if every twisted sum up to MAX_TWIST_DISCRIMINANT vanishes.
    """
    base = m.rescaled(1)
    candidates = list(_nonvanishing(base, 2 if cross_check else 1))
    if not candidates:
        raise Inconsistent(f"every twisted sum of {E.name} ({m.sign_name}) vanishes up to |D| = {MAX_TWIST_DISCRIMINANT}")

    D, S = candidates[0]
    scale = _scale_from(base, E, D, S, digits, den_bound)
    log.info(f"Normalisation of {E.name} ({m.sign_name}) via D = {D}: scale {scale}")

    check: Optional[int] = None
    consistent: Optional[bool] = None
    if len(candidates) > 1:
        check, S2 = candidates[1]
        try:
            scale2 = _scale_from(base, E, check, S2, digits, den_bound)
        except NoReconstruction:
            scale2 = None
        consistent = scale2 == scale
        if consistent:
            log.debug(f"Scale confirmed with D = {check}")
        else:
            log.warning(f"Normalisation of {E.name} ({m.sign_name}) disagrees: D = {D} gives {scale}, "
                        f"D = {check} gives {scale2}")
    return base.rescaled(scale, discriminant=D, check_discriminant=check, consistent=consistent)
