"""
Real and imaginary periods by the arithmetic-geometric mean.

Omega_plus is the integral of |dx/(2y + a1 x + a3)| over E(R): twice the least real
period when E(R) has two components (discriminant > 0). Omega_minus_over_i is the least
positive imaginary period divided by i.
"""

from dataclasses import dataclass

import mpmath

from padic_ell.curve.model import CurveData
from padic_ell.errors import PrecisionUnreachable
from padic_ell.utils.log import log

# Guard digits carried beyond the requested accuracy
GUARD_DIGITS = 10


@dataclass(frozen=True)
class PeriodData:
    omega_plus: mpmath.mpf
    omega_minus_over_i: mpmath.mpf
    error: mpmath.mpf
    digits: int


def _periods_at(E: CurveData, dps: int):
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([4, E.b2, 2 * E.b4, E.b6], maxsteps=200, extraprec=2 * dps)
        if E.discriminant > 0:
            e1, e2, e3 = sorted((mpmath.re(r) for r in roots), reverse=True)
            omega_1 = mpmath.pi / mpmath.agm(mpmath.sqrt(e1 - e3), mpmath.sqrt(e1 - e2))
            plus = 2 * omega_1
            minus = mpmath.pi / mpmath.agm(mpmath.sqrt(e1 - e3), mpmath.sqrt(e2 - e3))
        else:
            e1 = mpmath.re(min(roots, key=lambda r: abs(mpmath.im(r))))
            a = 3 * e1 + mpmath.mpf(E.b2) / 4
            b = mpmath.sqrt(3 * e1 * e1 + mpmath.mpf(E.b2) / 2 * e1 + mpmath.mpf(E.b4) / 2)
            plus = 2 * mpmath.pi / mpmath.agm(2 * mpmath.sqrt(b), mpmath.sqrt(2 * b + a))
            minus = 2 * mpmath.pi / mpmath.agm(2 * mpmath.sqrt(b), mpmath.sqrt(2 * b - a))
        return +plus, +minus


def periods(E: CurveData, digits: int) -> PeriodData:
    """
    Omega_plus and Omega_minus / i to within 10^-digits.

    Raises:
        PrecisionUnreachable: if doubling the working precision moves either period by
            more than the target error.
    """
    dps = digits + GUARD_DIGITS
    plus, minus = _periods_at(E, dps)
    plus2, minus2 = _periods_at(E, 2 * dps)
    with mpmath.workdps(2 * dps):
        error = max(abs(plus - plus2), abs(minus - minus2))
        target = mpmath.mpf(10) ** (-digits)
        if error > target:
            raise PrecisionUnreachable(
                f"periods of {E.name} unstable at {digits} digits (change {mpmath.nstr(error, 5)})"
            )
        if plus <= 0 or minus <= 0:
            raise PrecisionUnreachable(f"non-positive period for {E.name}: {plus}, {minus}")
    log.debug(f"Periods of {E.name}: Omega+ = {mpmath.nstr(plus2, 15)}, Omega-/i = {mpmath.nstr(minus2, 15)}")
    return PeriodData(plus2, minus2, error, digits)
