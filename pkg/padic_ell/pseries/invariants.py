"""
Order of vanishing, mu- and lambda-invariants of truncated series.

Every statement is relative to tracked precision: a coefficient is certified nonzero when
its valuation is below its precision, and otherwise only known to vanish modulo it.
"""

from dataclasses import dataclass
from fractions import Fraction

from padic_ell.errors import Indeterminate
from padic_ell.pseries.series import (
    PadicPowerSeries,
    certified_nonzero,
    coefficient_precision,
    coefficient_valuation,
)

EXACT = "exact"
AT_LEAST = "at-least"


@dataclass(frozen=True)
class VanishingOrder:
    m: int
    flag: str
    digits: object

    @property
    def exact(self) -> bool:
        return self.flag == EXACT


@dataclass(frozen=True)
class MuInvariant:
    mu: Fraction
    certified: bool


def order_vanish(f: PadicPowerSeries, strict: bool = True) -> VanishingOrder:
    """
    Smallest m with c_m certified nonzero; every lower coefficient is then zero to its
    precision. `digits` is the number of certified digits of c_m.

    With strict=False a series with no certified coefficient gives (order, "at-least")
    instead of raising.

    Raises:
        Indeterminate: if no coefficient is certified nonzero and strict is set.
    """
    for m, c in enumerate(f):
        if certified_nonzero(c):
            return VanishingOrder(m, EXACT, f.certified_digits(m))
    if strict:
        raise Indeterminate(f"no coefficient of {f.order} is certified nonzero")
    return VanishingOrder(f.order, AT_LEAST, 0)


def mu_invariant(f: PadicPowerSeries) -> MuInvariant:
    """
    Minimal coefficient valuation. Certified when no zero-to-precision coefficient could
    still have a smaller valuation.

    Raises:
        Indeterminate: if no coefficient is certified nonzero.
    """
    nonzero = [coefficient_valuation(c) for c in f if certified_nonzero(c)]
    if not nonzero:
        raise Indeterminate("no coefficient is certified nonzero; the valuation minimum is unknown")
    mu = min(nonzero)
    certified = all(coefficient_precision(c) >= mu for c in f if not certified_nonzero(c))
    return MuInvariant(Fraction(mu), certified)


def lambda_invariant(f: PadicPowerSeries) -> int:
    """
    Index of the first coefficient of valuation mu.

    Raises:
        Indeterminate: if mu is not certified, or an earlier coefficient might still reach it.
    """
    result = mu_invariant(f)
    if not result.certified:
        raise Indeterminate(f"mu = {result.mu} is not certified")
    for k, c in enumerate(f):
        if certified_nonzero(c):
            if coefficient_valuation(c) == result.mu:
                return k
        elif coefficient_precision(c) <= result.mu:
            raise Indeterminate(f"coefficient {k} is only known modulo p^{coefficient_precision(c)}")
    raise Indeterminate("mu is not attained")
