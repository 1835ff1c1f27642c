"""
Teichmuller decomposition, logarithm, exponential and related maps on Z_p.

All series are summed exactly over Q and only then reduced, so the result carries the
input's absolute precision: for odd p both log on 1 + pZ_p and exp on pZ_p are
isometries.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Union

from padic_ell.errors import NotAUnit, NotOrdinary, OutOfDomain
from padic_ell.padic.number import DEFAULT_REL_PREC, INFINITE, PadicNumber
from padic_ell.utils.log import log


def teichmuller(a: int, p: int, prec: int) -> PadicNumber:
    """The (p-1)-st root of unity congruent to a mod p, modulo p^prec."""
    if a % p == 0:
        raise NotAUnit(f"{a} is divisible by {p}")
    modulus = p ** prec
    return PadicNumber(p, 0, pow(a % modulus, p ** (prec - 1), modulus), prec)


def angle_part(x: PadicNumber) -> PadicNumber:
    """<x> = x / omega(x), the component of x in 1 + pZ_p."""
    if not x.is_unit():
        raise NotAUnit(f"{x} is not a p-adic unit")
    return x / teichmuller(x.unit_residue % x.p, x.p, x.precision)


def _as_padic(x, p: int = None, prec: int = None) -> PadicNumber:
    if isinstance(x, PadicNumber):
        return x
    if p is None or prec is None:
        raise TypeError("p and prec are required for rational input")
    if x == 0:
        return PadicNumber.zero(p, prec)
    return PadicNumber.from_rational(x, p, prec)


def plog(x: Union[PadicNumber, int, Fraction], p: int = None, prec: int = None) -> PadicNumber:
    """
    p-adic logarithm of a one-unit.

    Raises:
        OutOfDomain: if x is not congruent to 1 mod p.
    """
    x = _as_padic(x, p, prec)
    p = x.p
    if not x.is_unit() or x.unit_residue % p != 1:
        raise OutOfDomain(f"log needs x = 1 mod {p}, got {x}")
    z = x - 1
    absprec = x.precision
    if z.is_zero():
        return PadicNumber.zero(p, absprec)

    v = z.valuation()
    zl = z.lift()
    total = Fraction(0)
    k = 1
    # terms with k*v - log_p(k) >= absprec vanish; that quantity grows with k
    while not (k * v >= absprec and p ** (k * v - absprec) >= k):
        term = zl ** k / k
        total += term if k % 2 else -term
        k += 1
    log.debug(f"log summed {k - 1} terms at {p}-adic precision {absprec}")
    return PadicNumber.from_rational(total, p, absprec)


def pexp(x: Union[PadicNumber, int, Fraction], p: int = None, prec: int = None) -> PadicNumber:
    """
    p-adic exponential on pZ_p.

    Raises:
        OutOfDomain: if v_p(x) < 1.
    """
    x = _as_padic(x, p, prec)
    p = x.p
    absprec = x.precision
    if absprec == INFINITE:
        raise ValueError("exp of an exact zero needs an explicit precision")
    if x.is_zero():
        return PadicNumber.from_rational(1, p, absprec)
    v = x.valuation()
    if v < 1:
        raise OutOfDomain(f"exp needs v_p(x) >= 1, got {v}")

    xl = x.lift()
    total = Fraction(0)
    k = 0
    # v(x^k/k!) >= k*v - (k-1)/(p-1)
    while k == 0 or (k * v - Fraction(k - 1, p - 1)) < absprec:
        total += xl ** k / math.factorial(k)
        k += 1
    return PadicNumber.from_rational(total, p, absprec)


@dataclass(frozen=True)
class CyclotomicGenerator:
    """
    The fixed topological generator kappa(gamma) = 1 + p of 1 + pZ_p.

    Every T-variable series depends on this choice through T = kappa(gamma)^(s-1) - 1.
    """

    p: int
    prec: int
    kappa: PadicNumber = field(init=False, compare=False)
    log_kappa: PadicNumber = field(init=False, compare=False)

    def __post_init__(self):
        if self.p % 2 == 0:
            raise ValueError("p must be odd")
        kappa = PadicNumber.from_rational(1 + self.p, self.p, self.prec)
        log_kappa = plog(kappa)
        if log_kappa.valuation() != 1:
            raise ValueError(f"log(1+p) has valuation {log_kappa.valuation()} at p={self.p}")
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "log_kappa", log_kappa)

    def exponent(self, x: PadicNumber) -> PadicNumber:
        """log<x> / log kappa(gamma), an element of Z_p."""
        return plog(angle_part(x)) / self.log_kappa


@lru_cache(maxsize=64)
def _dlog_table(p: int, n: int) -> Dict[int, int]:
    modulus = p ** n
    table = {}
    x = 1
    for c in range(p ** (n - 1)):
        table[x] = c
        x = x * (1 + p) % modulus
    return table


def one_unit_dlog(a: int, gen: CyclotomicGenerator, n: int) -> int:
    """The exponent c in [0, p^(n-1)) with (1+p)^c = <a> mod p^n."""
    p = gen.p
    if a % p == 0:
        raise NotAUnit(f"{a} is divisible by {p}")
    if n < 1:
        raise ValueError("level must be at least 1")
    modulus = p ** n
    a %= modulus
    omega = pow(a, p ** (n - 1), modulus)
    one_unit = a * pow(omega, -1, modulus) % modulus
    return _dlog_table(p, n)[one_unit]


def hensel_unit_root(a_p: int, p: int, prec: int) -> PadicNumber:
    """
    The unit root of X^2 - a_p X + p, by Newton iteration from a_p mod p.

    Raises:
        NotOrdinary: if p divides a_p.
    """
    if a_p % p == 0:
        raise NotOrdinary(f"p = {p} divides a_p = {a_p}")
    modulus = p ** prec
    x = a_p % p
    for _ in range(max(1, prec).bit_length() + 1):
        f = x * x - a_p * x + p
        if f % modulus == 0:
            break
        x = (x - f * pow(2 * x - a_p, -1, modulus)) % modulus
    return PadicNumber(p, 0, x % modulus, prec)


def padic_binomial(e: Union[PadicNumber, int], k: int, p: int = None, prec: int = None) -> PadicNumber:
    """C(e, k) = e(e-1)...(e-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(e, int):
        value = Fraction(1)
        for i in range(k):
            value *= Fraction(e - i, i + 1)
        if p is None:
            raise TypeError("p and prec are required for integer input")
        return PadicNumber.from_rational(value, p, prec)
    if k == 0:
        prec = e.precision if e.precision != INFINITE else DEFAULT_REL_PREC
        return PadicNumber.from_rational(1, e.p, prec)
    result = e
    for i in range(1, k):
        result = result * (e - i)
    return result / math.factorial(k)
