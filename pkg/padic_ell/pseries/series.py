"""
Truncated power series over Z_p or Q_p(alpha) with per-coefficient precision.

A series with `order` coefficients is known modulo X^order, and coefficient k modulo
p^precision(k). `floor` is an a-priori lower bound on every coefficient's valuation;
certified digits are counted from it.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from padic_ell.padic import INFINITE, PadicNumber, PadicQuadExt, padic_binomial

Coefficient = Union[PadicNumber, PadicQuadExt]

VARIABLE_T = "T"
VARIABLE_S = "s-1"


def coefficient_valuation(x: Coefficient):
    """Valuation of a nonzero coefficient; for a zero, its precision."""
    v = x.valuation()
    return v if v == INFINITE else Fraction(v)


def coefficient_precision(x: Coefficient):
    prec = x.precision
    return prec if prec == INFINITE else Fraction(prec)


def certified_nonzero(x: Coefficient) -> bool:
    return not x.is_zero()


@dataclass(frozen=True)
class PadicPowerSeries:
    p: int
    coefficients: tuple
    variable: str = VARIABLE_T
    floor: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "floor", Fraction(self.floor))

    @classmethod
    def from_rationals(cls, values: Iterable, p: int, prec: int, variable: str = VARIABLE_T) -> "PadicPowerSeries":
        """Series with the given rational coefficients, each known to absolute precision prec."""
        coeffs = []
        for v in values:
            v = Fraction(v)
            coeffs.append(PadicNumber.zero(p, prec) if v == 0 else PadicNumber.from_rational(v, p, prec))
        return cls(p, tuple(coeffs), variable)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, k: int) -> Coefficient:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def precisions(self) -> List:
        return [coefficient_precision(c) for c in self.coefficients]

    def certified_digits(self, k: int):
        """Digits of coefficient k above the floor; 0 when nothing is known."""
        prec = coefficient_precision(self.coefficients[k])
        if prec == INFINITE:
            return INFINITE
        return max(Fraction(0), prec - self.floor)

    def truncate(self, order: int) -> "PadicPowerSeries":
        return PadicPowerSeries(self.p, self.coefficients[:order], self.variable, self.floor)

    def with_floor(self, floor) -> "PadicPowerSeries":
        return PadicPowerSeries(self.p, self.coefficients, self.variable, floor)

    def _check(self, other: "PadicPowerSeries"):
        if other.p != self.p or other.variable != self.variable:
            raise ValueError("series over different primes or variables")

    def __add__(self, other: "PadicPowerSeries") -> "PadicPowerSeries":
        self._check(other)
        n = min(self.order, other.order)
        coeffs = tuple(self.coefficients[k] + other.coefficients[k] for k in range(n))
        return PadicPowerSeries(self.p, coeffs, self.variable, min(self.floor, other.floor))

    def __neg__(self) -> "PadicPowerSeries":
        return PadicPowerSeries(self.p, tuple(-c for c in self.coefficients), self.variable, self.floor)

    def __sub__(self, other: "PadicPowerSeries") -> "PadicPowerSeries":
        return self + (-other)

    def __mul__(self, other) -> "PadicPowerSeries":
        if not isinstance(other, PadicPowerSeries):
            return PadicPowerSeries(self.p, tuple(c * other for c in self.coefficients), self.variable, self.floor)
        self._check(other)
        n = min(self.order, other.order)
        coeffs = []
        for k in range(n):
            total = self.coefficients[0] * other.coefficients[k]
            for i in range(1, k + 1):
                total = total + self.coefficients[i] * other.coefficients[k - i]
            coeffs.append(total)
        return PadicPowerSeries(self.p, tuple(coeffs), self.variable, self.floor + other.floor)

    __rmul__ = __mul__

    def to_json(self) -> List[dict]:
        out = []
        for k, c in enumerate(self.coefficients):
            prec = coefficient_precision(c)
            entry = {
                "k": k,
                "valuation": None if c.is_zero() else str(coefficient_valuation(c)),
                "value": _digit_json(c),
                "prec": None if prec == INFINITE else str(prec),
            }
            out.append(entry)
        return out

    def __repr__(self):
        terms = " + ".join(f"({c})*{self.variable}^{k}" for k, c in enumerate(self.coefficients))
        return f"{terms} + O({self.variable}^{self.order})"


def _digit_json(c: Coefficient):
    if isinstance(c, PadicQuadExt):
        return {"c": c.c.to_json()["value"], "d": c.d.to_json()["value"]}
    return c.to_json()["value"]


def subst_recip(f: PadicPowerSeries) -> PadicPowerSeries:
    """
    g(T) = f((1+T)^-1 - 1), by b_0 = a_0 and b_k = (-1)^k sum_{i<k} C(k-1, i) a_{i+1}.
    """
    a = f.coefficients
    b = [a[0]] if a else []
    for k in range(1, f.order):
        total = a[1]
        binom = 1
        for i in range(1, k):
            binom = binom * (k - i) // i
            total = total + a[i + 1] * binom
        b.append(total if k % 2 == 0 else -total)
    return PadicPowerSeries(f.p, tuple(b), f.variable, f.floor)


def onepT_power(e, order: int, p: int = None, prec: int = None) -> PadicPowerSeries:
    """(1+T)^e = sum_k C(e, k) T^k for e in Z_p."""
    if isinstance(e, PadicNumber):
        p = e.p
    coeffs = tuple(padic_binomial(e, k, p, prec) for k in range(order))
    return PadicPowerSeries(p, coeffs, VARIABLE_T)


def series_from_values(values: Sequence[Coefficient], p: int, variable: str = VARIABLE_T, floor=0) -> PadicPowerSeries:
    return PadicPowerSeries(p, tuple(values), variable, floor)


def cut(x: Coefficient, prec) -> Coefficient:
    """x known only modulo p^prec (half-integral prec allowed in Q_p(alpha))."""
    if prec == INFINITE:
        return x
    if isinstance(x, PadicQuadExt):
        return x.add_bigoh(Fraction(prec))
    return x.add_bigoh(math.floor(prec))
