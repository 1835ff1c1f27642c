"""
Finite-precision elements of Q_p.

A nonzero value is stored as p^valuation * unit with the unit known modulo
p^rel_prec. Precision is absolute (valuation + rel_prec) and every operation
propagates the worst case: sums keep the smaller absolute precision, products and
quotients the smaller relative precision.
"""

import math
from fractions import Fraction
from typing import List, Union

from sympy import multiplicity

INFINITE = math.inf

# Relative digits given to an exact constant that meets an exact zero
DEFAULT_REL_PREC = 20

RationalLike = Union[int, Fraction]


def _vp(p: int, x: int) -> int:
    return int(multiplicity(p, x))


class PadicNumber:
    """
    Element of Q_p known to a finite absolute precision.

    Zero comes in two flavours: an inexact zero O(p^n), whose valuation is reported
    as n, and the exact zero, whose precision is infinite.
    """

    __slots__ = ("p", "_val", "_unit", "_absprec")

    def __init__(self, p: int, valuation, unit: int, absprec):
        self.p = p
        self._val = valuation
        self._unit = unit
        self._absprec = absprec

    # Construction

    @classmethod
    def _make(cls, p: int, val: int, x: int, absprec) -> "PadicNumber":
        """Canonical form of x * p^val known modulo p^absprec."""
        if x == 0:
            return cls.zero(p, absprec)
        if absprec == INFINITE:
            raise ValueError("only zero can be stored exactly")
        k = _vp(p, x)
        val += k
        if val >= absprec:
            return cls.zero(p, absprec)
        x //= p ** k
        rel = absprec - val
        return cls(p, val, x % p ** rel, absprec)

    @classmethod
    def zero(cls, p: int, absprec=INFINITE) -> "PadicNumber":
        return cls(p, absprec, 0, absprec)

    @classmethod
    def from_rational(cls, x: RationalLike, p: int, prec) -> "PadicNumber":
        """
        Embed a rational number with absolute precision prec.

        The rational 0 is the exact zero; every other value is truncated.
        """
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        num, den = x.numerator, x.denominator
        vnum, vden = _vp(p, num), _vp(p, den)
        val = vnum - vden
        if val >= prec:
            return cls.zero(p, prec)
        rel = prec - val
        modulus = p ** rel
        unit = (num // p ** vnum) * pow(den // p ** vden, -1, modulus)
        return cls(p, val, unit % modulus, prec)

    @classmethod
    def from_parts(cls, p: int, valuation: int, unit: int, rel_prec: int) -> "PadicNumber":
        return cls._make(p, valuation, unit % p ** rel_prec, valuation + rel_prec)

    # Accessors

    def valuation(self):
        """v_p of the value; for a zero this is its precision."""
        return self._val

    @property
    def precision(self):
        """Absolute precision: the value is known modulo p^precision."""
        return self._absprec

    @property
    def rel_prec(self) -> int:
        if self._unit == 0:
            return 0
        return self._absprec - self._val

    @property
    def unit_residue(self) -> int:
        return self._unit

    def is_zero(self) -> bool:
        return self._unit == 0

    def is_exact_zero(self) -> bool:
        return self._unit == 0 and self._absprec == INFINITE

    def is_unit(self) -> bool:
        return self._unit != 0 and self._val == 0

    def lift(self) -> Fraction:
        """The rational representative unit * p^valuation."""
        if self._unit == 0:
            return Fraction(0)
        return Fraction(self._unit) * Fraction(self.p) ** self._val

    def residue(self) -> int:
        """Integer representative modulo p^precision; requires valuation >= 0."""
        if self._val < 0 and self._unit:
            raise ValueError(f"{self} is not p-integral")
        return int(self.lift())

    def digits(self) -> List[int]:
        """Base-p digits of the unit part, lowest first."""
        out = []
        u = self._unit
        for _ in range(self.rel_prec):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    def add_bigoh(self, prec) -> "PadicNumber":
        """Forget every digit at or above p^prec."""
        if prec >= self._absprec:
            return self
        if self._unit == 0 or self._val >= prec:
            return PadicNumber.zero(self.p, prec)
        return PadicNumber(self.p, self._val, self._unit % self.p ** (prec - self._val), prec)

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError(f"cannot combine {self.p}-adic and {other.p}-adic numbers")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return PadicNumber.zero(self.p)
            v = _vp(self.p, other.numerator) - _vp(self.p, other.denominator)
            if self._absprec == INFINITE:
                prec = v + DEFAULT_REL_PREC
            else:
                prec = max(self._absprec, v + max(self.rel_prec, 1))
            return PadicNumber.from_rational(other, self.p, prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_exact_zero():
            return self
        if self.is_exact_zero():
            return other
        absprec = min(self._absprec, other._absprec)
        base = min(self._val, other._val)
        if base >= absprec:
            return PadicNumber.zero(self.p, absprec)
        x = self._unit * self.p ** (self._val - base) + other._unit * self.p ** (other._val - base)
        return PadicNumber._make(self.p, base, x % self.p ** (absprec - base), absprec)

    __radd__ = __add__

    def __neg__(self):
        if self._unit == 0:
            return self
        return PadicNumber(self.p, self._val, (-self._unit) % self.p ** self.rel_prec, self._absprec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return PadicNumber.zero(self.p)
        if self._unit == 0 or other._unit == 0:
            # O(p^a) * p^v u = O(p^(a+v)); a zero reports its precision as valuation
            return PadicNumber.zero(self.p, self._val + other._val)
        rel = min(self.rel_prec, other.rel_prec)
        val = self._val + other._val
        unit = (self._unit * other._unit) % self.p ** rel
        return PadicNumber(self.p, val, unit, val + rel)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self._unit == 0:
            raise ZeroDivisionError(f"cannot invert {self}")
        rel = self.rel_prec
        return PadicNumber(self.p, -self._val, pow(self._unit, -1, self.p ** rel), rel - self._val)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            rel = self.rel_prec if self._unit else DEFAULT_REL_PREC
            return PadicNumber(self.p, 0, 1 % self.p ** rel, rel)
        if self._unit == 0:
            if self.is_exact_zero():
                return self
            return PadicNumber.zero(self.p, self._absprec * e)
        rel = self.rel_prec
        val = self._val * e
        return PadicNumber(self.p, val, pow(self._unit, e, self.p ** rel), val + rel)

    def __eq__(self, other):
        """Equality at the joint precision."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if self.is_exact_zero():
            return "0"
        return f"{self.lift()} + O({self.p}^{self._absprec})"

    def to_json(self) -> dict:
        """Digit-list serialisation: valuation, digits of the unit (lowest first), precision."""
        prec = None if self._absprec == INFINITE else self._absprec
        return {
            "valuation": None if self.is_exact_zero() else self._val,
            "value": ",".join(str(d) for d in self.digits()),
            "prec": prec,
        }
