"""
The quadratic extension Q_p(alpha) with alpha^2 = a_p * alpha - p.

Only the supersingular case p | a_p is supported, where the extension is ramified and
alpha is a uniformiser: v(alpha) = 1/2. Elements are c + d*alpha with c, d in Q_p and
valuations are reported as Fractions in half-integer steps.
"""

import math
from fractions import Fraction

from padic_ell.padic.number import INFINITE, PadicNumber

HALF = Fraction(1, 2)


def _val(x: PadicNumber):
    if x.is_exact_zero():
        return INFINITE
    return Fraction(x.valuation())


class PadicQuadExt:
    """Element c + d*alpha of Q_p(alpha)."""

    __slots__ = ("c", "d", "a_p")

    def __init__(self, c: PadicNumber, d: PadicNumber, a_p: int):
        if c.p != d.p:
            raise ValueError("components must share the prime")
        if a_p % c.p:
            raise ValueError(f"a_p = {a_p} is a unit at {c.p}; X^2 - a_p X + p splits over Q_{c.p}")
        self.c = c
        self.d = d
        self.a_p = a_p

    @property
    def p(self) -> int:
        return self.c.p

    @classmethod
    def alpha(cls, a_p: int, p: int, prec: int) -> "PadicQuadExt":
        """The root alpha itself, known to absolute precision prec in both components."""
        return cls(PadicNumber.zero(p), PadicNumber.from_rational(1, p, prec), a_p)

    @classmethod
    def embed(cls, x, a_p: int, p: int) -> "PadicQuadExt":
        if isinstance(x, PadicQuadExt):
            return x
        if not isinstance(x, PadicNumber):
            raise TypeError(f"cannot embed {x!r}")
        return cls(x, PadicNumber.zero(p), a_p)

    def _coerce(self, other):
        if isinstance(other, PadicQuadExt):
            if other.a_p != self.a_p or other.p != self.p:
                raise ValueError("elements of different quadratic extensions")
            return other
        if isinstance(other, PadicNumber):
            return PadicQuadExt(other, PadicNumber.zero(self.p), self.a_p)
        if isinstance(other, (int, Fraction)):
            like = self.c if not self.c.is_exact_zero() else self.d
            return PadicQuadExt(like._coerce(other), PadicNumber.zero(self.p), self.a_p)
        return NotImplemented

    # Accessors

    def valuation(self) -> Fraction:
        """min(v(c), v(d) + 1/2); a zero reports its precision."""
        if self.is_zero():
            return self.precision
        vc = _val(self.c) if not self.c.is_zero() else INFINITE
        vd = _val(self.d) + HALF if not self.d.is_zero() else INFINITE
        return min(vc, vd)

    @property
    def precision(self):
        pc = self.c.precision
        pd = self.d.precision + HALF if self.d.precision != INFINITE else INFINITE
        result = min(pc, pd)
        return result if result == INFINITE else Fraction(result)

    def is_zero(self) -> bool:
        return self.c.is_zero() and self.d.is_zero()

    def add_bigoh(self, prec) -> "PadicQuadExt":
        """Keep c + d*alpha modulo alpha^(2*prec)."""
        prec = Fraction(prec)
        return PadicQuadExt(
            self.c.add_bigoh(math.ceil(prec)),
            self.d.add_bigoh(math.ceil(prec - HALF)),
            self.a_p,
        )

    def conjugate(self) -> "PadicQuadExt":
        """Image under alpha -> a_p - alpha."""
        return PadicQuadExt(self.c + self.d * self.a_p, -self.d, self.a_p)

    def norm(self) -> PadicNumber:
        return self.c * self.c + self.c * self.d * self.a_p + self.d * self.d * self.p

    def trace(self) -> PadicNumber:
        return self.c * 2 + self.d * self.a_p

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PadicQuadExt(self.c + other.c, self.d + other.d, self.a_p)

    __radd__ = __add__

    def __neg__(self):
        return PadicQuadExt(-self.c, -self.d, self.a_p)

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
        dd = self.d * other.d
        c = self.c * other.c - dd * self.p
        d = self.c * other.d + other.c * self.d + dd * self.a_p
        return PadicQuadExt(c, d, self.a_p)

    __rmul__ = __mul__

    def inverse(self) -> "PadicQuadExt":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError(f"cannot invert {self}")
        bar = self.conjugate()
        inv = n.inverse()
        return PadicQuadExt(bar.c * inv, bar.d * inv, self.a_p)

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
            return PadicQuadExt(self.c ** 0, PadicNumber.zero(self.p), self.a_p)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"({self.c}) + ({self.d})*alpha"

    def to_json(self) -> dict:
        return {"c": self.c.to_json(), "d": self.d.to_json(), "a_p": self.a_p}
