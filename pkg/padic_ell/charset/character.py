"""
Tame Dirichlet characters with values in Z_p.

A character is psi = chi_D * omega^j where chi_D is the Kronecker character of a
fundamental discriminant D prime to p and omega is the Teichmuller character at p.
Its conductor is |D| * p^k with k = 1 exactly when j != 0 mod (p - 1).
"""

import math
import re
from dataclasses import dataclass
from sympy import isprime, kronecker_symbol
from sympy.ntheory.factor_ import core

from padic_ell.errors import ConductorClash, WildCharacter
from padic_ell.padic.functions import teichmuller
from padic_ell.padic.number import PadicNumber

_FACTOR = re.compile(r"^(kron:(?P<D>[+-]?\d+)|teich:(?P<j>[+-]?\d+))$")


def is_fundamental_discriminant(D: int) -> bool:
    """1 counts as the discriminant of Q."""
    if D == 1:
        return True
    if D == 0:
        return False
    if D % 4 == 1:
        return core(abs(D)) == abs(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and core(abs(m)) == abs(m)
    return False


def fundamental_part(n: int) -> int:
    """The fundamental discriminant of Q(sqrt(n)), 1 for squares."""
    if n == 0:
        raise ValueError("0 has no quadratic field")
    sign = 1 if n > 0 else -1
    d = sign * core(abs(n))
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class DirichletCharacter:
    D: int
    j: int
    p: int

    def __post_init__(self):
        if self.p == 2 or not isprime(self.p):
            raise ValueError(f"p = {self.p} is not an odd prime")
        if self.D % (self.p * self.p) == 0:
            raise WildCharacter(f"p^2 = {self.p ** 2} divides D = {self.D}")
        if self.D % self.p == 0:
            raise ConductorClash(f"p = {self.p} divides D = {self.D}")
        if not is_fundamental_discriminant(self.D):
            raise ValueError(f"D = {self.D} is not a fundamental discriminant")
        object.__setattr__(self, "j", self.j % (self.p - 1))

    @classmethod
    def trivial(cls, p: int) -> "DirichletCharacter":
        return cls(1, 0, p)

    @property
    def M(self) -> int:
        """Prime-to-p part of the conductor."""
        return abs(self.D)

    @property
    def k(self) -> int:
        return 1 if self.j else 0

    @property
    def conductor(self) -> int:
        return self.M * self.p ** self.k

    @property
    def order(self) -> int:
        quadratic = 1 if self.D == 1 else 2
        teich = (self.p - 1) // math.gcd(self.j, self.p - 1)
        return quadratic * teich // math.gcd(quadratic, teich)

    def is_trivial(self) -> bool:
        return self.D == 1 and self.j == 0

    def is_real(self) -> bool:
        return self.j == 0 or 2 * self.j == self.p - 1

    def kronecker(self, x: int) -> int:
        """chi_D(x) as an integer in {-1, 0, 1}."""
        return 1 if self.D == 1 else int(kronecker_symbol(self.D, x))

    def __call__(self, x: int, prec: int) -> PadicNumber:
        return char_eval(self, x, prec)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"characters at different primes {self.p} and {other.p}")
        return DirichletCharacter(fundamental_part(self.D * other.D), self.j + other.j, self.p)

    def to_text(self) -> str:
        parts = []
        if self.D != 1:
            parts.append(f"kron:{self.D}")
        if self.j:
            parts.append(f"teich:{self.j}")
        return "*".join(parts) or "triv"

    def __str__(self):
        return self.to_text()


def char_eval(psi: DirichletCharacter, x: int, prec: int) -> PadicNumber:
    """psi(x) in Z_p mod p^prec; exact zero when x shares a factor with the conductor."""
    if math.gcd(x, psi.conductor) != 1:
        return PadicNumber.zero(psi.p)
    value = PadicNumber(psi.p, 0, psi.kronecker(x) % psi.p ** prec, prec)
    if psi.j:
        value = value * teichmuller(x, psi.p, prec) ** psi.j
    return value


def char_sign(psi: DirichletCharacter) -> int:
    """psi(-1)."""
    sign = 1 if psi.D > 0 else -1
    return sign * (-1) ** psi.j


def char_bar(psi: DirichletCharacter) -> DirichletCharacter:
    """The inverse character."""
    return DirichletCharacter(psi.D, -psi.j, psi.p)


def parse_character(text: str, p: int) -> DirichletCharacter:
    """
    Parse "triv", "kron:D", "teich:j" or a "*"-separated product of such factors.

    Raises:
        ValueError: on malformed text or a D that is not a fundamental discriminant.
        ConductorClash, WildCharacter: when p divides D.
    """
    text = text.strip().lower().replace(" ", "")
    if text in ("triv", "1", ""):
        return DirichletCharacter.trivial(p)
    D, j = 1, 0
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise ValueError(f"cannot parse character factor {factor!r} in {text!r}")
        if match.group("D") is not None:
            if D != 1:
                raise ValueError(f"more than one kron factor in {text!r}")
            D = int(match.group("D"))
        else:
            j += int(match.group("j"))
    return DirichletCharacter(D, j, p)

