"""
The measures attached to (E, alpha, psi).

    mu(a + p^k M Z_p) = alpha^-k [a/(M p^k)] - (1 - delta) alpha^-(k+1) [a/(M p^(k-1))]

with delta = 0 for good and 1 for multiplicative reduction. The sign of the symbols is
psi(-1), and the context binds it on construction so a wrong-parity measure cannot be
formed.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from padic_ell.charset import DirichletCharacter, char_sign
from padic_ell.config import Config
from padic_ell.curve import CurveData, ReductionKind, allowable_roots, reduction_type
from padic_ell.modsym import ModularSymbolMap, eval_symbol, symbol_maps
from padic_ell.padic import CyclotomicGenerator, PadicNumber, PadicQuadExt
from padic_ell.utils.log import log

Alpha = Union[PadicNumber, PadicQuadExt]

ALPHA_SELECTORS = ("unit", "root1", "root2")


def choose_alpha(E: CurveData, p: int, selector: str = "unit", prec: Optional[int] = None) -> Alpha:
    """
    Pick an allowable root: "unit" is the only root for ordinary and multiplicative p,
    "root1"/"root2" are alpha and its conjugate when p is supersingular.
    """
    prec = prec or Config().working_digits
    roots = allowable_roots(E, p, prec)
    match selector:
        case "unit" | "root1":
            return roots[0]
        case "root2":
            if len(roots) < 2:
                raise ValueError(f"{E.name} has a single allowable root at p = {p}")
            return roots[1]
        case _:
            raise ValueError(f"unknown root selector {selector!r}; expected one of {', '.join(ALPHA_SELECTORS)}")


def alpha_repr(alpha: Alpha) -> str:
    if isinstance(alpha, PadicQuadExt):
        return f"({alpha.c.lift()}) + ({alpha.d.lift()})*alpha"
    return str(alpha.lift())


def symbol_denominator(m: ModularSymbolMap) -> int:
    """Common denominator of every value [r] of the normalised map."""
    den = 1
    for v in m.values:
        den = math.lcm(den, (m.scale * v).denominator)
    return den


@dataclass(frozen=True)
class MeasureContext:
    E: CurveData
    p: int
    alpha: Alpha
    delta: int
    psi: DirichletCharacter
    plus: ModularSymbolMap = field(repr=False)
    minus: ModularSymbolMap = field(repr=False)
    gen: CyclotomicGenerator = field(repr=False)
    prec: int = 30

    @property
    def M(self) -> int:
        return self.psi.M

    @property
    def sign(self) -> int:
        return char_sign(self.psi)

    @property
    def symbols(self) -> ModularSymbolMap:
        """The map of sign psi(-1)."""
        return self.plus if self.sign == 1 else self.minus

    @property
    def supersingular(self) -> bool:
        return isinstance(self.alpha, PadicQuadExt)

    def alpha_valuation(self) -> Fraction:
        return Fraction(self.alpha.valuation())

    def symbol(self, r: Fraction) -> Fraction:
        return eval_symbol(self.symbols, r)

    def embed(self, x: Fraction) -> PadicNumber:
        if x == 0:
            return PadicNumber.zero(self.p)
        return PadicNumber.from_rational(x, self.p, self.prec)

    def floor(self, n: int) -> Fraction:
        """A-priori lower bound on the valuation of any level-n Riemann sum."""
        den = symbol_denominator(self.symbols)
        v_den = 0
        while den % self.p == 0:
            den //= self.p
            v_den += 1
        return -(n + 1) * self.alpha_valuation() - v_den


def measure_context(
    E: CurveData,
    p: int,
    alpha: Optional[Alpha] = None,
    psi: Optional[DirichletCharacter] = None,
    prec: Optional[int] = None,
) -> MeasureContext:
    """
    Bind curve, root, character and the symbol maps.

    Raises:
        AdditiveReduction: if E is additive at p.
        ValueError: if alpha is not an allowable root, or psi lives at another prime.
    """
    prec = prec or Config().working_digits
    psi = psi or DirichletCharacter.trivial(p)
    if psi.p != p:
        raise ValueError(f"character {psi} is defined at {psi.p}, not {p}")
    roots = allowable_roots(E, p, prec)
    if alpha is None:
        alpha = roots[0]
    elif not any(alpha == r for r in roots):
        raise ValueError(f"{alpha} is not an allowable root for {E.name} at {p}")

    info = reduction_type(E, p)
    delta = 1 if info.kind in (ReductionKind.SPLIT_MULT, ReductionKind.NONSPLIT_MULT) else 0
    plus, minus = symbol_maps(E)
    log.debug(f"Measure context for {E.name}, p={p}, psi={psi}, delta={delta}")
    return MeasureContext(E, p, alpha, delta, psi, plus, minus, CyclotomicGenerator(p, prec), prec)


def measure_value(ctx: MeasureContext, a: int, k: int) -> Alpha:
    """
    mu(a + p^k M Z_p) for gcd(a, pM) = 1 and k >= 1.
    """
    p, M = ctx.p, ctx.M
    if k < 1:
        raise ValueError("level must be at least 1")
    if math.gcd(a, p * M) != 1:
        raise ValueError(f"{a} is not prime to {p * M}")
    value = ctx.embed(ctx.symbol(Fraction(a, M * p ** k))) * ctx.alpha ** (-k)
    if not ctx.delta:
        value = value - ctx.embed(ctx.symbol(Fraction(a, M * p ** (k - 1)))) * ctx.alpha ** (-(k + 1))
    return value
