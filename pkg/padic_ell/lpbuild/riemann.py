"""
Riemann-sum approximations of the p-adic L-series in T = kappa(gamma)^(s-1) - 1.

At level n the integral of psi(x)(1+T)^(log<x>/log kappa) against mu is replaced by

    sum over a in [1, p^n M], gcd(a, pM) = 1, of psi(a) (1+T)^c(a) mu(a + p^n M Z_p)

with (1+p)^c(a) = <a> mod p^n. The sums of symbols are accumulated exactly over Q, per
residue class mod p, and only then multiplied by Teichmuller values and powers of alpha.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from padic_ell.charset import DirichletCharacter
from padic_ell.config import Config
from padic_ell.curve import CurveData
from padic_ell.errors import LevelTooLow
from padic_ell.lpbuild.measure import Alpha, MeasureContext, alpha_repr, measure_context
from padic_ell.padic import INFINITE, one_unit_dlog, teichmuller
from padic_ell.pseries.series import PadicPowerSeries, VARIABLE_T, coefficient_precision, cut
from padic_ell.utils.const import KAPPA_GAMMA_LABEL, SCHEMA_VERSION
from padic_ell.utils.log import log


def _vp(p: int, x: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def truncation_bound(p: int, n: int, j: int):
    """v_p of the T^j coefficient of (1+T)^(p^(n-1)) - 1; infinite for j = 0."""
    if j == 0:
        return INFINITE
    return _vp(p, math.comb(p ** (n - 1), j))


@dataclass(frozen=True)
class LpApproximation:
    """
    A level-n approximation of L_p(E, alpha, psi, T).

    `series.floor` is the a-priori valuation floor; coefficient precisions never exceed
    the truncation bound at level n (nor, from `lp_series`, the agreement with level n-1).
    """

    level: int
    series: PadicPowerSeries
    context: MeasureContext = field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.context.p

    @property
    def psi(self) -> DirichletCharacter:
        return self.context.psi

    @property
    def alpha(self) -> Alpha:
        return self.context.alpha

    @property
    def t_order(self) -> int:
        return self.series.order - 1

    def precisions(self) -> List:
        return self.series.precisions()

    def to_json(self) -> dict:
        prec = self.alpha.precision
        return {
            "schema": SCHEMA_VERSION,
            "curve": self.context.E.name,
            "p": self.p,
            "alpha": {"repr": alpha_repr(self.alpha), "precision": str(prec)},
            "psi": self.psi.to_text(),
            "kappa_gamma": KAPPA_GAMMA_LABEL,
            "level": self.level,
            "floor": str(self.series.floor),
            "coefficients": self.series.to_json(),
        }


def _class_sums(ctx: MeasureContext, n: int, t_order: int) -> Dict[int, Tuple[List[Fraction], List[Fraction]]]:
    """
    Per residue r = a mod p (all a lumped together when psi has no Teichmuller part):
    exact sums of chi_D(a) C(c(a), i) [a/(M p^n)] and of chi_D(a) C(c(a), i) [a/(M p^(n-1))].
    """
    p, M = ctx.p, ctx.M
    modulus = M * p ** n
    sums: Dict[int, Tuple[List[Fraction], List[Fraction]]] = {}
    for a in range(1, modulus + 1):
        if a % p == 0 or math.gcd(a, M) != 1:
            continue
        chi = ctx.psi.kronecker(a)
        c = one_unit_dlog(a, ctx.gen, n)
        r = a % p if ctx.psi.j else 0
        first, second = sums.setdefault(r, ([Fraction(0)] * (t_order + 1), [Fraction(0)] * (t_order + 1)))
        x = chi * ctx.symbol(Fraction(a, modulus))
        y = 0 if ctx.delta else chi * ctx.symbol(Fraction(a, modulus // p))
        for i in range(min(t_order, c) + 1):
            b = math.comb(c, i)
            first[i] += b * x
            if y:
                second[i] += b * y
    return sums


def _raw_coefficients(ctx: MeasureContext, n: int, t_order: int) -> List[Alpha]:
    sums = _class_sums(ctx, n, t_order)
    scale_hi = ctx.alpha ** (-n)
    scale_lo = ctx.alpha ** (-(n + 1))
    weights = {r: teichmuller(r, ctx.p, ctx.prec) ** ctx.psi.j for r in sums if ctx.psi.j}

    coefficients = []
    for i in range(t_order + 1):
        total = ctx.embed(Fraction(0))
        for r, (first, second) in sorted(sums.items()):
            term = ctx.embed(first[i]) * scale_hi
            if not ctx.delta:
                term = term - ctx.embed(second[i]) * scale_lo
            if r in weights:
                term = term * weights[r]
            total = total + term
        coefficients.append(total)
    return coefficients


def _check_level(p: int, n: int, t_order: int) -> None:
    if n < 1:
        raise LevelTooLow(f"level must be at least 1, got {n}")
    if t_order < 0:
        raise ValueError("t_order must be non-negative")
    if t_order >= p ** (n - 1):
        raise LevelTooLow(f"T^{t_order} needs level > {n} at p = {p} (t_order < p^(n-1))")


def riemann_series(ctx: MeasureContext, n: int, t_order: int) -> LpApproximation:
    """
    The level-n polynomial approximation of the T-series up to T^t_order.

    Coefficient j is known to min(arithmetic precision, truncation bound + floor).

    Raises:
        LevelTooLow: if t_order >= p^(n-1).
    """
    _check_level(ctx.p, n, t_order)
    floor = ctx.floor(n)
    coefficients = []
    for j, c in enumerate(_raw_coefficients(ctx, n, t_order)):
        bound = truncation_bound(ctx.p, n, j)
        if bound != INFINITE:
            c = cut(c, bound + floor)
        coefficients.append(c)
    series = PadicPowerSeries(ctx.p, tuple(coefficients), VARIABLE_T, floor)
    return LpApproximation(n, series, ctx)


def _agreement(hi: Alpha, lo: Alpha):
    diff = hi - lo
    v = diff.valuation()
    return v if v == INFINITE else Fraction(v)


def lp_series(
    E: CurveData,
    p: int,
    alpha: Optional[Alpha] = None,
    psi: Optional[DirichletCharacter] = None,
    n: Optional[int] = None,
    t_order: Optional[int] = None,
    prec: Optional[int] = None,
) -> LpApproximation:
    """
    End-to-end series: context, level-n and level-(n-1) sums, merged precision.

    Each reported coefficient is cut to the agreement of the two levels, so a digit is
    only claimed when it is stable under refinement. Coefficients T^j with j >= p^(n-2)
    have no level n-1 counterpart and are cut to the floor (no certified digits).

    Raises:
        AdditiveReduction: if E is additive at p.
        LevelTooLow: if t_order >= p^(n-1).
    """
    config = Config()
    n = n if n is not None else config.level
    t_order = t_order if t_order is not None else config.t_order
    ctx = measure_context(E, p, alpha, psi, prec)
    _check_level(p, n, t_order)

    approx = riemann_series(ctx, n, t_order)
    if n < 2:
        return approx

    lower = _raw_coefficients(ctx, n - 1, t_order)
    stable = p ** (n - 2)
    floor = approx.series.floor
    merged = []
    for j, (hi, lo) in enumerate(zip(approx.series, lower)):
        if j >= stable:
            # the level n-1 sum has degree < p^(n-2) in T, so nothing is confirmed here
            merged.append(cut(hi, floor))
            continue
        agreement = _agreement(hi, lo)
        if agreement != INFINITE and agreement < coefficient_precision(hi):
            hi = cut(hi, agreement)
        merged.append(hi)
    series = PadicPowerSeries(p, tuple(merged), VARIABLE_T, approx.series.floor)
    log.info(
        f"L_{p}({E.name}, psi={ctx.psi}) at level {n}: precisions "
        f"{[str(x) for x in series.precisions()]}, floor {series.floor}"
    )
    return LpApproximation(n, series, ctx)
