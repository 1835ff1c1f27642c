"""
The Hecke eigen-functional of a curve and the evaluation r -> [r]+-.

The functional lives on the dual of the sign quotient. Its kernel contains the
Eisenstein part automatically because T_ell acts there by 1 + ell, which never equals
a_ell of an elliptic curve.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Optional, Tuple

from sympy import primerange

from padic_ell.curve import CurveData, ap_count, good_primes
from padic_ell.errors import Inconsistent, NotIsolated
from padic_ell.exactla import SparseMatrixQ, as_rational, contfrac_convergents, kernel_basis
from padic_ell.modsym.p1 import P1List
from padic_ell.modsym.space import ManinSymbolSpace
from padic_ell.utils.const import DEFAULT_CHECK_PRIMES, DEFAULT_ELL_MAX
from padic_ell.utils.log import log


@dataclass(frozen=True)
class ModularSymbolMap:
    """
    r -> [r]+- for one curve and one sign.

    `values[i]` is the unnormalised functional on the Manin symbol with P^1 index i and
    `scale` the normalisation, so [r] = scale * sum of values along the path {oo, r}.
    `discriminant` records the twist used to fix `scale`, `check_discriminant` the one
    used to confirm it.
    """

    sign: int
    N: int
    label: str
    values: Tuple[Fraction, ...]
    p1: P1List = field(compare=False, repr=False)
    scale: Fraction = Fraction(1)
    discriminant: Optional[int] = None
    check_discriminant: Optional[int] = None
    consistent: Optional[bool] = None
    _memo: Dict[Fraction, Fraction] = field(default_factory=dict, compare=False, repr=False)

    @property
    def normalized(self) -> bool:
        return self.discriminant is not None

    @property
    def sign_name(self) -> str:
        return "plus" if self.sign == 1 else "minus"

    def rescaled(self, scale: Fraction, **kwargs) -> "ModularSymbolMap":
        return replace(self, scale=Fraction(scale), _memo={}, **kwargs)

    def symbol_value(self, c: int, d: int) -> Fraction:
        """Unnormalised value on the Manin symbol (c : d)."""
        return self.values[self.p1.index(c, d)]

    def __call__(self, r) -> Fraction:
        return eval_symbol(self, r)


def _unscaled(m: ModularSymbolMap, r: Fraction) -> Fraction:
    cached = m._memo.get(r)
    if cached is not None:
        return cached
    total = Fraction(0)
    prev_num, prev_den = 1, 0
    for conv in contfrac_convergents(r):
        num, den = conv.numerator, conv.denominator
        det = num * prev_den - prev_num * den
        total += m.values[m.p1.index(den, det * prev_den)]
        prev_num, prev_den = num, den
    m._memo[r] = total
    return total


def eval_symbol(m: ModularSymbolMap, r) -> Fraction:
    """[r] along the path {oo, r}, split into unimodular pieces by continued fractions."""
    return m.scale * _unscaled(m, as_rational(r))


def path_value(m: ModularSymbolMap, start, end) -> Fraction:
    """Unnormalised value of {start, end}; None stands for the cusp oo."""
    total = Fraction(0)
    if end is not None:
        total += _unscaled(m, as_rational(end))
    if start is not None:
        total -= _unscaled(m, as_rational(start))
    return total


def _eigen_rows(space: ManinSymbolSpace, ell: int, a_ell: int) -> SparseMatrixQ:
    """(T_ell - a_ell)^t, whose kernel holds the functionals with eigenvalue a_ell."""
    n = space.dimension
    return space.hecke_on_quotient(ell).transpose() - SparseMatrixQ.identity(n).scale(a_ell)


def _stack(blocks, cols: int) -> SparseMatrixQ:
    entries = []
    offset = 0
    for block in blocks:
        entries.extend((r + offset, c, v) for r, c, v in block.entries)
        offset += block.rows
    return SparseMatrixQ(offset, cols, tuple(entries))


def eigen_projection(
    space: ManinSymbolSpace,
    E: CurveData,
    ell_max: int = DEFAULT_ELL_MAX,
    check_primes: int = DEFAULT_CHECK_PRIMES,
    eigenvalues: Optional[Dict[int, int]] = None,
) -> ModularSymbolMap:
    """
    The functional cut out by T_ell = a_ell(E) for the good primes ell <= ell_max.

    `eigenvalues` overrides point counts for selected primes. The result is checked
    against `check_primes` further good primes.

    Raises:
        Inconsistent: if no functional survives, or the out-of-sample check fails.
        NotIsolated: if more than one dimension survives.
    """
    if space.N != E.N:
        raise Inconsistent(f"space has level {space.N} but {E.name} has conductor {E.N}")
    eigenvalues = dict(eigenvalues or {})

    def a(ell):
        return eigenvalues[ell] if ell in eigenvalues else ap_count(E, ell)

    primes = good_primes(E, ell_max + 1)
    stacked = _stack([_eigen_rows(space, ell, a(ell)) for ell in primes], space.dimension)
    kernel = kernel_basis(stacked)
    if not kernel:
        log.error(f"No eigen-functional for {E.name} (sign {space.sign:+d}) with eigenvalues at {primes}")
        raise Inconsistent(f"empty eigenspace for {E.name}, sign {space.sign:+d}: wrong level or a_ell")
    if len(kernel) > 1:
        log.warning(f"Eigenspace for {E.name} still has dimension {len(kernel)} after ell <= {ell_max}")
        raise NotIsolated(f"dimension {len(kernel)} after ell <= {ell_max}; raise ell_max")
    phi = kernel[0]

    extra = [ell for ell in primerange(ell_max + 1, 10 * ell_max + 100) if E.N % ell][:check_primes]
    for ell in extra:
        image = space.hecke_on_quotient(ell).apply_left(phi)
        if any(x != a(ell) * y for x, y in zip(image, phi)):
            log.error(f"Out-of-sample Hecke check failed for {E.name} at ell = {ell}")
            raise Inconsistent(f"functional for {E.name} is not a T_{ell} eigenvector")

    values = tuple(sum((v * phi[k] for k, v in coords.items()), Fraction(0)) for coords in space.coords)
    log.info(f"Isolated the eigen-functional of {E.name}, sign {space.sign:+d}, "
             f"using {len(primes)} primes, checked on {extra}")
    return ModularSymbolMap(space.sign, space.N, E.name, values, space.p1)
