"""
Point counts over F_l, Hecke eigenvalues a_n and local data at p.

Counting is naive: after completing the square, the number of affine points over F_l is
sum_x #{y : y^2 = g(x)} with g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6, done with numpy over
all x at once. This is fine for the few hundred primes the L-series and Hecke checks
need.
"""

from functools import lru_cache
from typing import List, Union

import numpy as np
from sympy import isprime, multiplicity, primerange

from padic_ell.curve.model import CurveData, ReductionInfo, ReductionKind
from padic_ell.errors import AdditiveReduction, BadPrime, CurveInputError
from padic_ell.padic import PadicNumber, PadicQuadExt, hensel_unit_root
from padic_ell.utils.log import log


def _count_points(E: CurveData, ell: int) -> int:
    """#E(F_ell) of the reduced (possibly singular) cubic, point at infinity included."""
    if ell == 2:
        affine = sum(
            1
            for x in range(2)
            for y in range(2)
            if (y * y + E.a1 * x * y + E.a3 * y - (x ** 3 + E.a2 * x * x + E.a4 * x + E.a6)) % 2 == 0
        )
        return affine + 1

    xs = np.arange(ell, dtype=np.int64)
    g = np.full(ell, 4 % ell, dtype=np.int64)
    for coeff in (E.b2, 2 * E.b4, E.b6):
        g = (g * xs + coeff % ell) % ell
    squares = np.bincount((xs * xs) % ell, minlength=ell)
    return int(squares[g].sum()) + 1


@lru_cache(maxsize=4096)
def _trace(E: CurveData, ell: int) -> int:
    return ell + 1 - _count_points(E, ell)


def ap_count(E: CurveData, ell: int) -> int:
    """
    a_ell = ell + 1 - #E(F_ell) for a prime of good reduction.

    Raises:
        BadPrime: if ell divides the conductor.
    """
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")
    if E.N % ell == 0:
        raise BadPrime(f"{ell} divides the conductor {E.N} of {E.name}")
    return _trace(E, ell)


def trace_of_frobenius(E: CurveData, ell: int) -> int:
    """a_ell for any prime; at bad primes this is 1, -1 or 0 by reduction type."""
    return _trace(E, ell)


def _spf_sieve(n: int) -> List[int]:
    spf = list(range(n + 1))
    for i in range(2, int(n ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def an_expansion(E: CurveData, bound: int) -> List[int]:
    """
    Coefficients [a_1, ..., a_bound] of the attached newform.

    Multiplicative in n; a_{l^k} = a_l a_{l^(k-1)} - l a_{l^(k-2)} for good l and
    a_{l^k} = a_l^k for l | N.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    spf = _spf_sieve(bound)
    a = [0] * (bound + 1)
    a[1] = 1
    for n in range(2, bound + 1):
        ell = spf[n]
        m, k = n, 0
        while m % ell == 0:
            m //= ell
            k += 1
        if m > 1:
            a[n] = a[n // m] * a[m]
        elif k == 1:
            a[n] = _trace(E, ell)
        else:
            prev = a[n // ell]
            a[n] = a[ell] * prev
            if E.N % ell:
                a[n] -= ell * a[n // (ell * ell)]
    return a[1:]


def good_primes(E: CurveData, bound: int, exclude=()) -> List[int]:
    """Primes below bound not dividing N (nor anything in exclude)."""
    return [ell for ell in primerange(2, bound) if E.N % ell and all(ell % q for q in exclude)]


def reduction_type(E: CurveData, p: int) -> ReductionInfo:
    """
    Classify the reduction of E at an odd prime p.

    Raises:
        ValueError: if p is even or not prime.
        CurveInputError: if the conductor disagrees with the model at p.
    """
    if p % 2 == 0 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a_p = _trace(E, p)
    v_N = multiplicity(p, E.N)
    divides_disc = E.discriminant % p == 0
    divides_c4 = E.c4 % p == 0

    if v_N == 0:
        if divides_disc:
            raise CurveInputError(f"{E.name}: p = {p} divides the discriminant but not the conductor")
        kind = ReductionKind.GOOD_ORDINARY if a_p % p else ReductionKind.GOOD_SUPERSINGULAR
        return ReductionInfo(p, kind, a_p, 0)

    if v_N == 1:
        if divides_c4:
            raise CurveInputError(f"{E.name}: v_{p}(N) = 1 but the reduction at {p} is additive")
        if a_p == 1:
            kind = ReductionKind.SPLIT_MULT
        elif a_p == -1:
            kind = ReductionKind.NONSPLIT_MULT
        else:
            raise CurveInputError(f"{E.name}: a_{p} = {a_p} is impossible for multiplicative reduction")
        return ReductionInfo(p, kind, a_p, 1)

    if not divides_c4:
        raise CurveInputError(f"{E.name}: v_{p}(N) = {v_N} but the reduction at {p} is multiplicative")
    return ReductionInfo(p, ReductionKind.ADDITIVE, a_p, 1)


def allowable_roots(E: CurveData, p: int, prec: int) -> List[Union[PadicNumber, PadicQuadExt]]:
    """
    The p-roots alpha of E: the unit root when ordinary, a_p = +-1 when multiplicative,
    both roots of X^2 - a_p X + p in Q_p(alpha) when supersingular.

    Raises:
        AdditiveReduction: if E is not semistable at p.
    """
    info = reduction_type(E, p)
    match info.kind:
        case ReductionKind.ADDITIVE:
            raise AdditiveReduction(f"{E.name} has additive reduction at {p}")
        case ReductionKind.GOOD_ORDINARY:
            roots = [hensel_unit_root(info.a_p, p, prec)]
        case ReductionKind.SPLIT_MULT | ReductionKind.NONSPLIT_MULT:
            roots = [PadicNumber.from_rational(info.a_p, p, prec)]
        case ReductionKind.GOOD_SUPERSINGULAR:
            alpha = PadicQuadExt.alpha(info.a_p, p, prec)
            roots = [alpha, alpha.conjugate()]
    log.debug(f"{E.name} at p={p}: {info.kind.value}, a_p={info.a_p}, {len(roots)} allowable root(s)")
    return roots
