"""
Exact rationals, continued fractions and rational reconstruction.

`BigRational` is the standard library `Fraction`: Python integers are already arbitrary
precision and `Fraction` keeps numerator and denominator coprime with a positive
denominator. Continued-fraction expansions come from sympy.
"""

from fractions import Fraction
from typing import List, Union

import mpmath
from sympy import Rational
from sympy.ntheory.continued_fraction import (
    continued_fraction_convergents,
    continued_fraction_iterator,
)

from padic_ell.errors import NoReconstruction
from padic_ell.utils.log import log

BigRational = Fraction

RealLike = Union[int, float, str, Fraction, mpmath.mpf]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and sympy Rationals into a `BigRational`."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(int(x.p), int(x.q))
    raise TypeError(f"Cannot interpret {x!r} as an exact rational")


def contfrac_convergents(r) -> List[Fraction]:
    """
    Convergents p_k/q_k of the continued fraction of r, last one equal to r.

    The implicit leading convergent 1/0 is not included. Consecutive entries satisfy
    p_k q_{k-1} - p_{k-1} q_k = +-1.
    """
    r = as_rational(r)
    terms = continued_fraction_iterator(Rational(r.numerator, r.denominator))
    return [as_rational(c) for c in continued_fraction_convergents(terms)]


def _to_fraction(x: RealLike) -> Fraction:
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        # man_exp carries the magnitude only
        man, exp = x.man_exp
        value = Fraction(int(man)) * Fraction(2) ** int(exp)
        return -value if x < 0 else value
    # floats and decimal strings convert exactly
    return Fraction(x)


def rational_reconstruct(x: RealLike, eps, den_bound: int) -> Fraction:
    """
    Recover the rational p/q with q <= den_bound lying within eps of x.

    Uses the best-approximation property of continued-fraction convergents, so the
    candidate is the closest fraction with bounded denominator. When eps is below
    1/(2 den_bound^2) at most one such fraction exists.

    Raises:
        NoReconstruction: if no fraction with q <= den_bound lands within eps.
    """
    if den_bound < 1:
        raise ValueError("den_bound must be positive")
    eps = _to_fraction(eps)
    if eps >= Fraction(1, 2 * den_bound * den_bound):
        log.debug(f"Error bound {float(eps):.3g} does not guarantee a unique reconstruction")

    target = _to_fraction(x)
    candidate = target.limit_denominator(den_bound)
    if abs(target - candidate) <= eps:
        return candidate

    log.warning(f"No rational with denominator <= {den_bound} within {float(eps):.3g} of {float(target):.15g}")
    raise NoReconstruction(
        f"no p/q with q <= {den_bound} within {float(eps):.3g} of {float(target):.15g}; "
        f"nearest candidate {candidate} misses by {float(abs(target - candidate)):.3g}"
    )
