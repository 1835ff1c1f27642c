"""Atkin-Lehner signs c_Q read off the eigen-functional."""

import math
from fractions import Fraction
from typing import Optional

from sympy.core.intfunc import igcdex

from padic_ell.errors import BadQ, Inconsistent
from padic_ell.modsym.space import lift_to_sl2
from padic_ell.modsym.symbols import ModularSymbolMap, path_value
from padic_ell.utils.log import log


def atkin_lehner_matrix(N: int, Q: int):
    """(Qu, v; N, Q) with Q^2 u - N v = Q."""
    if Q < 1 or N % Q or math.gcd(Q, N // Q) != 1:
        raise BadQ(f"Q = {Q} does not exactly divide N = {N}")
    x, y, _ = igcdex(Q, N // Q)
    return Q * int(x), -int(y), N, Q


def _act(w, num: int, den: int) -> Optional[Fraction]:
    """Image of the cusp num/den (den = 0 is oo); None for oo."""
    a, b, c, d = w
    top, bottom = a * num + b * den, c * num + d * den
    return None if bottom == 0 else Fraction(top, bottom)


def atkin_lehner_sign(m: ModularSymbolMap, Q: int) -> int:
    """
    Eigenvalue c_Q of w_Q on the eigenline of m.

    The image of every Manin symbol g{0, oo} = {b/d, a/c} is the path {w(b/d), w(a/c)},
    evaluated like any other path; the functional must come back multiplied by +-1.

    Raises:
        BadQ: unless Q || N.
        Inconsistent: if the image is not +-1 times the functional.
    """
    w = atkin_lehner_matrix(m.N, Q)
    pairs = []
    for x in m.p1:
        a, b, c, d = lift_to_sl2(x.c, x.d, m.N)
        pairs.append((path_value(m, _act(w, b, d), _act(w, a, c)), m.values[x.index]))
    ratio = next((image / original for image, original in pairs if original), None)
    if ratio not in (1, -1):
        raise Inconsistent(f"w_{Q} acts by {ratio} at level {m.N}")
    if any(image != ratio * original for image, original in pairs):
        raise Inconsistent(f"w_{Q} does not preserve the eigenline at level {m.N}")
    ratio = int(ratio)
    log.debug(f"c_{Q} = {ratio:+d} for {m.label} ({m.sign_name})")
    return int(ratio)
