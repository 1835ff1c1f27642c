"""
Manin-symbol presentation of weight-2 modular symbols for Gamma0(N).

The space is the free Q-vector space on P^1(Z/NZ) modulo

    x + x sigma = 0,    x + x tau + x tau^2 = 0,    x - sign * x eta = 0,

with sigma: (c:d) -> (d:-c), tau: (c:d) -> (d:-c-d) and eta: (c:d) -> (-c:d). The
Manin symbol (c:d) stands for the path g{0, oo} = {b/d, a/c} where g = (a b; c d) is any
lift to SL2(Z). Hecke operators act through Merel's Heilbronn matrices and the cuspidal
subspace is the kernel of the boundary map to cusp classes.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy.core.intfunc import igcdex

from padic_ell.exactla import SparseMatrixQ, kernel_basis, row_reduce
from padic_ell.modsym.p1 import P1List
from padic_ell.utils.log import log

Coords = Dict[int, Fraction]
Cusp = Tuple[int, int]
Matrix2 = Tuple[int, int, int, int]

INFINITY: Cusp = (1, 0)


@lru_cache(maxsize=128)
def heilbronn_matrices(n: int) -> Tuple[Matrix2, ...]:
    """Merel's set {(a b; c d) : a > b >= 0, d > c >= 0, ad - bc = n}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    found = []
    for a in range(1, n + 1):
        for b in range(a):
            c = 0
            while (a - b) * c < n:
                num = n + b * c
                if num % a == 0 and num // a > c:
                    found.append((a, b, c, num // a))
                c += 1
    return tuple(found)


def lift_to_sl2(c: int, d: int, N: int) -> Matrix2:
    """A matrix (a b; c' d') in SL2(Z) with c' = c and d' = d mod N."""
    c1 = c % N or N
    d1 = d % N
    while math.gcd(c1, d1) != 1:
        d1 += N
    x, y, _ = igcdex(d1, c1)
    return int(x), int(-y), c1, d1


def _cusp(num: int, den: int) -> Cusp:
    if den == 0:
        return INFINITY
    if den < 0:
        num, den = -num, -den
    g = math.gcd(num, den)
    return num // g, den // g


def cusps_equivalent(x: Cusp, y: Cusp, N: int) -> bool:
    """Gamma0(N)-equivalence: s1 v2 = s2 v1 mod gcd(v1 v2, N), where s_i u_i = 1 mod v_i."""
    (u1, v1), (u2, v2) = x, y

    def inverse(u, v):
        if v == 0:
            return 1
        if v == 1:
            return 0
        return pow(u % v, -1, v)

    modulus = math.gcd(v1 * v2, N)
    return (inverse(u1, v1) * v2 - inverse(u2, v2) * v1) % modulus == 0


class _BoundaryClasses:
    """Cusp classes of the sign quotient, where [x] = sign * [-x]."""

    def __init__(self, N: int, sign: int):
        self.N = N
        self.sign = sign
        self.reps: List[Cusp] = []
        self.killed: set = set()

    def coefficient(self, cusp: Cusp) -> Tuple[int, int]:
        negated = _cusp(-cusp[0], cusp[1])
        for i, rep in enumerate(self.reps):
            if cusps_equivalent(cusp, rep, self.N):
                return i, 0 if i in self.killed else 1
            if cusps_equivalent(negated, rep, self.N):
                return i, 0 if i in self.killed else self.sign
        self.reps.append(cusp)
        i = len(self.reps) - 1
        if self.sign == -1 and cusps_equivalent(cusp, negated, self.N):
            self.killed.add(i)
            return i, 0
        return i, 1


@dataclass
class ManinSymbolSpace:
    """
    The quotient presentation for one sign.

    `free` lists the P^1 indices of the free generators; `coords[i]` expresses the
    Manin symbol with P^1 index i in those generators. `cuspidal_basis` is an echelon
    basis of the cuspidal subspace in the same coordinates.
    """

    N: int
    sign: int
    p1: P1List
    free: Tuple[int, ...]
    coords: Tuple[Coords, ...]
    cuspidal_basis: Tuple[Tuple[Fraction, ...], ...] = ()
    _hecke: Dict[int, SparseMatrixQ] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.free)

    @property
    def cuspidal_dimension(self) -> int:
        return len(self.cuspidal_basis)

    def coordinates(self, c: int, d: int) -> Coords:
        """Coordinates of (c : d), empty when gcd(c, d, N) > 1."""
        if not self.p1.contains(c, d):
            return {}
        return self.coords[self.p1.index(c, d)]

    def image_of(self, symbols: Dict[int, Fraction]) -> Tuple[Fraction, ...]:
        """Coordinates of a formal combination {p1 index: coefficient}."""
        out = [Fraction(0)] * self.dimension
        for i, x in symbols.items():
            for k, v in self.coords[i].items():
                out[k] += x * v
        return tuple(out)

    def hecke_on_quotient(self, ell: int) -> SparseMatrixQ:
        """T_ell (U_ell when ell | N) on the whole quotient; column k is the image of generator k."""
        if ell not in self._hecke:
            values: Dict[Tuple[int, int], Fraction] = {}
            for col, i in enumerate(self.free):
                c, d = self.p1[i].pair
                for a, b, cc, dd in heilbronn_matrices(ell):
                    for row, v in self.coordinates(c * a + d * cc, c * b + d * dd).items():
                        values[(row, col)] = values.get((row, col), Fraction(0)) + v
            self._hecke[ell] = SparseMatrixQ.from_dict(self.dimension, self.dimension, values)
        return self._hecke[ell]


def _relation_matrix(p1: P1List, sign: int) -> SparseMatrixQ:
    n = len(p1)
    values: Dict[Tuple[int, int], Fraction] = {}

    def add(row, col, v):
        values[(row, col)] = values.get((row, col), Fraction(0)) + v

    for x in p1:
        c, d = x.pair
        i = x.index
        add(3 * i, i, 1)
        add(3 * i, p1.index(d, -c), 1)
        add(3 * i + 1, i, 1)
        add(3 * i + 1, p1.index(d, -c - d), 1)
        add(3 * i + 1, p1.index(-c - d, c), 1)
        add(3 * i + 2, i, 1)
        add(3 * i + 2, p1.index(-c, d), -sign)
    return SparseMatrixQ.from_dict(3 * n, n, values)


def _boundary_matrix(space: ManinSymbolSpace) -> SparseMatrixQ:
    classes = _BoundaryClasses(space.N, space.sign)
    values: Dict[Tuple[int, int], Fraction] = {}
    for col, i in enumerate(space.free):
        a, b, c, d = lift_to_sl2(*space.p1[i].pair, space.N)
        for cusp, weight in ((_cusp(a, c), 1), (_cusp(b, d), -1)):
            row, coeff = classes.coefficient(cusp)
            if coeff:
                values[(row, col)] = values.get((row, col), Fraction(0)) + weight * coeff
    log.debug(f"{len(classes.reps)} cusp classes at level {space.N}, {len(classes.killed)} killed by the sign")
    return SparseMatrixQ.from_dict(max(len(classes.reps), 1), space.dimension, values)


def build_space(N: int, sign: int) -> ManinSymbolSpace:
    """Quotient by the Manin relations and the star involution, with its cuspidal subspace."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    p1 = P1List(N)
    rows, pivots = row_reduce(_relation_matrix(p1, sign))
    pivot_set = set(pivots)
    free = tuple(i for i in range(len(p1)) if i not in pivot_set)
    position = {f: k for k, f in enumerate(free)}

    coords: List[Optional[Coords]] = [None] * len(p1)
    for f, k in position.items():
        coords[f] = {k: Fraction(1)}
    for row, pc in zip(rows, pivots):
        coords[pc] = {position[f]: -v for f, v in row.items() if f != pc}

    space = ManinSymbolSpace(N, sign, p1, free, tuple(coords))
    space.cuspidal_basis = tuple(kernel_basis(_boundary_matrix(space)))
    log.info(f"Modular symbols at level {N}, sign {sign:+d}: dimension {space.dimension}, "
             f"cuspidal {space.cuspidal_dimension}")
    return space


def hecke_matrix(space: ManinSymbolSpace, ell: int) -> SparseMatrixQ:
    """T_ell on the cuspidal subspace, in the echelon basis `space.cuspidal_basis`."""
    basis = space.cuspidal_basis
    pivots = [next(k for k, x in enumerate(v) if x) for v in basis]
    t = space.hecke_on_quotient(ell)
    values = {}
    for col, v in enumerate(basis):
        image = t.apply(v)
        for row, pc in enumerate(pivots):
            if image[pc]:
                values[(row, col)] = image[pc]
    return SparseMatrixQ.from_dict(len(basis), len(basis), values)


def cuspidal_dimension(N: int, sign: int = 1) -> int:
    """dim S_2(Gamma0(N)) as seen in the sign quotient; equals the genus of X_0(N)."""
    return build_space(N, sign).cuspidal_dimension
