"""
Sparse matrices over Q and exact kernels.

Elimination is delegated to sympy's `DomainMatrix` over `QQ`. Matrices with more than
`DENSE_COLUMN_LIMIT` columns stay in sympy's sparse (SDM) format, whose Gauss-Jordan
routine only touches nonzero entries; smaller ones are converted to the dense format.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from padic_ell.utils.const import DENSE_COLUMN_LIMIT

Entry = Tuple[int, int, Fraction]
Vector = Tuple[Fraction, ...]


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class SparseMatrixQ:
    """
    Immutable sparse matrix over Q.

    Entries are kept sorted by (row, col); zeros are dropped and duplicate
    positions rejected.
    """

    rows: int
    cols: int
    entries: Tuple[Entry, ...] = ()

    def __post_init__(self):
        seen = set()
        cleaned = []
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))
            v = Fraction(v)
            if v:
                cleaned.append((r, c, v))
        object.__setattr__(self, "entries", tuple(sorted(cleaned, key=lambda e: (e[0], e[1]))))

    # Constructors

    @classmethod
    def from_dict(cls, rows: int, cols: int, values: Dict[Tuple[int, int], Fraction]) -> "SparseMatrixQ":
        return cls(rows, cols, tuple((r, c, v) for (r, c), v in values.items()))

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrixQ":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, tuple(
            (r, c, Fraction(v)) for r, row in enumerate(data) for c, v in enumerate(row) if v
        ))

    @classmethod
    def from_rows(cls, vectors: Sequence[Sequence], cols: int = None) -> "SparseMatrixQ":
        """Stack vectors as the rows of a matrix."""
        if cols is None:
            cols = len(vectors[0]) if vectors else 0
        return cls(len(vectors), cols, tuple(
            (r, c, Fraction(v)) for r, vec in enumerate(vectors) for c, v in enumerate(vec) if v
        ))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrixQ":
        return cls(n, n, tuple((i, i, Fraction(1)) for i in range(n)))

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "SparseMatrixQ":
        rows, cols = dm.shape
        return cls(rows, cols, tuple((r, c, _from_qq(v)) for (r, c), v in dm.to_dok().items()))

    # Conversions

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_dict(self) -> Dict[Tuple[int, int], Fraction]:
        return {(r, c): v for r, c, v in self.entries}

    def to_dense(self) -> List[List[Fraction]]:
        data = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            data[r][c] = v
        return data

    def to_domain_matrix(self) -> DomainMatrix:
        dok = {(r, c): _to_qq(v) for r, c, v in self.entries}
        dm = DomainMatrix.from_dok(dok, (self.rows, self.cols), QQ)
        if self.cols <= DENSE_COLUMN_LIMIT:
            dm = dm.to_dense()
        return dm

    def row(self, i: int) -> Vector:
        out = [Fraction(0)] * self.cols
        for r, c, v in self.entries:
            if r == i:
                out[c] = v
        return tuple(out)

    def column(self, j: int) -> Vector:
        out = [Fraction(0)] * self.rows
        for r, c, v in self.entries:
            if c == j:
                out[r] = v
        return tuple(out)

    # Arithmetic

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrixQ":
        return SparseMatrixQ(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries))

    def __matmul__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrixQ.from_domain_matrix(self.to_domain_matrix().to_sparse() * other.to_domain_matrix().to_sparse())

    def __add__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        total = self.to_dict()
        for r, c, v in other.entries:
            total[(r, c)] = total.get((r, c), Fraction(0)) + v
        return SparseMatrixQ.from_dict(self.rows, self.cols, total)

    def __neg__(self) -> "SparseMatrixQ":
        return SparseMatrixQ(self.rows, self.cols, tuple((r, c, -v) for r, c, v in self.entries))

    def __sub__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        return self + (-other)

    def scale(self, x) -> "SparseMatrixQ":
        x = Fraction(x)
        return SparseMatrixQ(self.rows, self.cols, tuple((r, c, v * x) for r, c, v in self.entries))

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = [Fraction(0)] * self.rows
        for r, c, v in self.entries:
            if vector[c]:
                out[r] += v * vector[c]
        return tuple(out)

    def apply_left(self, vector: Sequence) -> Vector:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = [Fraction(0)] * self.cols
        for r, c, v in self.entries:
            if vector[r]:
                out[c] += vector[r] * v
        return tuple(out)


def row_reduce(m: SparseMatrixQ) -> Tuple[List[Dict[int, Fraction]], Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Returns the nonzero rows as {column: value} dictionaries together with the pivot
    columns; row i has a 1 in column pivots[i] and zeros in every other pivot column.
    """
    if m.rows == 0 or m.is_zero():
        return [], ()
    reduced, pivots = m.to_domain_matrix().rref()
    dok = reduced.to_dok()
    rows: List[Dict[int, Fraction]] = [dict() for _ in pivots]
    for (r, c), v in dok.items():
        if r < len(pivots) and v:
            rows[r][c] = _from_qq(v)
    return rows, tuple(pivots)


def kernel_basis(m: SparseMatrixQ) -> List[Vector]:
    """
    Basis of {v : m v = 0}, in reduced echelon form with leading coefficient 1.

    An injective map gives an empty list.
    """
    rows, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    if not free:
        return []

    raw: List[List[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            if f in row:
                v[pc] = -row[f]
        raw.append(v)

    return echelon_basis(raw, m.cols)


def echelon_basis(vectors: Iterable[Sequence], cols: int) -> List[Vector]:
    """Canonical reduced echelon basis of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    rows, pivots = row_reduce(SparseMatrixQ.from_rows(vectors, cols))
    basis = []
    for row in rows:
        v = [Fraction(0)] * cols
        for c, x in row.items():
            v[c] = x
        basis.append(tuple(v))
    return basis
