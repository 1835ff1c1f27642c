"""Exact arithmetic over Q: rationals, sparse matrices, kernels, continued fractions."""

from .rational import (
    BigRational,
    as_rational,
    contfrac_convergents,
    rational_reconstruct,
)
from .sparse import (
    SparseMatrixQ,
    echelon_basis,
    kernel_basis,
    row_reduce,
)

__all__ = [
    # Classes
    "BigRational",
    "SparseMatrixQ",

    # Functions
    "as_rational",
    "contfrac_convergents",
    "rational_reconstruct",
    "echelon_basis",
    "kernel_basis",
    "row_reduce",
]
