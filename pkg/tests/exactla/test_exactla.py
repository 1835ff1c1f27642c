"""
Exact linear algebra tests

Kernels, continued-fraction convergents and rational reconstruction over Q.

Functions:
    test_kernel_basis_examples():
        Checks the documented kernel examples, including echelon normalisation
    test_kernel_vectors_are_exact():
        Multiplies kernel vectors back into random integer matrices
    test_convergents_are_unimodular():
        Checks p_k q_{k-1} - p_{k-1} q_k = +-1 on random rationals
    test_rational_reconstruct_*():
        Reconstruction successes and the NoReconstruction failure
"""

import random
from fractions import Fraction

import mpmath
import pytest

from padic_ell.errors import NoReconstruction, PrecisionError
from padic_ell.exactla import (
    SparseMatrixQ,
    contfrac_convergents,
    kernel_basis,
    rational_reconstruct,
    row_reduce,
)
from padic_ell.utils.log import log


def test_kernel_basis_examples():
    assert kernel_basis(SparseMatrixQ.from_dense([[1, 1], [1, 1]])) == [(Fraction(1), Fraction(-1))]
    assert kernel_basis(SparseMatrixQ.identity(3)) == []
    assert kernel_basis(SparseMatrixQ.from_dense([[2, 4]])) == [(Fraction(1), Fraction(-1, 2))]


def test_kernel_of_empty_relation_set_is_everything():
    basis = kernel_basis(SparseMatrixQ(0, 2))
    assert basis == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]


def test_kernel_vectors_are_exact():
    rng = random.Random(17)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(2, 7)
        dense = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        m = SparseMatrixQ.from_dense(dense)
        basis = kernel_basis(m)
        rank = len(row_reduce(m)[1])
        assert len(basis) == cols - rank
        for v in basis:
            assert all(x == 0 for x in m.apply(v))
            leading = next(x for x in v if x != 0)
            assert leading == 1


def test_sparse_matrix_rejects_duplicates():
    with pytest.raises(ValueError):
        SparseMatrixQ(2, 2, ((0, 0, Fraction(1)), (0, 0, Fraction(2))))
    with pytest.raises(IndexError):
        SparseMatrixQ(2, 2, ((2, 0, Fraction(1)),))


def test_sparse_matrix_product_and_zero_entries():
    a = SparseMatrixQ.from_dense([[1, 2], [0, 1]])
    b = SparseMatrixQ.from_dense([[1, -2], [0, 1]])
    assert (a @ b).to_dense() == SparseMatrixQ.identity(2).to_dense()
    assert (a - a).is_zero()
    assert SparseMatrixQ.from_dense([[0, 0]]).entries == ()


def test_contfrac_examples():
    assert contfrac_convergents(Fraction(3, 7)) == [Fraction(0), Fraction(1, 2), Fraction(3, 7)]
    assert contfrac_convergents(0) == [Fraction(0)]
    assert contfrac_convergents(5) == [Fraction(5)]


def test_convergents_are_unimodular():
    rng = random.Random(3)
    for _ in range(1000):
        r = Fraction(rng.randint(-10 ** 4, 10 ** 4), rng.randint(1, 10 ** 4))
        convergents = contfrac_convergents(r)
        assert convergents[-1] == r
        prev_p, prev_q = 1, 0
        for c in convergents:
            assert abs(c.numerator * prev_q - prev_p * c.denominator) == 1
            prev_p, prev_q = c.numerator, c.denominator


def test_rational_reconstruct_examples():
    assert rational_reconstruct("0.2000000", Fraction(1, 10 ** 6), 10) == Fraction(1, 5)
    assert rational_reconstruct("0.3333333", Fraction(1, 10 ** 6), 10) == Fraction(1, 3)
    with pytest.raises(NoReconstruction):
        rational_reconstruct("0.1234567", Fraction(1, 10 ** 7), 3)


def test_no_reconstruction_is_a_precision_error():
    assert issubclass(NoReconstruction, PrecisionError)


def test_rational_reconstruct_random():
    rng = random.Random(11)
    bound = 1000
    eps = Fraction(1, 4 * bound * bound)
    for _ in range(200):
        q = rng.randint(1, bound)
        p = rng.randint(-5 * q, 5 * q)
        x = float(Fraction(p, q))
        assert rational_reconstruct(x, eps, bound) == Fraction(p, q)


def test_rational_reconstruct_from_mpf():
    with mpmath.workdps(30):
        x = mpmath.mpf(-2) / 7
        assert rational_reconstruct(x, Fraction(1, 10 ** 20), 10 ** 6) == Fraction(-2, 7)
    log.info("mpf reconstruction handled the sign of the mantissa")
