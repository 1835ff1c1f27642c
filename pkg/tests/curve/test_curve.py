"""
Elliptic curve tests

Functions:
    test_point_count_examples():
        a_l of 11a1 at 2, 5 and 19
    test_an_expansion_examples():
        Leading q-expansion coefficients and the bad prime power rule
    test_reduction_type_examples():
        Split, ordinary, supersingular and additive classification
    test_allowable_roots_examples():
        Hensel root, multiplicative root and the supersingular pair
    test_periods_*():
        AGM periods against known values and the square lattice
    test_l_values():
        Central values and root numbers
"""

import random

import pytest

from padic_ell.curve import (
    CurveData,
    CurveTable,
    ReductionKind,
    allowable_roots,
    an_expansion,
    ap_count,
    get_curve,
    good_primes,
    l_value_numeric,
    parse_curve_text,
    periods,
    reduction_type,
    root_number,
)
from padic_ell.errors import AdditiveReduction, BadPrime, CurveInputError
from padic_ell.padic import PadicQuadExt
from padic_ell.utils.log import log


def test_invariants_of_11a1(e11):
    assert e11.discriminant == -11 ** 5
    assert e11.c4 == 496
    assert e11.ainvs == (0, -1, 1, -10, -20)


def test_curve_input_validation():
    with pytest.raises(CurveInputError):
        CurveData(0, 0, 0, 0, 0, N=1)
    with pytest.raises(CurveInputError):
        CurveData(0, -1, 1, -10, -20, N=13)
    with pytest.raises(CurveInputError):
        parse_curve_text("0,-1,1,-10;11")
    with pytest.raises(CurveInputError):
        get_curve("99z9")
    assert parse_curve_text("0,-1,1,-10,-20;11") == CurveData(0, -1, 1, -10, -20, N=11)


def test_curve_table_lists_bundled_curves():
    labels = CurveTable().labels()
    for label in ("11a1", "14a1", "37a1", "37b1"):
        assert label in labels
    frame = CurveTable().as_frame()
    assert list(frame.columns[:3]) == ["label", "ainvs", "conductor"]


def test_point_count_examples(e11):
    assert ap_count(e11, 2) == -2
    assert ap_count(e11, 5) == 1
    assert ap_count(e11, 19) == 0
    with pytest.raises(BadPrime):
        ap_count(e11, 11)


def test_distinguishing_37a_from_37b(e37):
    e37b = get_curve("37b1")
    assert ap_count(e37, 2) == -2
    assert ap_count(e37, 3) == -3
    assert ap_count(e37b, 2) == 0
    assert ap_count(e37b, 3) == 1


def test_hasse_bound(e11, e37):
    for E in (e11, e37, get_curve("14a1")):
        for ell in good_primes(E, 200):
            assert ap_count(E, ell) ** 2 <= 4 * ell


def test_an_expansion_examples(e11):
    assert an_expansion(e11, 6) == [1, -2, -1, 2, 1, 2]
    assert an_expansion(e11, 1) == [1]
    assert an_expansion(e11, 121)[120] == 1


def test_an_expansion_is_multiplicative(e11, e37):
    rng = random.Random(9)
    for E in (e11, e37):
        a = an_expansion(E, 400)
        for ell in rng.sample(good_primes(E, 200), 20):
            if ell * ell <= 400:
                assert a[ell * ell - 1] == a[ell - 1] ** 2 - ell
            m = rng.randint(2, 400 // ell)
            if m % ell:
                assert a[ell * m - 1] == a[ell - 1] * a[m - 1]


def test_reduction_type_examples(e11):
    info = reduction_type(e11, 11)
    assert (info.kind, info.a_p, info.delta) == (ReductionKind.SPLIT_MULT, 1, 1)
    info = reduction_type(e11, 5)
    assert (info.kind, info.a_p, info.delta) == (ReductionKind.GOOD_ORDINARY, 1, 0)
    info = reduction_type(e11, 19)
    assert (info.kind, info.a_p, info.delta) == (ReductionKind.GOOD_SUPERSINGULAR, 0, 0)
    assert reduction_type(get_curve("14a1"), 7).kind is ReductionKind.SPLIT_MULT
    assert reduction_type(get_curve("27a1"), 3).kind is ReductionKind.ADDITIVE
    with pytest.raises(ValueError):
        reduction_type(e11, 2)


def test_allowable_roots_examples(e11):
    (alpha,) = allowable_roots(e11, 5, 2)
    assert alpha.residue() == 21
    (one,) = allowable_roots(e11, 11, 6)
    assert one == 1
    roots = allowable_roots(e11, 19, 6)
    assert len(roots) == 2
    for root in roots:
        assert isinstance(root, PadicQuadExt)
        assert root * root == -19
    assert roots[0] + roots[1] == 0
    with pytest.raises(AdditiveReduction):
        allowable_roots(get_curve("27a1"), 3, 6)


def test_periods_known_values(e11, e37):
    assert float(periods(e11, 20).omega_plus) == pytest.approx(1.26920930427955, rel=1e-12)
    assert float(periods(e37, 20).omega_plus) == pytest.approx(5.98691729246392, rel=1e-12)


def test_periods_square_lattice():
    E = CurveData(0, 0, 0, -1, 0, N=32)
    data = periods(E, 20)
    assert float(data.omega_plus / data.omega_minus_over_i) == pytest.approx(2.0, rel=1e-15)
    assert data.error < 1e-20


def test_l_values(e11, e37):
    assert float(l_value_numeric(e11, 1, 20)) == pytest.approx(0.253841860855911, rel=1e-12)
    assert root_number(e11) == 1
    assert root_number(e37) == -1
    assert abs(l_value_numeric(e37, 1, 20)) < 1e-8
    # chi_{-7}(-11) = -1, so this twist has odd sign
    assert root_number(e11, -7) == -1
    assert l_value_numeric(e11, -3, 20) > 0
    log.info("central values agree with the known values")


def test_l_value_ratio_is_one_fifth(e11):
    ratio = l_value_numeric(e11, 1, 25) / periods(e11, 25).omega_plus
    assert float(ratio) == pytest.approx(0.2, rel=1e-12)
