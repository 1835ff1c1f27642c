"""
Base change tests

Functions:
    test_build_group_*():
        Closure, degrees and the conductor conditions
    test_character_set_without_conjugates():
        A set missing psi-bar is rejected
    test_sign_of():
        The sign of eps is only read off when its precision decides it
    test_parse_field():
        "K=[...]" syntax
    test_basechange_trivial_field():
        K = Q reproduces the plain series
    test_basechange_gaussian_field():
        11a1 over Q(i) at 5: product, orders and the generalised relations
"""

import pytest

from padic_ell.basechange import (
    AbelianFieldSpec,
    build_group,
    lp_basechange,
    parse_field,
    sign_of,
    verify_generalisations,
)
from padic_ell.charset import DirichletCharacter
from padic_ell.curve import get_curve
from padic_ell.errors import ConductorClash, NonRealGroup
from padic_ell.lpbuild import lp_series
from padic_ell.padic import PadicNumber
from padic_ell.utils.log import log


def test_build_group_quadratic():
    K = build_group([DirichletCharacter(-4, 0, 5)], 5)
    assert K.degree == 2
    assert K.characters[0].is_trivial()
    assert {psi.D for psi in K.characters} == {1, -4}


def test_build_group_biquadratic():
    K = build_group([DirichletCharacter(5, 0, 7), DirichletCharacter(-4, 0, 7)], 7)
    assert K.degree == 4
    assert {psi.D for psi in K.characters} == {1, 5, -4, -20}
    assert K.is_conjugation_closed()


def test_build_group_teichmuller():
    K = build_group([DirichletCharacter(1, 1, 5)], 5)
    assert sorted(psi.j for psi in K.characters) == [0, 1, 2, 3]


def test_build_group_conductor_clash():
    with pytest.raises(ConductorClash):
        build_group([DirichletCharacter(5, 0, 5)], 5)
    with pytest.raises(ConductorClash):
        build_group([DirichletCharacter(-3, 0, 5)], 5, E=get_curve("27a1"))


def test_character_set_without_conjugates():
    trivial = DirichletCharacter.trivial(5)
    omega = DirichletCharacter(1, 1, 5)
    with pytest.raises(NonRealGroup):
        AbelianFieldSpec(5, (trivial, omega))
    assert AbelianFieldSpec(5, (trivial, omega, DirichletCharacter(1, 3, 5))).degree == 3


def test_sign_of():
    assert sign_of(PadicNumber.from_rational(1, 5, 10)) == 1
    assert sign_of(PadicNumber.from_rational(-1, 5, 10)) == -1
    assert sign_of(PadicNumber.from_rational(3, 5, 10)) is None
    assert sign_of(PadicNumber.from_rational(1, 5, 0)) is None


def test_parse_field():
    assert parse_field("K=[kron:-4]", 5).degree == 2
    assert parse_field("[kron:5, kron:-4]", 7).degree == 4
    assert parse_field("Q", 5).degree == 1
    assert parse_field("K=[]", 5).degree == 1
    with pytest.raises(ValueError):
        parse_field("[nonsense]", 5)


def test_basechange_trivial_field(e11, maps_11a1):
    K = parse_field("Q", 5)
    bc = lp_basechange(e11, 5, None, K, n=3, t_order=3)
    plain = lp_series(e11, 5, n=3, t_order=3)
    for k in range(4):
        assert bc.series[k] == plain.series[k]


def test_basechange_gaussian_field(e11, maps_11a1):
    K = parse_field("K=[kron:-4]", 5, e11)
    bc = lp_basechange(e11, 5, None, K, n=5, t_order=3)
    factors = list(bc.factors.values())
    assert len(factors) == 2
    product = factors[0].series * factors[1].series
    for k in range(4):
        assert bc.series[k] == product[k]

    report = verify_generalisations(bc)
    log.info(f"11a1 over Q(i): {report.details['verdicts']}, {report.certified_digits} digit(s)")
    assert report.inputs["Q"] == {"triv": 11, "kron:-4": 11}
    assert report.passed
    assert report.details["order_additive"]
    assert report.details["sign_matches_order"]
