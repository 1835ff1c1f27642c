"""
Power series tests

Functions:
    test_order_vanish_*():
        Certified orders, indeterminate and at-least results
    test_mu_lambda_*():
        Valuation minima and where they are attained
    test_subst_recip_*():
        Closed-form coefficients and the involution property
    test_onepT_power_*():
        Binomial series and the group law
    test_mechanism_suite():
        mu and lambda survive subst_recip and unit factors on random series
    test_verify_thm_*():
        Synthetic series built to satisfy (or violate) the leading-coefficient relations
"""

from fractions import Fraction

import numpy as np
import pytest

from padic_ell.charset import DirichletCharacter
from padic_ell.errors import Indeterminate, NotRealCharacter
from padic_ell.padic import CyclotomicGenerator, PadicNumber
from padic_ell.pseries import (
    AT_LEAST,
    EXACT,
    PadicPowerSeries,
    VARIABLE_S,
    fe_level,
    lambda_invariant,
    log_angle,
    mechanism_suite,
    mu_invariant,
    onepT_power,
    order_vanish,
    random_integral_series,
    subst_recip,
    verify_thm_main_T,
    verify_thm_mains,
)
from padic_ell.utils.log import log

P = 5
PREC = 20


def series(values, p=P, prec=PREC, variable="T"):
    return PadicPowerSeries.from_rationals(values, p, prec, variable)


def test_order_vanish_certified():
    f = PadicPowerSeries(P, (PadicNumber.zero(P, 5), PadicNumber.from_rational(3, P, 5)))
    result = order_vanish(f)
    assert result.m == 1
    assert result.flag == EXACT


def test_order_vanish_indeterminate():
    f = PadicPowerSeries(P, (PadicNumber.zero(P, 5), PadicNumber.zero(P, 3)))
    with pytest.raises(Indeterminate):
        order_vanish(f)
    relaxed = order_vanish(f, strict=False)
    assert relaxed.m == 2
    assert relaxed.flag == AT_LEAST


def test_mu_lambda_basic():
    assert mu_invariant(series([5, 25])).mu == 1
    assert mu_invariant(series([3, 25])).mu == 0
    assert lambda_invariant(series([3, 25])) == 0
    assert lambda_invariant(series([5, 5, 1])) == 2
    assert lambda_invariant(series([0, 0, 0, 5, 0, 1])) == 5


def test_mu_lambda_unit_scaling():
    f = series([25, 50, 125, 5])
    g = f * PadicNumber.from_rational(7, P, PREC)
    assert mu_invariant(f).mu == mu_invariant(g).mu == 1
    assert lambda_invariant(f) == lambda_invariant(g) == 3


def test_mu_not_certified():
    # the zero coefficient could still have valuation 1 < 2
    f = PadicPowerSeries(P, (PadicNumber.zero(P, 1), PadicNumber.from_rational(25, P, PREC)))
    result = mu_invariant(f)
    assert result.mu == 2
    assert not result.certified
    with pytest.raises(Indeterminate):
        lambda_invariant(f)


def test_subst_recip_examples():
    g = subst_recip(series([0, 1, 0, 0, 0, 0]))
    assert g[0] == 0
    for k in range(1, 6):
        assert g[k] == (-1) ** k

    h = subst_recip(series([0, 0, 1, 0, 0]))
    assert [h[k] for k in range(2, 5)] == [1, -2, 3]

    c = subst_recip(series([7, 0, 0]))
    assert c[0] == 7 and c[1] == 0 and c[2] == 0


def test_subst_recip_involution():
    rng = np.random.default_rng(7)
    for _ in range(20):
        f = random_integral_series(rng, P, 7, 10)
        back = subst_recip(subst_recip(f))
        for k in range(f.order):
            assert back[k] == f[k]


def test_onepT_power_integers():
    assert [c for c in onepT_power(0, 4, P, PREC)] == [1, 0, 0, 0]
    assert [c for c in onepT_power(2, 4, P, PREC)] == [1, 2, 1, 0]


def test_onepT_power_group_law():
    rng = np.random.default_rng(11)
    for _ in range(5):
        e = PadicNumber.from_rational(int(rng.integers(1, P ** 10)), P, 15)
        product = onepT_power(e, 6) * onepT_power(-e, 6)
        assert product[0] == 1
        for k in range(1, 6):
            assert product[k].is_zero()


def test_mechanism_suite():
    report = mechanism_suite(P, count=50)
    log.info(f"mechanism: {report.details['checked']} series checked")
    assert report.passed
    assert report.details["checked"] > 0


def test_fe_level():
    assert fe_level(11, 5, 1) == 11
    assert fe_level(14, 7, 1) == 2
    assert fe_level(20, 5, 4) == 1
    assert fe_level(37, 5, 4) == 37


def test_verify_thm_main_T_synthetic():
    gen = CyclotomicGenerator(P, PREC)
    psi = DirichletCharacter.trivial(P)
    e = gen.exponent(PadicNumber.from_rational(11, P, PREC))
    one = PadicNumber.from_rational(1, P, PREC)
    good = PadicPowerSeries(P, (one, -e / 2))
    assert verify_thm_main_T(good, 11, psi, gen).passed

    bad = PadicPowerSeries(P, (one, -e / 2 + 1))
    assert verify_thm_main_T(bad, 11, psi, gen).verdict == "fail"


def test_verify_thm_mains_synthetic():
    # L(1+u) = exp(-u h) (1 + 3u^2) has the required symmetry for m = 0
    psi = DirichletCharacter.trivial(P)
    h = log_angle(11, P, PREC) / 2
    one = PadicNumber.from_rational(1, P, PREC)
    a = (one, -h, h * h / 2 + 3, -(h ** 3) / 6 - h * 3)
    f = PadicPowerSeries(P, a, VARIABLE_S)

    report = verify_thm_mains(f, 11, psi)
    assert report.passed
    assert report.certified_digits >= 3

    general = verify_thm_mains(f, 11, psi, k_max=3)
    assert general.passed
    assert len(general.per_coefficient) == 2


def test_verify_thm_mains_rejects_complex_characters():
    f = PadicPowerSeries(P, tuple(series([1, 1]).coefficients), VARIABLE_S)
    with pytest.raises(NotRealCharacter):
        verify_thm_mains(f, 11, DirichletCharacter(1, 1, P))


def test_series_json_shape():
    f = series([Fraction(1, 5), 0, 3])
    rows = f.to_json()
    assert [r["k"] for r in rows] == [0, 1, 2]
    assert rows[0]["valuation"] == "-1"
    assert rows[1]["valuation"] is None
