"""
Verification of the functional equation and its consequences on computed series.

Each checker compares two sides coefficient by coefficient at their joint precision and
returns a VerificationReport; a coefficient known to no digit above the floor is marked
indeterminate instead of being counted as agreement.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from sympy import primefactors

from padic_ell.charset import DirichletCharacter, char_bar, char_eval
from padic_ell.errors import Indeterminate, NotOrdinary, NotRealCharacter, PrecisionExhausted
from padic_ell.modsym import atkin_lehner_sign
from padic_ell.padic import INFINITE, CyclotomicGenerator, PadicNumber, angle_part, plog
from padic_ell.pseries.invariants import lambda_invariant, mu_invariant, order_vanish
from padic_ell.pseries.series import (
    PadicPowerSeries,
    VARIABLE_S,
    VARIABLE_T,
    certified_nonzero,
    coefficient_precision,
    coefficient_valuation,
    onepT_power,
    subst_recip,
)
from padic_ell.utils.log import log

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"


@dataclass
class CoefficientCheck:
    k: int
    lhs: str
    rhs: str
    agree_digits: object
    certified_digits: object
    status: str

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "agree_digits": str(self.agree_digits),
            "certified_digits": str(self.certified_digits),
            "status": self.status,
        }


@dataclass
class VerificationReport:
    check: str
    inputs: dict
    per_coefficient: List[CoefficientCheck] = field(default_factory=list)
    verdict: str = INDETERMINATE
    certified_digits: object = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "inputs": self.inputs,
            "per_coefficient": [c.to_json() for c in self.per_coefficient],
            "verdict": self.verdict,
            "certified_digits": str(self.certified_digits),
            "details": self.details,
        }


def _digits(prec, floor):
    if prec == INFINITE:
        return INFINITE
    return max(Fraction(0), Fraction(prec) - floor)


def compare_coefficient(k: int, lhs, rhs, floor) -> CoefficientCheck:
    diff = lhs - rhs
    joint = min(coefficient_precision(lhs), coefficient_precision(rhs))
    certified = _digits(joint, floor)
    if certified == 0:
        return CoefficientCheck(k, str(lhs), str(rhs), 0, 0, INDETERMINATE)
    if diff.is_zero():
        return CoefficientCheck(k, str(lhs), str(rhs), certified, certified, PASS)
    return CoefficientCheck(k, str(lhs), str(rhs), _digits(diff.valuation(), floor), certified, FAIL)


def finish_report(report: VerificationReport) -> VerificationReport:
    """Verdict and certified digits from the entries; nothing certified raises."""
    decided = [c for c in report.per_coefficient if c.status != INDETERMINATE]
    if not decided:
        raise PrecisionExhausted(f"{report.check}: no coefficient has a certified digit")
    report.verdict = FAIL if any(c.status == FAIL for c in decided) else PASS
    report.certified_digits = min(c.certified_digits for c in decided)
    log.info(f"{report.check}: {report.verdict} ({len(decided)} coefficient(s), {report.certified_digits} digit(s))")
    return report


def fe_level(N: int, p: int, M: int) -> int:
    """Largest divisor Q of N prime to pM."""
    Q = N
    for q in {p, *primefactors(M)}:
        while Q % q == 0:
            Q //= q
    return Q


def log_angle(Q: int, p: int, prec: int) -> PadicNumber:
    """log <Q>."""
    return plog(angle_part(PadicNumber.from_rational(Q, p, prec)))


def _real_sign(psi: DirichletCharacter, x: int) -> int:
    value = char_eval(psi, x, 10)
    return 1 if value == 1 else -1


def _working_prec(f: PadicPowerSeries) -> int:
    finite = [c for c in f.precisions() if c != INFINITE]
    return int(max(finite)) + 5 if finite else 20


def _require_real(psi: DirichletCharacter) -> None:
    if not psi.is_real():
        raise NotRealCharacter(f"{psi} is not real valued")


def fe_sign(c_Q: int, psi: DirichletCharacter, Q: int, prec: int):
    """-c_Q psi-bar(-Q), as an element of Z_p."""
    return char_eval(char_bar(psi), -Q, prec) * (-c_Q)


def _context_data(approx):
    ctx = approx.context
    Q = fe_level(ctx.E.N, ctx.p, ctx.M)
    c_Q = atkin_lehner_sign(ctx.symbols, Q)
    return ctx, Q, c_Q


def fe_rhs_T(approx_bar, Q: int, c_Q: int, psi: DirichletCharacter) -> PadicPowerSeries:
    """-c_Q psi-bar(-Q) (1+T)^(-e) L(psi-bar, (1+T)^-1 - 1), e = log<Q>/log kappa."""
    ctx = approx_bar.context
    series = approx_bar.series
    e = ctx.gen.exponent(PadicNumber.from_rational(Q, ctx.p, ctx.prec))
    unit = onepT_power(-e, series.order)
    sign = fe_sign(c_Q, psi, Q, ctx.prec)
    return (subst_recip(series) * unit) * sign


def verify_fe_T(approx, approx_bar) -> VerificationReport:
    """
    L(psi, T) = -c_Q psi-bar(-Q) (1+T)^(-e) L(psi-bar, (1+T)^-1 - 1), coefficientwise.

    Raises:
        PrecisionExhausted: when no coefficient has a certified digit.
    """
    ctx, Q, c_Q = _context_data(approx)
    if approx_bar.context.psi != char_bar(ctx.psi):
        raise ValueError(f"second series is for {approx_bar.context.psi}, expected {char_bar(ctx.psi)}")
    rhs = fe_rhs_T(approx_bar, Q, c_Q, ctx.psi)
    lhs = approx.series
    floor = min(lhs.floor, rhs.floor)
    report = VerificationReport(
        "fe",
        {"curve": ctx.E.name, "p": ctx.p, "psi": ctx.psi.to_text(), "level": approx.level, "Q": Q, "c_Q": c_Q},
    )
    for k in range(min(lhs.order, rhs.order)):
        report.per_coefficient.append(compare_coefficient(k, lhs[k], rhs[k], floor))
    return finish_report(report)


def verify_fe_s(approx, approx_bar, series_s: Optional[PadicPowerSeries] = None,
                series_bar_s: Optional[PadicPowerSeries] = None) -> VerificationReport:
    """
    (-1)^i a_i(psi) = -c_Q psi-bar(-Q) sum_{j <= i} (log<Q>)^(i-j)/(i-j)! a_j(psi-bar).
    """
    from padic_ell.lpbuild import taylor_at_1

    ctx, Q, c_Q = _context_data(approx)
    a = series_s if series_s is not None else taylor_at_1(approx)
    b = series_bar_s if series_bar_s is not None else taylor_at_1(approx_bar)
    ell = log_angle(Q, ctx.p, ctx.prec)
    sign = fe_sign(c_Q, ctx.psi, Q, ctx.prec)
    floor = min(a.floor, b.floor)
    report = VerificationReport(
        "fe-s",
        {"curve": ctx.E.name, "p": ctx.p, "psi": ctx.psi.to_text(), "level": approx.level, "Q": Q, "c_Q": c_Q},
    )
    for i in range(min(a.order, b.order)):
        lhs = a[i] if i % 2 == 0 else -a[i]
        rhs = b[i]
        for j in range(i):
            rhs = rhs + b[j] * (ell ** (i - j) / math.factorial(i - j))
        report.per_coefficient.append(compare_coefficient(i, lhs, rhs * sign, floor))
    return finish_report(report)


def verify_thm_mains(series_s: PadicPowerSeries, Q: int, psi: DirichletCharacter,
                     k_max: int = 1, m: Optional[int] = None) -> VerificationReport:
    """
    For real psi with L_p of order m at s = 1, and every odd k <= k_max:

        a_{m+k} = -sum_{i<k} (log<Q>/2)^(k-i)/(k-i)! a_{m+i}

    k = 1 is a_{m+1} = -1/2 log<Q> a_m.

    Raises:
        NotRealCharacter: for a non-real psi.
        PrecisionExhausted: when no relation can be checked to a digit.
    """
    _require_real(psi)
    if series_s.variable != VARIABLE_S:
        raise ValueError("expected the Taylor series at s = 1")
    if k_max < 1 or k_max % 2 == 0:
        raise ValueError(f"k_max must be odd and positive, got {k_max}")
    p = series_s.p
    if m is None:
        m = order_vanish(series_s).m
    half = log_angle(Q, p, _working_prec(series_s)) / 2

    report = VerificationReport(
        "mains" if k_max == 1 else "mains-general",
        {"p": p, "Q": Q, "psi": psi.to_text(), "m": m, "k_max": k_max},
    )
    for k in range(1, k_max + 1, 2):
        if m + k >= series_s.order:
            break
        rhs = None
        for i in range(k):
            term = series_s[m + i] * (half ** (k - i) / math.factorial(k - i))
            rhs = term if rhs is None else rhs + term
        report.per_coefficient.append(compare_coefficient(m + k, series_s[m + k], -rhs, series_s.floor))
    if m < series_s.order and certified_nonzero(series_s[m]):
        report.details["leading_valuation"] = str(coefficient_valuation(series_s[m]))
    return finish_report(report)


def verify_thm_main_T(series_T: PadicPowerSeries, Q: int, psi: DirichletCharacter, gen: CyclotomicGenerator,
                      m: Optional[int] = None, series_s: Optional[PadicPowerSeries] = None) -> VerificationReport:
    """
    c_{m+1} = -(c_m/2)(log<Q>/log kappa + m); with series_s also a_m = c_m (log kappa)^m.
    """
    _require_real(psi)
    if series_T.variable != VARIABLE_T:
        raise ValueError("expected a series in T")
    if m is None:
        m = order_vanish(series_T).m
    if m + 1 >= series_T.order:
        raise PrecisionExhausted(f"order {m} leaves no coefficient to compare")
    e = gen.exponent(PadicNumber.from_rational(Q, gen.p, gen.prec))
    report = VerificationReport("main-T", {"p": gen.p, "Q": Q, "psi": psi.to_text(), "m": m})
    rhs = -(series_T[m] * (e + m)) / 2
    report.per_coefficient.append(compare_coefficient(m + 1, series_T[m + 1], rhs, series_T.floor))
    if series_s is not None and m < series_s.order:
        cross = compare_coefficient(m, series_s[m], series_T[m] * gen.log_kappa ** m, min(series_s.floor, series_T.floor))
        report.details["cross_variable"] = cross.to_json()
        report.per_coefficient.append(cross)
    return finish_report(report)


def verify_parity(approx, root_number: Optional[int] = None) -> VerificationReport:
    """
    (-1)^m = -c_Q psi(-Q) for real psi, with m certified from the T-series, and
    w_E = -c_N against the root number when one is supplied.
    """
    ctx, Q, c_Q = _context_data(approx)
    _require_real(ctx.psi)
    order = order_vanish(approx.series, strict=False)
    expected = -c_Q * _real_sign(ctx.psi, -Q)
    report = VerificationReport(
        "parity",
        {"curve": ctx.E.name, "p": ctx.p, "psi": ctx.psi.to_text(), "level": approx.level, "Q": Q, "c_Q": c_Q},
        details={"m": order.m, "order_flag": order.flag, "sign": expected},
    )
    if root_number is not None:
        c_N = atkin_lehner_sign(ctx.symbols, ctx.E.N)
        report.details.update({"c_N": c_N, "root_number": root_number, "w_E_matches": root_number == -c_N})
    if not order.exact:
        report.verdict = INDETERMINATE
        return report
    ok = (-1) ** order.m == expected and report.details.get("w_E_matches", True)
    report.verdict = PASS if ok else FAIL
    report.certified_digits = order.digits
    log.info(f"parity for {ctx.E.name} at {ctx.p}: m = {order.m}, sign {expected:+d}: {report.verdict}")
    return report


def verify_mu_bar(E, p: int, psi: DirichletCharacter, n: Optional[int] = None, t_order: Optional[int] = None,
                  approx=None, approx_bar=None) -> VerificationReport:
    """
    mu(L(psi)) = mu(L(psi-bar)), together with the invariance of mu under subst_recip and
    under multiplication by (1+T)^e on the computed series.

    Raises:
        NotOrdinary: unless p is ordinary or multiplicative for E.
        Indeterminate: when mu is not certified on either side.
    """
    from padic_ell.lpbuild import lp_series

    if approx is None:
        approx = lp_series(E, p, psi=psi, n=n, t_order=t_order)
    if approx.context.supersingular:
        raise NotOrdinary(f"{E.name} is supersingular at {p}; valuation minima are not mu-invariants")
    bar = char_bar(psi)
    if approx_bar is None:
        approx_bar = approx if bar == psi else lp_series(E, p, psi=bar, n=approx.level, t_order=approx.t_order)

    mu, mu_bar = mu_invariant(approx.series), mu_invariant(approx_bar.series)
    if not (mu.certified and mu_bar.certified):
        raise Indeterminate(f"mu not certified (psi: {mu.certified}, psi-bar: {mu_bar.certified})")

    gen = approx.context.gen
    unit = onepT_power(gen.exponent(PadicNumber.from_rational(2, p, gen.prec)), approx.series.order)
    mechanism = {
        "subst_recip": mu_invariant(subst_recip(approx.series)).mu == mu.mu,
        "unit_factor": mu_invariant(approx.series * unit).mu == mu.mu,
    }
    report = VerificationReport(
        "mu-bar",
        {"curve": E.name, "p": p, "psi": psi.to_text(), "level": approx.level},
        details={"mu": str(mu.mu), "mu_bar": str(mu_bar.mu), "mechanism": mechanism},
    )
    ok = mu.mu == mu_bar.mu and all(mechanism.values())
    report.verdict = PASS if ok else FAIL
    report.certified_digits = min(approx.series.certified_digits(k) for k in range(approx.series.order))
    log.info(f"mu-bar for {E.name} at {p}, psi={psi}: mu = {mu.mu}, mu-bar = {mu_bar.mu}: {report.verdict}")
    return report


def random_integral_series(rng: np.random.Generator, p: int, order: int, prec: int) -> PadicPowerSeries:
    """Integral series with random coefficients; some are pushed to higher valuation."""
    values = []
    for _ in range(order):
        unit = int(rng.integers(0, p ** prec))
        shift = int(rng.integers(0, 3))
        values.append(unit * p ** shift % p ** prec)
    return PadicPowerSeries.from_rationals(values, p, prec)


def mechanism_suite(p: int, count: int = 50, order: int = 6, prec: int = 12, seed: int = 0) -> VerificationReport:
    """
    mu and lambda are preserved by subst_recip and by multiplication with (1+T)^e on
    `count` random integral series.
    """
    rng = np.random.default_rng(seed)
    failures = []
    checked = 0
    for trial in range(count):
        f = random_integral_series(rng, p, order, prec)
        try:
            mu, lam = mu_invariant(f), lambda_invariant(f)
        except Indeterminate:
            continue
        e = PadicNumber.from_rational(int(rng.integers(1, p ** prec)), p, prec)
        for name, g in (("subst_recip", subst_recip(f)), ("unit_factor", f * onepT_power(e, order))):
            try:
                preserved = mu_invariant(g).mu == mu.mu and lambda_invariant(g) == lam
            except Indeterminate:
                preserved = False
            if not preserved:
                failures.append({"trial": trial, "map": name})
        checked += 1
    report = VerificationReport(
        "mechanism",
        {"p": p, "count": count, "order": order, "seed": seed},
        details={"checked": checked, "failures": failures},
    )
    report.verdict = PASS if checked and not failures else FAIL
    report.certified_digits = prec
    return report


def check_names() -> Sequence[str]:
    return ("fe", "fe-s", "mains", "mains-general", "main-T", "mu-bar", "parity", "basechange")
