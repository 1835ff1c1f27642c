"""
Acceptance harness for padic-ell.

Runs the end-to-end criteria on the bundled curves: interpolation, the functional
equations, the leading-coefficient relations in s and in T, the three-term recursion,
mu of a character against its inverse, base change to Q(i), parity, the structural
suites and the supersingular smoke test.

Run directly with `python tests/acceptance/acceptance_tests.py` or through
`tests/run_all_tests.py`.
"""

import os
import random
import sys
from fractions import Fraction
from typing import Dict, Tuple

# Add the project root to the path to make imports work when running directly
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

import numpy as np

from padic_ell.basechange import lp_basechange, parse_field, verify_generalisations
from padic_ell.charset import DirichletCharacter, parse_character
from padic_ell.curve import get_curve, root_number
from padic_ell.lpbuild import (
    LpApproximation,
    choose_alpha,
    interpolation_check,
    lp_series,
    measure_context,
    measure_value,
    taylor_at_1,
)
from padic_ell.modsym import symbol_maps
from padic_ell.pseries import (
    certified_nonzero,
    fe_level,
    mechanism_suite,
    order_vanish,
    random_integral_series,
    subst_recip,
    verify_fe_T,
    verify_mu_bar,
    verify_parity,
    verify_thm_main_T,
    verify_thm_mains,
)
from padic_ell.utils.log import log
from tests.async_harness import AsyncTestHarness

# (curve, p, level); p = 3 needs one more level for two digits at T^4
FE_CASES = (("11a1", 5, 4), ("11a1", 3, 5), ("37a1", 5, 4), ("14a1", 7, 4))
LEADING_LEVEL = 5


class AcceptanceTests(AsyncTestHarness):
    """End-to-end checks on the bundled curves."""

    def __init__(self):
        super().__init__("padic-ell Acceptance")
        self._series: Dict[Tuple[str, int, int, str, int], LpApproximation] = {}

    def series(self, label: str, p: int, n: int, psi: str = "triv", t_order: int = 4) -> LpApproximation:
        key = (label, p, n, psi, t_order)
        if key not in self._series:
            E = get_curve(label)
            character = parse_character(psi, p)
            self._series[key] = lp_series(E, p, psi=character, n=n, t_order=t_order)
        return self._series[key]

    def interpolation(self) -> bool:
        approx = self.series("11a1", 5, 4)
        alpha_ok = approx.alpha.residue() % 25 == 21
        digits = interpolation_check(approx)
        expected = (1 - approx.alpha ** -1) ** 2 * Fraction(1, 5)
        log.info(f"alpha = {approx.alpha}, constant term to {digits} digit(s)")
        return alpha_ok and digits >= 3 and approx.series[0] == expected

    def functional_equation(self) -> bool:
        ok = True
        for label, p, n in FE_CASES:
            report = verify_fe_T(self.series(label, p, n), self.series(label, p, n))
            log.info(f"{label} at {p}: {report.verdict}, {report.certified_digits} digit(s)")
            ok = ok and report.passed and report.certified_digits >= 2 and len(report.per_coefficient) == 5
        return ok

    def _leading(self, label: str, k_max: int):
        approx = self.series(label, 5, LEADING_LEVEL)
        m = order_vanish(approx.series).m
        series_s = taylor_at_1(approx, order=m + k_max + 1)
        Q = fe_level(approx.context.E.N, 5, 1)
        return approx, m, series_s, Q

    def leading_relation_s(self) -> bool:
        ok = True
        for label, expected_m in (("11a1", 0), ("37a1", 1)):
            approx, m, series_s, Q = self._leading(label, 1)
            report = verify_thm_mains(series_s, Q, approx.psi, m=m)
            log.info(f"{label}: m = {m}, v(a_m) = {report.details.get('leading_valuation')}, "
                     f"{report.verdict}, {report.certified_digits} digit(s)")
            ok = ok and m == expected_m and report.passed and report.certified_digits >= 3
        c0_11 = self.series("11a1", 5, LEADING_LEVEL).series[0]
        rank_one = self.series("37a1", 5, LEADING_LEVEL).series
        # 11a1 at 5 has mu = 1: c_0 is nonzero of valuation 1, not a unit
        certificates = (
            certified_nonzero(c0_11) and c0_11.valuation() == 1
            and rank_one[0].is_zero() and rank_one.certified_digits(0) >= 4
            and certified_nonzero(rank_one[1])
        )
        log.info(f"v(c_0) of 11a1 = {c0_11.valuation()}, v(c_1) of 37a1 = {rank_one[1].valuation()}")
        return ok and certificates

    def leading_relation_T(self) -> bool:
        ok = True
        for label in ("11a1", "37a1"):
            approx, m, series_s, Q = self._leading(label, 0)
            report = verify_thm_main_T(approx.series, Q, approx.psi, approx.context.gen, m=m, series_s=series_s)
            cross = report.details.get("cross_variable", {}).get("status")
            log.info(f"{label}: {report.verdict}, cross-variable {cross}, {report.certified_digits} digit(s)")
            ok = ok and report.passed and report.certified_digits >= 3 and cross == "pass"
        return ok

    def three_term_recursion(self) -> bool:
        approx, m, series_s, Q = self._leading("11a1", 3)
        report = verify_thm_mains(series_s, Q, approx.psi, k_max=3, m=m)
        third = [c for c in report.per_coefficient if c.k == m + 3]
        log.info(f"{[c.status for c in report.per_coefficient]}")
        return report.passed and len(third) == 1 and third[0].certified_digits >= 2

    def mu_of_inverse(self) -> bool:
        E = get_curve("11a1")
        report = verify_mu_bar(E, 5, DirichletCharacter(1, 1, 5), n=4, t_order=4)
        mechanism = mechanism_suite(5, count=50)
        log.info(f"mu = {report.details['mu']}, mu-bar = {report.details['mu_bar']}; "
                 f"mechanism checked {mechanism.details['checked']}")
        return report.passed and mechanism.passed

    def base_change(self) -> bool:
        E = get_curve("11a1")
        K = parse_field("K=[kron:-4]", 5, E)
        bc = lp_basechange(E, 5, None, K, n=LEADING_LEVEL, t_order=3)
        report = verify_generalisations(bc)
        log.info(f"{report.details['verdicts']}, m = {report.details['m']}, sign {report.details['sign']:+d}")
        return (
            report.passed
            and report.inputs["Q"] == {"triv": 11, "kron:-4": 11}
            and report.details.get("order_additive") is True
            and report.details.get("sign_matches_order") is True
            and report.certified_digits >= 2
        )

    def parity(self) -> bool:
        ok = True
        for label, p, n in FE_CASES:
            approx = self.series(label, p, n)
            report = verify_parity(approx, root_number(approx.context.E))
            log.info(f"{label} at {p}: m = {report.details['m']}, {report.verdict}")
            ok = ok and report.passed
        return ok

    def structural(self) -> bool:
        failures = 0
        for label in ("11a1", "37a1"):
            for m in symbol_maps(get_curve(label)):
                failures += not m.consistent
                v = m.symbol_value
                for x in m.p1:
                    c, d = x.pair
                    failures += v(c, d) + v(d, -c) != 0
                    failures += v(c, d) + v(d, -c - d) + v(-c - d, c) != 0

        ctx = measure_context(get_curve("11a1"), 5)
        rng = random.Random(9)
        for _ in range(20):
            k = rng.randint(1, 3)
            a = rng.choice([x for x in range(1, 5 ** k) if x % 5])
            refined = None
            for b in range(5):
                value = measure_value(ctx, a + b * 5 ** k, k + 1)
                refined = value if refined is None else refined + value
            failures += refined != measure_value(ctx, a, k)

        np_rng = np.random.default_rng(4)
        for _ in range(20):
            f = random_integral_series(np_rng, 5, 7, 10)
            back = subst_recip(subst_recip(f))
            failures += any(back[k] != f[k] for k in range(f.order))

        upper, lower = self.series("11a1", 5, 4), self.series("11a1", 5, 3)
        failures += any(upper.series[k] != lower.series[k] for k in range(5))
        log.info(f"{failures} failure(s)")
        return failures == 0

    def supersingular(self) -> bool:
        E = get_curve("11a1")
        ok = True
        for selector in ("root1", "root2"):
            alpha = choose_alpha(E, 19, selector)
            approx = lp_series(E, 19, alpha=alpha, n=2, t_order=1)
            report = verify_fe_T(approx, approx)
            log.info(f"{selector}: {report.verdict}, {report.certified_digits} digit(s)")
            ok = ok and report.passed
        return ok

    async def run_tests(self) -> bool:
        criteria = (
            ("interpolation", self.interpolation),
            ("functional equation", self.functional_equation),
            ("leading relation in s", self.leading_relation_s),
            ("leading relation in T", self.leading_relation_T),
            ("three-term recursion", self.three_term_recursion),
            ("mu of the inverse character", self.mu_of_inverse),
            ("base change to Q(i)", self.base_change),
            ("parity", self.parity),
            ("structural suites", self.structural),
            ("supersingular", self.supersingular),
        )
        outcomes = [self.check(name, fn) for name, fn in criteria]
        return all(outcomes)


# Use the async harness runner
if __name__ == "__main__":
    AsyncTestHarness.run(AcceptanceTests)
