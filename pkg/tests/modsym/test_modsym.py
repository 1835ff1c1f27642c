"""
Modular symbol tests

Functions:
    test_p1_sizes():
        |P^1(Z/NZ)| = N prod (1 + 1/q)
    test_space_dimensions():
        Cuspidal dimension equals the genus of X_0(N) for both signs
    test_hecke_matrices():
        T_2, T_3 at level 11 and commutativity at level 37
    test_eigen_projection_*():
        Isolation, wrong eigenvalues and too few primes
    test_symbol_values():
        [0]+ = 1/5 for 11a1, periodicity and the star symmetry
    test_atkin_lehner_signs():
        c_Q against the rank parity
    test_cache_round_trip():
        Store, reload and detect tampering
"""

import json
import random
from fractions import Fraction

import pytest
from sympy import factorint

from padic_ell.errors import BadQ, CacheCorrupt, Inconsistent, NotIsolated
from padic_ell.modsym import (
    P1List,
    SymbolCache,
    atkin_lehner_matrix,
    atkin_lehner_sign,
    build_space,
    cuspidal_dimension,
    eigen_projection,
    eval_symbol,
    heilbronn_matrices,
    hecke_matrix,
    lift_to_sl2,
    p1_enumerate,
)
from padic_ell.utils.log import log


def random_rationals(count, seed, max_den=10 ** 4):
    rng = random.Random(seed)
    return [Fraction(rng.randint(-10 ** 5, 10 ** 5), rng.randint(1, max_den)) for _ in range(count)]


def test_p1_sizes():
    assert len(p1_enumerate(11)) == 12
    assert len(p1_enumerate(1)) == 1
    assert len(p1_enumerate(6)) == 12
    for N in (8, 14, 27, 37, 45, 60):
        expected = Fraction(N)
        for q in factorint(N):
            expected *= Fraction(q + 1, q)
        assert len(p1_enumerate(N)) == expected


def test_p1_normalisation_is_idempotent():
    p1 = P1List(12)
    for x in p1:
        assert p1.normalize(x.c, x.d) == x
        for u in (5, 7, 11):
            assert p1.index(u * x.c, u * x.d) == x.index
    assert not p1.contains(2, 4)


def test_heilbronn_matrices():
    assert sorted(heilbronn_matrices(2)) == [(1, 0, 0, 2), (1, 0, 1, 2), (2, 0, 0, 1), (2, 1, 0, 1)]
    for a, b, c, d in heilbronn_matrices(7):
        assert a * d - b * c == 7
        assert a > b >= 0 and d > c >= 0


def test_lift_to_sl2():
    for c, d in ((0, 1), (3, 6), (10, 4), (5, 0)):
        a, b, c1, d1 = lift_to_sl2(c, d, 11)
        assert a * d1 - b * c1 == 1
        assert (c1 - c) % 11 == 0 and (d1 - d) % 11 == 0


def test_space_dimensions():
    assert build_space(11, 1).cuspidal_dimension == 1
    assert build_space(11, -1).cuspidal_dimension == 1
    assert build_space(37, 1).cuspidal_dimension == 2
    genus = {14: 1, 23: 2, 27: 1, 43: 3}
    for N, g in genus.items():
        assert cuspidal_dimension(N, 1) == g
        assert cuspidal_dimension(N, -1) == g


def test_hecke_matrices():
    space = build_space(11, 1)
    assert hecke_matrix(space, 2).to_dense() == [[-2]]
    assert hecke_matrix(space, 3).to_dense() == [[-1]]

    space37 = build_space(37, 1)
    t2, t3 = hecke_matrix(space37, 2), hecke_matrix(space37, 3)
    assert (t2 @ t3 - t3 @ t2).is_zero()
    (a, b), (c, d) = t2.to_dense()
    # eigenvalues -2 (37a) and 0 (37b)
    assert (a + d, a * d - b * c) == (-2, 0)


def test_eigen_projection_isolates(e11, e37):
    m = eigen_projection(build_space(11, 1), e11)
    assert any(m.values)
    m37 = eigen_projection(build_space(37, 1), e37)
    assert any(m37.values)


def test_eigen_projection_failures(e37):
    space = build_space(37, 1)
    with pytest.raises(Inconsistent):
        eigen_projection(space, e37, eigenvalues={2: 5})
    with pytest.raises(NotIsolated):
        eigen_projection(space, e37, ell_max=1)


def test_functional_kills_manin_relations(e37):
    for sign in (1, -1):
        m = eigen_projection(build_space(37, sign), e37)
        v = m.symbol_value
        for x in m.p1:
            c, d = x.pair
            assert v(c, d) + v(d, -c) == 0
            assert v(c, d) + v(d, -c - d) + v(-c - d, c) == 0
            assert v(-c, d) == sign * v(c, d)


def test_symbol_values(maps_11a1):
    plus, minus = maps_11a1
    assert eval_symbol(plus, 0) == Fraction(1, 5)
    for r in random_rationals(100, seed=5):
        assert eval_symbol(plus, r + 1) == eval_symbol(plus, r)
        assert eval_symbol(plus, -r) == eval_symbol(plus, r)
        assert eval_symbol(minus, -r) + eval_symbol(minus, r) == 0
    log.info(f"11a1 normalised via D = {plus.discriminant} and D = {minus.discriminant}")


def test_normalisation_is_consistent(maps_11a1, maps_37a1):
    plus11, minus11 = maps_11a1
    plus37, minus37 = maps_37a1
    assert plus11.discriminant == 1
    assert minus11.discriminant == -3
    assert eval_symbol(plus37, 0) == 0
    assert plus37.discriminant == 5
    for m in (plus11, minus11, plus37, minus37):
        assert m.consistent is True


def test_atkin_lehner_signs(maps_11a1, maps_37a1, maps_14a1):
    assert atkin_lehner_sign(maps_11a1[0], 11) == -1
    assert atkin_lehner_sign(maps_11a1[1], 11) == -1
    assert atkin_lehner_sign(maps_37a1[0], 37) == 1
    assert atkin_lehner_sign(maps_11a1[0], 1) == 1
    plus14 = maps_14a1[0]
    c2, c7 = atkin_lehner_sign(plus14, 2), atkin_lehner_sign(plus14, 7)
    assert atkin_lehner_sign(plus14, 14) == c2 * c7 == -1
    with pytest.raises(BadQ):
        atkin_lehner_sign(maps_11a1[0], 2)
    with pytest.raises(BadQ):
        atkin_lehner_matrix(27, 3)


def test_cache_round_trip(e11, maps_11a1):
    plus = maps_11a1[0]
    cache = SymbolCache()
    path = cache.save(plus, e11)
    reloaded = cache.load(e11, 1)
    assert reloaded == plus
    for r in random_rationals(20, seed=8):
        assert eval_symbol(reloaded, r) == eval_symbol(plus, r)

    with open(path, "r", encoding="utf-8") as f:
        document = json.load(f)
    document["body"]["scale"] = "7/3"
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f)
    with pytest.raises(CacheCorrupt):
        cache.load(e11, 1)
    cache.save(plus, e11)
