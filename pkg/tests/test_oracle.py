import random
from itertools import combinations
from math import comb

import pytest

from grtmatch.colouring import nu_vector
from grtmatch.errors import BudgetExceeded
from grtmatch.formulas import MatchingProfile, grt
from grtmatch.graph import Graph, ge_decompose
from grtmatch.oracle import brute_ge, brute_grt, brute_nu, brute_sigma_maximal, ramsey_search
from grtmatch.sigma import SigmaProblem

from helpers import cliques, cycle, path


def test_brute_nu_examples():
    assert brute_nu(Graph.empty(6)) == 0
    assert brute_nu(cycle(7)) == 3
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert brute_nu(k33) == 3


def test_brute_nu_ignores_isolated_vertices_for_cap():
    g = Graph.from_edges(40, [(0, 1), (38, 39)])
    assert brute_nu(g) == 2


def test_brute_nu_cap():
    with pytest.raises(BudgetExceeded):
        brute_nu(Graph.complete(13))


def test_brute_ge_examples():
    assert brute_ge(path(3)).as_triple() == (frozenset(), frozenset({1}), frozenset({0, 2}))
    assert brute_ge(path(4)).as_triple() == (frozenset(range(4)), frozenset(), frozenset())
    assert brute_ge(cliques(4, [(0, 1, 2)])).as_triple() == (frozenset(), frozenset(), frozenset(range(4)))
    assert brute_ge(Graph.empty(3)).D == frozenset(range(3))


def test_brute_ge_exhaustive_small():
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for pick in range(1 << len(pairs)):
            g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if pick >> i & 1])
            assert brute_ge(g) == ge_decompose(g)


def test_brute_ge_random():
    rng = random.Random(51)
    for _ in range(300):
        n = rng.randint(6, 9)
        p = rng.random()
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        assert brute_ge(g) == ge_decompose(g)


def test_brute_sigma_examples():
    forest = SigmaProblem.build(range(5), [(0, 1, 2), (2, 3, 4)])
    assert brute_sigma_maximal(forest) == (0, [frozenset()])
    best, winners = brute_sigma_maximal(SigmaProblem.build(range(2), [], [(0, 1)]))
    assert best == 0 and winners[0] == {0, 1}
    best, winners = brute_sigma_maximal(SigmaProblem.build(range(4), [(0, 1, 2), (1, 2, 3)]))
    assert best >= 0 and winners[0]


def test_brute_sigma_cap():
    big = SigmaProblem.build(range(21), [tuple(range(21))])
    with pytest.raises(BudgetExceeded):
        brute_sigma_maximal(big)


def test_brute_grt_examples():
    r = brute_grt(2, 4, (2,))
    assert r.value == 3
    assert nu_vector(r.witness) == (1,)
    assert brute_grt(2, 5, (2, 2)).value == 7
    expected = max(grt(3, 5, (2,)).sparse, grt(3, 5, (2,)).dense)
    assert brute_grt(3, 5, (2,)).value == expected == 1


def test_brute_grt_witness_is_valid():
    for t, n in [((2, 2), 5), ((3,), 6), ((2, 3), 6)]:
        p = MatchingProfile(t)
        r = brute_grt(3, n, p)
        assert p.admits(nu_vector(r.witness))
        assert r.witness.m_ell(3) == r.value


def test_brute_grt_is_deterministic():
    assert brute_grt(2, 5, (2, 2)) == brute_grt(2, 5, (2, 2))


def test_brute_grt_partitions_agree():
    seq = brute_grt(3, 5, (2, 2))
    par = brute_grt(3, 5, (2, 2), jobs=2)
    assert par == seq


def test_brute_grt_budget(monkeypatch):
    with pytest.raises(BudgetExceeded):
        brute_grt(2, 6, (2, 2), budget=100)
    monkeypatch.setenv("GRT_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        brute_grt(2, 4, (2,))


def test_brute_grt_matches_formula_q3():
    for n in range(6):
        for ell in (2, 3):
            assert brute_grt(ell, n, (2, 2, 2)).value == grt(ell, n, (2, 2, 2)).value


def test_brute_grt_complete_regime():
    p = MatchingProfile((2, 3))
    for n in range(2, p.t_max + p.lam + 1):
        assert brute_grt(2, n, p).value == comb(n, 2)


@pytest.mark.parametrize("t, expected", [((1,), 2), ((2,), 4), ((3,), 6), ((2, 2), 5),
                                         ((1, 2), 4), ((1, 1, 1), 2)])
def test_ramsey_search(t, expected):
    assert ramsey_search(t) == expected == MatchingProfile(t).ramsey
