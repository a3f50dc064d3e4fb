import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grtmatch.colouring import (
    ColouredGraph,
    clique_hypergraph,
    is_hyperforest,
    mns,
    nu_vector,
    predicates,
)
from grtmatch.errors import PreconditionError
from grtmatch.formulas import phi, sparse_construction
from grtmatch.graph import Graph, matching_number
from grtmatch.oracle import brute_sigma_maximal
from grtmatch.pipeline import (
    DistilTrace,
    check_distil,
    decycle,
    dissolve,
    distil,
    ge_surplus,
    peel,
    recolour,
    verify_trace,
)
from grtmatch.sampling import random_colouring, random_profile, random_sigma_problem
from grtmatch.sigma import SigmaProblem, sigma_maximal, sigma_value

from helpers import cliques, coloured


# -- sigma ---------------------------------------------------------------------


def test_sigma_value_examples():
    p = SigmaProblem.build(range(3), [(0, 1, 2)])
    assert sigma_value(p, []) == 0
    assert sigma_value(p, [0, 1]) == -1
    q = SigmaProblem.build(range(2), [], [(0, 1)])
    assert sigma_value(q, [0, 1]) == 0
    with pytest.raises(ValueError):
        sigma_value(q, [5])


def test_sigma_problem_rejects_edges_outside_universe():
    with pytest.raises(ValueError):
        SigmaProblem.build(range(2), [(0, 3)])


def test_sigma_maximal_examples():
    forest = SigmaProblem.build(range(7), [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
    assert sigma_maximal(forest) == frozenset()
    assert sigma_maximal(SigmaProblem.build(range(2), [], [(0, 1)])) == {0, 1}
    # Two triangles on {0,1,2} and {1,2,3}: taking {1,2} scores 1 + 1 - 2 = 0.
    two = SigmaProblem.build(range(4), [(0, 1, 2), (1, 2, 3)])
    t = sigma_maximal(two)
    assert sigma_value(two, t) == 0 == brute_sigma_maximal(two)[0]
    assert t == {1, 2}
    assert is_hyperforest([sorted(set(x) - t) for x in two.x_edges])


def _lemma_properties(p: SigmaProblem, t: frozenset) -> bool:
    if not all(set(y) <= t for y in p.y_edges):
        return False
    if not all(x <= t or len(x & t) % 2 == 0 for x in p.x_edges):
        return False
    rest = [sorted(x - t) for x in p.x_edges if x - t]
    return is_hyperforest(rest)


def test_sigma_maximal_matches_exhaustive_search():
    rng = random.Random(31)
    for _ in range(400):
        p = random_sigma_problem(rng, 16)
        t = sigma_maximal(p)
        best, winners = brute_sigma_maximal(p)
        assert sigma_value(p, t) == best
        assert t in winners and len(t) == len(winners[0])
        assert _lemma_properties(p, t)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sets(st.integers(0, 9), min_size=1, max_size=4), max_size=6),
       st.lists(st.sets(st.integers(0, 9), min_size=1, max_size=3), max_size=2))
def test_sigma_maximal_is_not_extendable(xs, ys):
    p = SigmaProblem.build(range(10), xs, ys)
    t = sigma_maximal(p)
    value = sigma_value(p, t)
    for v in range(10):
        if v not in t:
            assert sigma_value(p, t | {v}) < value


# -- decycle -------------------------------------------------------------------


def _zero_theta(cg: ColouredGraph) -> ColouredGraph:
    return ColouredGraph(cg.layers, frozenset())


def test_ge_surplus_uses_cliques_and_a_sets():
    p = ge_surplus(_zero_theta(coloured(5, [(0, 1, 2)], [(1, 2, 3)])))
    assert p.universe == frozenset(range(5))
    assert sorted(map(sorted, p.x_edges)) == [[0, 1, 2], [1, 2, 3]]
    assert not p.y_edges
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    p = ge_surplus(_zero_theta(ColouredGraph.from_colours([star])))
    assert not p.x_edges and list(map(set, p.y_edges)) == [{0}]


def test_decycle_leaves_acyclic_input_alone():
    cg = _zero_theta(coloured(7, [(0, 1, 2)], [(2, 3, 4)]))
    out, t = decycle(cg)
    assert t == frozenset() and out == cg


def test_decycle_breaks_shared_pair():
    # Triangles of two colours sharing an edge close a cycle in the incidence graph.
    cg = _zero_theta(coloured(5, [(0, 1, 2)], [(1, 2, 3)]))
    out, t = decycle(cg)
    assert t
    flags = predicates(out)
    assert flags.proper and flags.D_acyclic
    assert out.theta == t
    assert mns(out) <= mns(cg) - len(t)
    assert all(out.m_ell(ell) >= cg.m_ell(ell) for ell in (2, 3, 4))


def test_decycle_takes_whole_a_set():
    g1 = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])  # star: A = {0}
    cg = _zero_theta(ColouredGraph.from_colours([g1, cliques(5, [(2, 3, 4)])]))
    assert predicates(cg).Theta_complete
    out, t = decycle(cg)
    assert 0 in t


def test_decycle_requires_theta_complete():
    cg = _zero_theta(ColouredGraph.from_colours([Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])]))
    with pytest.raises(PreconditionError):
        decycle(cg)


# -- dissolve ------------------------------------------------------------------


def test_dissolve_two_disjoint_triangles():
    cg = _zero_theta(coloured(7, [(0, 1, 2)], [(3, 4, 5)]))
    out, t = dissolve(cg, (1, (0, 1, 2)), (2, (3, 4, 5)))
    before, after = clique_hypergraph(cg), clique_hypergraph(out)
    assert len(t) == 1
    assert len(after) == len(before) - 1
    flags = predicates(out)
    assert flags.proper and flags.D_acyclic
    assert mns(out) <= mns(cg) - len(t)
    assert all(a <= b for a, b in zip(nu_vector(out), nu_vector(cg)))
    assert not t & cg.theta
    assert out.theta == cg.theta | t
    assert all(out.m_ell(ell) >= cg.m_ell(ell) for ell in (2, 3, 4, 5))


def test_dissolve_preconditions():
    cg = _zero_theta(coloured(9, [(0, 1, 2, 3, 4)], [(5, 6, 7)]))
    with pytest.raises(PreconditionError):
        dissolve(cg, (1, (0, 1, 2, 3, 4)), (2, (5, 6, 7)))  # |K| < |L|
    cg = _zero_theta(coloured(7, [(0, 1, 2), (3, 4, 5)]))
    with pytest.raises(PreconditionError):
        dissolve(cg, (1, (0, 1, 2)), (1, (3, 4, 5)))  # same colour


# -- peel ----------------------------------------------------------------------


def test_peel_single_clique_is_untouched():
    cg = _zero_theta(coloured(5, [(0, 1, 2)]))
    assert peel(cg) == (cg, frozenset())


def test_peel_merges_same_colour_triangles():
    cg = _zero_theta(coloured(7, [(0, 1, 2), (3, 4, 5)]))
    trace = DistilTrace()
    out, s = peel(cg, trace)
    assert s == frozenset()
    assert trace.kinds() == ["merge"]
    assert out.layer(1) == cliques(7, [(1, 2, 3, 4, 5)])
    assert nu_vector(out) == nu_vector(cg)


def test_peel_tree_of_six_cliques():
    n = 16
    red = [(0, 1, 2), (3, 4, 5, 6, 7), (8, 9, 10)]
    blue = [(2, 3, 11), (7, 12, 13)]
    green = [(10, 14, 15)]
    cg = _zero_theta(coloured(n, red, blue, green))
    assert predicates(cg).D_acyclic
    trace = DistilTrace()
    out, s = peel(cg, trace)
    assert len(trace) <= 5
    assert len(clique_hypergraph(out)) <= 1
    assert not verify_trace(trace)
    sizes = [len(clique_hypergraph(r.graph)) for r in trace.records]
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)
    assert mns(out) + len(s) <= mns(cg)


# -- distil --------------------------------------------------------------------


def test_distil_on_single_odd_clique_is_identity():
    cg = coloured(6, [(0, 1, 2)], [])
    r = distil(cg)
    assert r.cone == frozenset()
    assert r.graph.layers == cg.layers
    assert r.clique == {0, 1, 2} and r.kappa == 1


def test_distil_on_sparse_construction():
    cg = sparse_construction(6, (2, 2))
    r = distil(cg)
    assert all(ok for _, ok in check_distil(cg, r))
    x, y = 2 * r.kappa + 1, len(r.cone)
    for ell in (2, 3, 4):
        assert phi(ell, 6, x, y) >= phi(ell, 6, 1, 2)


def test_distil_preconditions():
    with pytest.raises(PreconditionError):
        distil(ColouredGraph.from_colours([cliques(4, [(0, 1), (2, 3)])]))
    g0 = Graph.from_edges(4, [(0, 1)])
    with pytest.raises(PreconditionError):
        distil(ColouredGraph.from_colours([Graph.empty(4)], uncoloured=g0))
    # Matching numbers 1 + 1 + 1 reach n = 3.
    three = [Graph.from_edges(3, [(0, 1)])] * 3
    with pytest.raises(PreconditionError):
        distil(ColouredGraph.from_colours(three))


def test_distil_random_colourings():
    rng = random.Random(41)
    for _ in range(120):
        n = rng.randint(1, 7)
        p = random_profile(n, rng.randint(1, 3), rng)
        cg = random_colouring(n, p, rng)
        r = distil(cg)
        checks = dict(check_distil(cg, r))
        assert all(checks.values()), checks
        assert not verify_trace(r.trace)
        assert r.kappa + len(r.cone) <= mns(cg)
        assert r.trace.kinds()[0] == "input"


def test_distil_dense_random_colourings_reach_dissolve():
    rng = random.Random(42)
    kinds = set()
    for _ in range(200):
        n = rng.randint(5, 9)
        p = random_profile(n, rng.randint(2, 3), rng)
        cg = random_colouring(n, p, rng, density=0.95)
        r = distil(cg)
        assert all(ok for _, ok in check_distil(cg, r))
        kinds |= set(r.trace.kinds())
    assert "dissolve" in kinds


# -- recolour ------------------------------------------------------------------


def test_recolour_with_empty_cone_is_identity():
    cg = coloured(5, [(0, 1, 2)])
    assert recolour(cg, [], 1, (2,)).layers == cg.layers


def test_recolour_single_colour():
    g0 = Graph.empty(6).join_mask(0b11, 0b111111)
    cg = ColouredGraph((g0, Graph.empty(6)))
    out = recolour(cg, [0, 1], 0, (3,))
    assert out.layer(0).num_edges() == 0
    assert out.layer(1) == g0
    assert matching_number(out.layer(1)) <= 2


def test_recolour_skips_full_colour():
    n = 6
    g1 = cliques(n, [(0, 1, 2)])
    g0 = Graph.empty(n).join_mask(1 << 3, (1 << n) - 1)
    cg = ColouredGraph((g0, g1, Graph.empty(n)))
    out = recolour(cg, [3], 1, (2, 2))
    assert out.layer(2) == g0
    assert nu_vector(out) == (1, 1)


def test_recolour_capacity_errors():
    g0 = Graph.empty(4).join_mask(0b11, 0b1111)
    cg = ColouredGraph((g0, Graph.empty(4)))
    with pytest.raises(PreconditionError):
        recolour(cg, [0, 1], 0, (2,))
    with pytest.raises(PreconditionError):
        recolour(cg, [0], 0, (3,))  # S does not cover edge 1-2


# -- binomial inequalities used by the clique-count estimates ------------------


def test_dissolve_binomial_bound():
    for kappa in range(51):
        for ell in range(2, 21):
            assert comb(3 * kappa + 1, ell) >= 2 * comb(2 * kappa + 1, ell)


def test_merge_inclusion_exclusion_bound():
    for n in range(31):
        for a in range(31):
            for b in range(31):
                for r in range(31):
                    assert comb(n + a + b, r) >= comb(n + a, r) + comb(n + b, r) - comb(n, r)
