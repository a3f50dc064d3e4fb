"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from grtmatch.colouring import ColouredGraph
from grtmatch.graph import Graph


def clique_edges(vertices):
    return list(combinations(sorted(vertices), 2))


def cliques(n: int, groups, extra=()) -> Graph:
    edges = [e for g in groups for e in clique_edges(g)]
    return Graph.from_edges(n, edges + list(extra))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def coloured(n: int, *colour_groups, theta=None) -> ColouredGraph:
    """One layer per argument; each argument is a list of cliques."""
    return ColouredGraph.from_colours([cliques(n, g) for g in colour_groups], theta=theta)


def brute_cliques(g: Graph, ell: int) -> int:
    return sum(1 for c in combinations(range(g.n), ell) if g.is_clique(c))


def ad_complete_graph(a: int, sizes) -> Graph:
    """``a`` universal vertices joined to disjoint odd cliques of the given sizes."""
    n = a + sum(sizes)
    top = (1 << a) - 1
    g = Graph.empty(n).join_mask(top, (1 << n) - 1)
    start = a
    for s in sizes:
        block = ((1 << s) - 1) << start
        g = g.join_mask(block, block)
        start += s
    return g


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])
