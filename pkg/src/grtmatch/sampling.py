"""Seeded random instances for sweeps and property tests."""

from __future__ import annotations

import random

from .colouring import ColouredGraph
from .formulas import MatchingProfile
from .graph import Graph, matching_number
from .sigma import SigmaProblem


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_profile(n: int, q: int, rng: random.Random) -> MatchingProfile:
    """A profile under which no colour can hold a perfect matching and the
    matching numbers sum to less than ``n``."""
    top = (n - 1) // 2 + 1  # largest t with 2(t-1) < n
    while True:
        t = tuple(rng.randint(1, top) for _ in range(q))
        if sum(x - 1 for x in t) < n:
            return MatchingProfile(t)


def random_colouring(n: int, profile: MatchingProfile, rng: random.Random,
                     density: float | None = None) -> ColouredGraph:
    """Offer the pairs in random order, each with a random colour, keeping an
    edge only if that colour stays within its matching bound."""
    q = profile.q
    density = rng.random() if density is None else density
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    layers = [Graph.empty(n) for _ in range(q)]
    for u, v in pairs:
        if rng.random() >= density:
            continue
        j = rng.randrange(q)
        trial = layers[j].add_edges([(u, v)])
        if matching_number(trial) <= profile.t[j] - 1:
            layers[j] = trial
    return ColouredGraph.from_colours(layers)


def random_sigma_problem(rng: random.Random, max_universe: int = 14) -> SigmaProblem:
    size = rng.randint(1, max_universe)
    verts = list(range(size))
    xs = [rng.sample(verts, rng.randint(1, min(size, 5))) for _ in range(rng.randint(0, 6))]
    ys = [rng.sample(verts, rng.randint(1, min(size, 3))) for _ in range(rng.randint(0, 2))]
    return SigmaProblem.build(verts, xs, ys)
