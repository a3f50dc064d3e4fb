"""Exhaustive ground truth for matchings, Gallai-Edmonds sets, the sigma
surplus and the GRT value. Nothing here calls the blossom code."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product
from math import comb
from typing import NamedTuple

from .colouring import ColouredGraph
from .errors import BudgetExceeded
from .formulas import MatchingProfile, as_profile
from .graph import GEDecomposition, Graph, bits, components, to_mask
from .sigma import SigmaProblem

NU_MAX_VERTICES = 12
NU_MAX_EDGES = 24
SIGMA_MAX_UNIVERSE = 20
DEFAULT_GRT_BUDGET = 3 ** 15


def _nu_rec(adj: tuple[int, ...], mask: int) -> int:
    @lru_cache(maxsize=None)
    def f(m: int) -> int:
        if not m:
            return 0
        v = (m & -m).bit_length() - 1
        rest = m & ~(1 << v)
        best = f(rest)
        for u in bits(adj[v] & rest):
            best = max(best, 1 + f(rest & ~(1 << u)))
        return best

    return f(mask)


def _check_nu_cap(g: Graph) -> int:
    active = to_mask(v for v in range(g.n) if g.adj[v])
    if active.bit_count() > NU_MAX_VERTICES and g.num_edges() > NU_MAX_EDGES:
        raise BudgetExceeded(
            f"brute force matching is capped at {NU_MAX_VERTICES} non-isolated vertices "
            f"or {NU_MAX_EDGES} edges")
    return active


def brute_nu(g: Graph) -> int:
    """Matching number by exhaustive search over the lowest unmatched vertex."""
    return _nu_rec(g.adj, _check_nu_cap(g))


def _maximum_matchings_missed(g: Graph, active: int) -> list[int]:
    """Masks of vertices missed by each maximum matching."""
    found: list[tuple[int, int]] = []

    def rec(m: int, size: int, covered: int) -> None:
        if not m:
            found.append((size, covered))
            return
        v = (m & -m).bit_length() - 1
        rest = m & ~(1 << v)
        rec(rest, size, covered)
        for u in bits(g.adj[v] & rest):
            rec(rest & ~(1 << u), size + 1, covered | 1 << v | 1 << u)

    rec(active, 0, 0)
    top = max(size for size, _ in found)
    full = g.vertex_mask
    return [full & ~covered for size, covered in found if size == top]


def brute_ge(g: Graph) -> GEDecomposition:
    """Gallai-Edmonds sets straight from the definition: D is everything some
    maximum matching misses, A the outside neighbours of D, C the rest."""
    active = _check_nu_cap(g)
    d = 0
    for missed in _maximum_matchings_missed(g, active):
        d |= missed
    a = 0
    for v in bits(d):
        a |= g.adj[v]
    a &= ~d
    c = g.vertex_mask & ~a & ~d
    return GEDecomposition(frozenset(bits(c)), frozenset(bits(a)), frozenset(bits(d)),
                           tuple(components(g, bits(d))))


def brute_sigma_maximal(p: SigmaProblem) -> tuple[int, list[frozenset[int]]]:
    """Best sigma value and every subset of the relevant vertices attaining it,
    largest first."""
    verts = sorted(p.relevant())
    if len(verts) > SIGMA_MAX_UNIVERSE:
        raise BudgetExceeded(f"sigma enumeration is capped at {SIGMA_MAX_UNIVERSE} vertices")
    xs = [to_mask(x) for x in p.x_edges]
    ys = [to_mask(y) for y in p.y_edges]
    best, winners = None, []
    for pick in range(1 << len(verts)):
        t = to_mask(v for i, v in enumerate(verts) if pick >> i & 1)
        val = (sum((t & x).bit_count() // 2 for x in xs)
               + sum((t & y).bit_count() for y in ys) - t.bit_count())
        if best is None or val > best:
            best, winners = val, [t]
        elif val == best:
            winners.append(t)
    out = [frozenset(bits(t)) for t in winners]
    out.sort(key=lambda s: (-len(s), sorted(s)))
    return best, out


# -- GRT by enumerating colourings ---------------------------------------------


class GRTSearch(NamedTuple):
    value: int
    witness: ColouredGraph


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("GRT_BUDGET")
    return int(env) if env else DEFAULT_GRT_BUDGET


def _cliques_in(adj: list[int], cand: int, k: int) -> int:
    """Number of k-cliques inside ``cand``."""
    if k == 0:
        return 1
    if k == 1:
        return cand.bit_count()
    total = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        total += _cliques_in(adj, adj[v] & cand, k - 1)
    return total


def _nu_small(adj: list[int], n: int) -> int:
    return _nu_rec(tuple(adj), (1 << n) - 1)


def _search(ell: int, n: int, t: tuple[int, ...], prefix: tuple[int, ...]):
    """Depth-first search over pair assignments extending ``prefix``.

    Values are colours ``1..q`` then 0 (absent). Returns ``(value, colours)``
    for the first strict maximiser in that order, or ``None`` when the prefix
    itself breaks a matching bound.
    """
    q = len(t)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    npairs = len(pairs)
    # future[i][v]: neighbours of v through pairs with index >= i.
    future = [[0] * n for _ in range(npairs + 1)]
    for i in range(npairs - 1, -1, -1):
        u, v = pairs[i]
        row = list(future[i + 1])
        row[u] |= 1 << v
        row[v] |= 1 << u
        future[i] = row

    under = [0] * n
    cadj = [[0] * n for _ in range(q)]
    nu_ub = [0] * q  # upper bounds on each colour's matching number
    assign = [0] * npairs
    best: list = [-1, None]

    def try_colour(j: int, u: int, v: int) -> int | None:
        """New matching-number bound for colour j after adding uv, or None."""
        if nu_ub[j] + 1 <= t[j] - 1:
            return nu_ub[j] + 1
        g = cadj[j]
        g[u] |= 1 << v
        g[v] |= 1 << u
        nu = _nu_small(g, n)
        g[u] &= ~(1 << v)
        g[v] &= ~(1 << u)
        return nu if nu <= t[j] - 1 else None

    def add(j: int, u: int, v: int) -> None:
        cadj[j][u] |= 1 << v
        cadj[j][v] |= 1 << u
        under[u] |= 1 << v
        under[v] |= 1 << u

    def remove(j: int, u: int, v: int) -> None:
        cadj[j][u] &= ~(1 << v)
        cadj[j][v] &= ~(1 << u)
        under[u] &= ~(1 << v)
        under[v] &= ~(1 << u)

    def optimistic(i: int) -> int:
        return _cliques_in([a | b for a, b in zip(under, future[i])], (1 << n) - 1, ell)

    def rec(i: int, count: int, bound: int) -> None:
        if bound <= best[0]:
            return
        if i == npairs:
            best[0], best[1] = count, list(assign)
            return
        u, v = pairs[i]
        gained = _cliques_in(under, under[u] & under[v], ell - 2) if ell >= 2 else 0
        for j in range(q):
            nb = try_colour(j, u, v)
            if nb is None:
                continue
            old = nu_ub[j]
            nu_ub[j] = nb
            add(j, u, v)
            assign[i] = j + 1
            rec(i + 1, count + gained, bound)
            remove(j, u, v)
            nu_ub[j] = old
        assign[i] = 0
        rec(i + 1, count, optimistic(i + 1))

    # Replay the fixed prefix, rejecting it if it already breaks a bound.
    count = 0 if ell > 1 else n
    for i, c in enumerate(prefix):
        u, v = pairs[i]
        assign[i] = c
        if c:
            nb = try_colour(c - 1, u, v)
            if nb is None:
                return None
            count += _cliques_in(under, under[u] & under[v], ell - 2) if ell >= 2 else 0
            nu_ub[c - 1] = nb
            add(c - 1, u, v)
    rec(len(prefix), count, optimistic(len(prefix)))
    if best[1] is None:
        return None
    return best[0], best[1]


def _witness(n: int, q: int, colours: list[int]) -> ColouredGraph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    layers = [Graph.from_edges(n, [e for e, c in zip(pairs, colours) if c == j])
              for j in range(1, q + 1)]
    return ColouredGraph.from_colours(layers)


def _search_star(args):
    return _search(*args)


def brute_grt(ell: int, n: int, profile, budget: int | None = None,
              jobs: int = 1) -> GRTSearch:
    """Largest ``K_ell`` count over all tK2-free colourings on ``n`` vertices.

    Each pair is coloured ``1..q`` or left out. The search is depth-first in
    lexicographic pair order with those values in that order; a branch is cut
    when its matching bound breaks or when even adding every remaining pair
    could not beat the best count so far. With ``jobs > 1`` the first few pairs
    are fixed per task and the tasks run in separate processes.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    p: MatchingProfile = as_profile(profile)
    size = (p.q + 1) ** comb(n, 2)
    cap = _budget(budget)
    if size > cap:
        raise BudgetExceeded(f"{size} colourings exceed the budget of {cap}")

    if jobs <= 1 or comb(n, 2) < 2:
        found = _search(ell, n, p.t, ())
        results = [found]
    else:
        k = 1
        while (p.q + 1) ** k < 4 * jobs and k < comb(n, 2):
            k += 1
        # Same value order as the sequential search: colours first, then absent.
        values = list(range(1, p.q + 1)) + [0]
        tasks = [(ell, n, p.t, pre) for pre in product(values, repeat=k)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_star, tasks))
    value, colours = -1, None
    for r in results:
        if r is not None and r[0] > value:
            value, colours = r
    return GRTSearch(value, _witness(n, p.q, colours))


def ramsey_search(profile, budget: int | None = None, jobs: int = 1) -> int:
    """Smallest ``n`` on which no colouring of ``K_n`` avoids the profile."""
    p = as_profile(profile)
    n = 2
    while brute_grt(2, n, p, budget, jobs).value == comb(n, 2):
        n += 1
    return n
