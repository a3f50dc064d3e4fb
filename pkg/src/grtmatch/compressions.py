"""Single-colour compressions that add or rewire edges guided by the
Gallai-Edmonds decomposition while keeping the matching number fixed."""

from __future__ import annotations

from typing import Iterable

from .colouring import is_cad_complete, is_d_complete
from .errors import PreconditionError
from .graph import GEDecomposition, Graph, ge_decompose, matching_number, to_mask


def cad_complete(g: Graph, ge: GEDecomposition | None = None) -> Graph:
    """Add all edges inside C, all edges at A and all edges inside each D-component."""
    ge = ge or ge_decompose(g)
    full = g.vertex_mask
    c = to_mask(ge.C)
    a = to_mask(ge.A)
    adj = list(g.adj)
    for v in range(g.n):
        if a >> v & 1:
            adj[v] = full
        else:
            adj[v] |= a
            if c >> v & 1:
                adj[v] |= c
    for comp in ge.d_components:
        m = to_mask(comp)
        for v in comp:
            adj[v] |= m
    return Graph._unchecked(g.n, (nb & ~(1 << v) for v, nb in enumerate(adj)))


def ca_transfer(g: Graph, u: int, v: int) -> Graph:
    """Add the single edge ``{u, v}`` between C and D of a CAD-complete graph."""
    ge = ge_decompose(g)
    if not is_cad_complete(g, ge):
        raise PreconditionError("CA-transfer needs a CAD-complete graph")
    if u not in ge.C or v not in ge.D:
        raise PreconditionError(f"CA-transfer needs u in C and v in D, got u={u}, v={v}")
    return g.add_edges([(u, v)])


def ad_complete(g: Graph) -> Graph:
    """CAD-complete, then (if both C and D are nonempty) move C into A via one
    transfer between the lowest vertices of C and D and complete again."""
    if 2 * matching_number(g) >= g.n:
        raise PreconditionError("AD-completion needs a graph without a perfect matching")
    g = cad_complete(g)
    ge = ge_decompose(g)
    if not ge.C or not ge.D:
        return g
    g = ca_transfer(g, min(ge.C), min(ge.D))
    return cad_complete(g)


def _clique_components(g: Graph) -> dict[int, tuple[int, ...]]:
    ge = ge_decompose(g)
    if not is_d_complete(g, ge):
        raise PreconditionError("graph is not D-complete (a disjoint union of odd cliques)")
    return {v: comp for comp in ge.d_components for v in comp}


def d_isolate(g: Graph, L: Iterable[int], S: Iterable[int], K: Iterable[int]) -> Graph:
    """Dismantle clique ``L``: drop its edges, then make ``S`` a clique joined to ``K``."""
    L, S, K = frozenset(L), frozenset(S), frozenset(K)
    comp_of = _clique_components(g)
    if not L or comp_of[min(L)] != tuple(sorted(L)):
        raise PreconditionError("L must be a maximal clique of g")
    if not S <= L:
        raise PreconditionError("S must be a subset of L")
    if K & S:
        raise PreconditionError("K must be disjoint from S")
    kappa = (len(L) - 1) // 2
    if kappa < 1:
        raise PreconditionError("L must have at least 3 vertices")
    if len(S) != kappa or len(K) <= kappa:
        raise PreconditionError(f"need |K| > |S| = {kappa}, got |K|={len(K)}, |S|={len(S)}")
    if len({comp_of[v] for v in K}) != len(K):
        raise PreconditionError("K must be scattered (one vertex per clique)")
    l_mask = to_mask(L)
    adj = [nb & ~l_mask if l_mask >> v & 1 else nb for v, nb in enumerate(g.adj)]
    out = Graph._unchecked(g.n, adj)
    s_mask = to_mask(S)
    return out.join_mask(s_mask, s_mask | to_mask(K))


def d_merge(g: Graph, L: Iterable[int], w: int, K: Iterable[int]) -> Graph:
    """Detach ``w`` from clique ``L`` and fuse the rest of ``L`` into clique ``K``."""
    L, K = frozenset(L), frozenset(K)
    comp_of = _clique_components(g)
    for name, c in (("L", L), ("K", K)):
        if not c or comp_of[min(c)] != tuple(sorted(c)):
            raise PreconditionError(f"{name} must be a maximal clique of g")
        if len(c) < 2:
            raise PreconditionError(f"{name} must be a nontrivial clique")
    if L == K:
        raise PreconditionError("L and K must be distinct cliques")
    if w not in L:
        raise PreconditionError("w must lie in L")
    rest = L - {w}
    if rest & K:
        raise PreconditionError("L minus w must be disjoint from K")
    out = g.remove_edges((w, v) for v in rest)
    return out.join_mask(to_mask(rest), to_mask(K))

