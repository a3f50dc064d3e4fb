"""Multicolour reduction pipeline.

A tK2-free colouring is driven, without losing cliques or raising any
colour's matching number, towards a single odd clique in one colour plus
a set of uncoloured cone vertices. ``recolour`` then hands the cone edges
back to the colours.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .colouring import (
    ColouredGraph,
    CliqueHypergraph,
    HyperEdge,
    Leaf,
    clique_hypergraph,
    is_proper,
    is_theta_complete,
    leaves,
    mns,
    nu_vector,
    predicates,
    uncolour,
)
from .compressions import ad_complete, cad_complete, d_isolate, d_merge
from .errors import PreconditionError
from .formulas import MatchingProfile, as_profile, is_clique_cone
from .graph import Graph, matching_number, to_mask
from .sigma import SigmaProblem, sigma_maximal, sigma_value

__all__ = [
    "SigmaProblem", "sigma_value", "sigma_maximal", "ge_surplus",
    "StepRecord", "DistilTrace", "DistilResult",
    "decycle", "dissolve", "peel", "distil", "recolour",
    "verify_trace", "check_distil",
]

DEFAULT_ELLS = (2, 3, 4, 5)


# -- trace ---------------------------------------------------------------------


class StepRecord(NamedTuple):
    kind: str
    colour: int | None
    sets: dict
    m_ell: dict
    nu: tuple[int, ...]
    mns: int
    theta: tuple[int, ...]
    graph: ColouredGraph


@dataclass
class DistilTrace:
    ells: tuple[int, ...] = DEFAULT_ELLS
    records: list[StepRecord] = field(default_factory=list)

    def record(self, kind: str, cg: ColouredGraph, colour: int | None = None, **sets) -> None:
        nu = nu_vector(cg)
        self.records.append(StepRecord(
            kind, colour,
            {k: tuple(sorted(v)) for k, v in sets.items()},
            {ell: cg.m_ell(ell) for ell in self.ells},
            nu, sum(nu), tuple(sorted(cg.theta)), cg,
        ))

    def kinds(self) -> list[str]:
        return [r.kind for r in self.records]

    def __len__(self) -> int:
        return len(self.records)


def verify_trace(trace: DistilTrace) -> list[str]:
    """Monotonicity violations between consecutive records (empty when clean).

    Recolouring hands uncoloured edges back to the colours, so it is allowed
    to raise matching numbers; only its clique count is checked.
    """
    problems = []
    for i, (a, b) in enumerate(zip(trace.records, trace.records[1:]), start=1):
        for ell in trace.ells:
            if b.m_ell[ell] < a.m_ell[ell]:
                problems.append(f"step {i} ({b.kind}): m_{ell} fell {a.m_ell[ell]} -> {b.m_ell[ell]}")
        if b.kind != "recolour" and any(y > x for x, y in zip(a.nu, b.nu)):
            problems.append(f"step {i} ({b.kind}): nu rose {a.nu} -> {b.nu}")
    return problems


def _note(trace: DistilTrace | None, kind: str, cg: ColouredGraph, colour=None, **sets):
    if trace is not None:
        trace.record(kind, cg, colour, **sets)


# -- decycling -----------------------------------------------------------------


def ge_surplus(cg: ColouredGraph, h: CliqueHypergraph | None = None) -> SigmaProblem:
    """The sigma instance whose floor-half sets are the nontrivial cliques and
    whose full-weight sets are the A-sets of the colours."""
    h = h or clique_hypergraph(cg)
    xs = [] if h.is_fallback else [e.vertices for e in h.k_edges]
    return SigmaProblem.build(range(cg.n), xs, [e.vertices for e in h.a_sets])


def decycle(cg: ColouredGraph, trace: DistilTrace | None = None
            ) -> tuple[ColouredGraph, frozenset[int]]:
    """Uncolour a sigma-maximal set of the GE-surplus."""
    if not is_proper(cg):
        raise PreconditionError("decycle needs a proper colouring")
    if not is_theta_complete(cg):
        raise PreconditionError("decycle needs a Theta-complete colouring")
    t = sigma_maximal(ge_surplus(cg))
    out = uncolour(cg, t)
    _note(trace, "decycle", out, T=t)
    return out, t


# -- peeling -------------------------------------------------------------------


def _edge_key(e: HyperEdge) -> tuple[int, int, int]:
    return (len(e.vertices), e.colour, min(e.vertices))


def _require_d_acyclic(cg: ColouredGraph, what: str) -> CliqueHypergraph:
    flags = predicates(cg)
    if not flags.proper:
        raise PreconditionError(f"{what} needs a proper colouring")
    if not flags.D_acyclic:
        raise PreconditionError(f"{what} needs a D-acyclic colouring")
    return clique_hypergraph(cg)


def _find_leaf(h: CliqueHypergraph, edge: HyperEdge) -> Leaf:
    for leaf in leaves(h):
        if leaf.edge == edge and not h.is_fallback:
            return leaf
    raise PreconditionError(f"{edge} is not a leaf of the clique hypergraph")


def _as_edge(e) -> HyperEdge:
    colour, vertices = e
    return HyperEdge(int(colour), tuple(sorted(vertices)))


def dissolve(cg: ColouredGraph, L, K, trace: DistilTrace | None = None
             ) -> tuple[ColouredGraph, frozenset[int]]:
    """Break leaf clique ``L`` apart against a clique ``K`` of another colour.

    ``L`` and ``K`` are ``(colour, vertices)`` pairs. A set ``S`` of
    ``(|L|-1)/2`` vertices of ``L`` (avoiding its link) is joined to
    ``|L|`` vertices of ``K``; decycling then uncolours exactly ``S``.
    """
    L, K = _as_edge(L), _as_edge(K)
    h = _require_d_acyclic(cg, "dissolve")
    leaf = _find_leaf(h, L)
    if K not in h.k_edges or h.is_fallback:
        raise PreconditionError(f"{K} is not a clique of the coloured graph")
    if K.colour == L.colour:
        raise PreconditionError("L and K must have different colours")
    if len(K.vertices) < len(L.vertices):
        raise PreconditionError("need |K| >= |L|")

    j, w = L.colour, leaf.link
    kappa = (len(L.vertices) - 1) // 2
    k_prime = K.vertices[:2 * kappa + 1]
    s = [v for v in L.vertices if v != w][:kappa]
    g = d_isolate(cg.layer(j), L.vertices, s, k_prime)
    rest = [v for v in range(cg.n) if v not in cg.theta]
    if rest:
        sub, order = g.subgraph(rest)
        g = g.replace_induced(order, cad_complete(sub))
    mid = cg.with_layer(j, g)
    out, t = decycle(mid)
    _note(trace, "dissolve", out, j, L=L.vertices, K=K.vertices, S=s, T=t)
    return out, t


def _real_edges(h: CliqueHypergraph) -> tuple[HyperEdge, ...]:
    return () if h.is_fallback else h.k_edges


def peel(cg: ColouredGraph, trace: DistilTrace | None = None
         ) -> tuple[ColouredGraph, frozenset[int]]:
    """Remove leaf cliques one at a time until at most one clique is left."""
    h = _require_d_acyclic(cg, "peel")
    s: set[int] = set()
    while len(edges := _real_edges(h)) >= 2:
        leaf = min(leaves(h), key=lambda lf: _edge_key(lf.edge))
        L = leaf.edge
        others = sorted((e for e in edges if e.colour != L.colour
                         and len(e.vertices) >= len(L.vertices)), key=_edge_key)
        if others:
            cg, t = dissolve(cg, L, others[0], trace)
            s |= t
        else:
            same = sorted((lf.edge for lf in leaves(h) if lf.edge != L
                           and lf.edge.colour == L.colour
                           and len(lf.edge.vertices) >= len(L.vertices)), key=_edge_key)
            if not same:
                raise PreconditionError("no merge partner for the minimum leaf")
            K = same[0]
            g = d_merge(cg.layer(L.colour), L.vertices, leaf.link, K.vertices)
            cg = cg.with_layer(L.colour, g)
            _note(trace, "merge", cg, L.colour, L=L.vertices, K=K.vertices, w=[leaf.link])
        h_next = clique_hypergraph(cg)
        if len(_real_edges(h_next)) >= len(edges):
            raise AssertionError("peel step did not shrink the clique hypergraph")
        h = h_next
    return cg, frozenset(s)


# -- distilling ----------------------------------------------------------------


class DistilResult(NamedTuple):
    graph: ColouredGraph
    cone: frozenset[int]
    trace: DistilTrace

    @property
    def clique_colour(self) -> int:
        """Index of the only nonempty colour layer (1 if all are empty)."""
        for j, g in enumerate(self.graph.colours, start=1):
            if g.num_edges():
                return j
        return 1

    @property
    def clique(self) -> frozenset[int]:
        g = self.graph.layer(self.clique_colour) if self.graph.q else Graph.empty(self.graph.n)
        touched = frozenset(v for v in range(g.n) if g.adj[v])
        if touched:
            return touched
        spare = [v for v in range(self.graph.n) if v not in self.cone]
        return frozenset(spare[:1])

    @property
    def kappa(self) -> int:
        return (len(self.clique) - 1) // 2


def distil(cg: ColouredGraph, ells: Sequence[int] = DEFAULT_ELLS) -> DistilResult:
    """Reduce a plain q-colouring to one odd clique plus an uncoloured cone."""
    if cg.layer(0).num_edges():
        raise PreconditionError("distil takes a colouring without uncoloured edges")
    for j, g in enumerate(cg.colours, start=1):
        if 2 * matching_number(g) >= cg.n:
            raise PreconditionError(f"colour {j} has a perfect matching")
    if mns(cg) >= cg.n:
        raise PreconditionError(f"mns = {mns(cg)} is not below n = {cg.n}")

    trace = DistilTrace(tuple(ells))
    cg = ColouredGraph(cg.layers, frozenset())
    trace.record("input", cg)
    for j in range(1, cg.q + 1):
        cg = cg.with_layer(j, ad_complete(cg.layer(j)))
        trace.record("ad_complete", cg, j)
    cg, t = decycle(cg, trace)
    cg, s = peel(cg, trace)
    return DistilResult(cg, t | s, trace)


def check_distil(before: ColouredGraph, result: DistilResult,
                 ells: Iterable[int] = DEFAULT_ELLS) -> list[tuple[str, bool]]:
    """Evaluate the seven output guarantees of distilling by recomputation."""
    after, s = result.graph, result.cone
    nonempty = [j for j, g in enumerate(after.colours, start=1) if g.num_edges()]
    k = result.clique
    kappa = result.kappa
    g1 = after.layer(result.clique_colour) if after.q else Graph.empty(after.n)
    expect = Graph.empty(after.n)
    if len(k) > 1:
        km = to_mask(k)
        expect = expect.join_mask(km, km)
    nu_b, nu_a = nu_vector(before), nu_vector(after)
    target = tuple(kappa if j == result.clique_colour else 0 for j in range(1, after.q + 1))
    g0_edges = after.layer(0).edges()
    return [
        ("one_colour", len(nonempty) <= 1),
        ("odd_clique", g1 == expect and len(k) % 2 == 1 and not k & s),
        ("m_ell", all(after.m_ell(ell) >= before.m_ell(ell) for ell in ells)),
        ("nu", nu_a == target and all(a <= b for a, b in zip(nu_a, nu_b))),
        ("mns", mns(before) >= mns(after) + len(s) and mns(after) == kappa),
        ("cover", all(u in s or v in s for u, v in g0_edges)),
        ("clique_cone", is_clique_cone(after.underlying(), k, s)),
    ]


# -- recolouring ---------------------------------------------------------------


def recolour(cg: ColouredGraph, s: Iterable[int], kappa: int, t,
             clique_colour: int = 1, trace: DistilTrace | None = None) -> ColouredGraph:
    """Colour every uncoloured edge by giving each cone vertex a colour.

    Cone vertices are handed out in increasing order, filling colours in
    increasing order up to their spare matching capacity; an edge between
    two cone vertices takes the lower of their colours.
    """
    p: MatchingProfile = as_profile(t)
    s = sorted(set(s))
    if p.q != cg.q:
        raise ValueError(f"profile has {p.q} colours, graph has {cg.q}")
    if not 1 <= clique_colour <= cg.q:
        raise ValueError(f"clique colour {clique_colour} out of range")
    s_mask = to_mask(s)
    if any(not (s_mask >> u & 1 or s_mask >> v & 1) for u, v in cg.layer(0).edges()):
        raise PreconditionError("S must cover the uncoloured edges")
    cap = [x - 1 for x in p.t]
    cap[clique_colour - 1] -= kappa
    if min(cap) < 0:
        raise PreconditionError(f"kappa = {kappa} exceeds the clique colour's capacity")
    if sum(cap) < len(s):
        raise PreconditionError(f"capacity {sum(cap)} is below |S| = {len(s)}")

    owner: dict[int, int] = {}
    j = 0
    for v in s:
        while cap[j] == 0:
            j += 1
        owner[v] = j + 1
        cap[j] -= 1

    layers = [Graph.empty(cg.n)] + list(cg.colours)
    extra: list[list[tuple[int, int]]] = [[] for _ in layers]
    for u, v in cg.layer(0).edges():
        extra[min(owner.get(u, cg.q + 1), owner.get(v, cg.q + 1))].append((u, v))
    for c in range(1, len(layers)):
        layers[c] = layers[c].add_edges(extra[c])
    out = ColouredGraph(tuple(layers))
    _note(trace, "recolour", out, None, S=s)
    return out
