"""Multi-coloured graphs with an uncoloured layer, and the clique hypergraph
built from the Gallai-Edmonds decompositions of the colour classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import PreconditionError
from .graph import (
    GEDecomposition,
    Graph,
    bits,
    count_cliques,
    ge_decompose,
    matching_number,
    to_mask,
)


@dataclass(frozen=True)
class ColouredGraph:
    """Layers ``(G_0, G_1, ..., G_q)`` on a shared vertex set.

    ``G_0`` holds the uncoloured edges. ``theta`` is the set of vertices
    universal in ``G_0``; when ``G_0`` is complete it cannot be read off the
    degrees, so a designated set of size at least ``n - 1`` is stored instead.
    Edges may carry several colours.
    """

    layers: tuple[Graph, ...]
    theta: frozenset[int] = None  # type: ignore[assignment]

    def __post_init__(self):
        if not self.layers:
            raise ValueError("need at least the uncoloured layer")
        n = self.layers[0].n
        if any(g.n != n for g in self.layers):
            raise ValueError("layers have different vertex counts")
        object.__setattr__(self, "layers", tuple(self.layers))
        universal = _universal(self.layers[0])
        if self.theta is None:
            object.__setattr__(self, "theta", universal)
            return
        theta = frozenset(self.theta)
        object.__setattr__(self, "theta", theta)
        if any(not 0 <= v < n for v in theta):
            raise ValueError("theta contains a vertex outside [0, n)")
        if _is_complete(self.layers[0]):
            if len(theta) < n - 1:
                raise ValueError(f"designated theta has size {len(theta)} < n - 1 = {n - 1}")
        elif theta != universal:
            raise ValueError("theta must equal the universal vertices of the uncoloured layer")

    @classmethod
    def from_colours(cls, colours: Iterable[Graph], uncoloured: Graph | None = None,
                     theta: Iterable[int] | None = None) -> ColouredGraph:
        colours = list(colours)
        if not colours and uncoloured is None:
            raise ValueError("need at least one layer")
        n = colours[0].n if colours else uncoloured.n
        g0 = uncoloured if uncoloured is not None else Graph.empty(n)
        return cls((g0, *colours), None if theta is None else frozenset(theta))

    @property
    def n(self) -> int:
        return self.layers[0].n

    @property
    def q(self) -> int:
        return len(self.layers) - 1

    @property
    def colours(self) -> tuple[Graph, ...]:
        return self.layers[1:]

    def layer(self, j: int) -> Graph:
        return self.layers[j]

    def underlying(self) -> Graph:
        adj = [0] * self.n
        for g in self.layers:
            adj = [a | b for a, b in zip(adj, g.adj)]
        return Graph._unchecked(self.n, adj)

    def with_layer(self, j: int, g: Graph) -> ColouredGraph:
        if j == 0:
            raise ValueError("use uncolour() to change the uncoloured layer")
        layers = list(self.layers)
        layers[j] = g
        return ColouredGraph(tuple(layers), self.theta)

    def restrict(self, vertices: Iterable[int]) -> tuple[ColouredGraph, list[int]]:
        """Induced sub-colouring on ``vertices``, relabelled; returns it with the label map."""
        subs = [g.subgraph(vertices) for g in self.layers]
        order = subs[0][1]
        index = {v: i for i, v in enumerate(order)}
        layers = tuple(s for s, _ in subs)
        g0 = layers[0]
        theta = None
        if _is_complete(g0):
            theta = frozenset(index[v] for v in self.theta if v in index)
            if len(theta) < g0.n - 1:
                theta = None
        return ColouredGraph(layers, theta), order

    def m_ell(self, ell: int) -> int:
        return count_cliques(self.underlying(), ell)

    def __repr__(self) -> str:
        body = ", ".join(f"E{j}={g.edges()}" for j, g in enumerate(self.layers))
        return f"ColouredGraph(n={self.n}, q={self.q}, {body}, theta={sorted(self.theta)})"


def _is_complete(g: Graph) -> bool:
    full = g.vertex_mask
    return all(nb | 1 << v == full for v, nb in enumerate(g.adj))


def _universal(g: Graph) -> frozenset[int]:
    full = g.vertex_mask
    return frozenset(v for v, nb in enumerate(g.adj) if nb | 1 << v == full)


def nu_vector(cg: ColouredGraph) -> tuple[int, ...]:
    return tuple(matching_number(g) for g in cg.colours)


def mns(cg: ColouredGraph) -> int:
    return sum(nu_vector(cg))


# -- clique hypergraph ---------------------------------------------------------


class HyperEdge(NamedTuple):
    colour: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class CliqueHypergraph:
    """Nontrivial D-cliques per colour (``k_edges``) and nonempty A-sets (``a_sets``).

    ``colour == 0`` marks the singleton fallback edge used when no colour
    has a nontrivial clique.
    """

    n: int
    k_edges: tuple[HyperEdge, ...]
    a_sets: tuple[HyperEdge, ...]

    @property
    def is_fallback(self) -> bool:
        return len(self.k_edges) == 1 and self.k_edges[0].colour == 0

    def __len__(self) -> int:
        return len(self.k_edges)


def clique_hypergraph(cg: ColouredGraph, decompositions: list[GEDecomposition] | None = None
                      ) -> CliqueHypergraph:
    if decompositions is None:
        decompositions = [ge_decompose(g) for g in cg.colours]
    k_edges, a_sets = [], []
    for j, (g, ge) in enumerate(zip(cg.colours, decompositions), start=1):
        for comp in ge.d_components:
            if len(comp) < 2:
                continue
            if not g.is_clique(comp):
                raise PreconditionError(f"colour {j}: D-component {comp} is not a clique")
            k_edges.append(HyperEdge(j, comp))
        if ge.A:
            a_sets.append(HyperEdge(j, tuple(sorted(ge.A))))
    # Within a colour the cliques are already sorted by minimum vertex.
    if not k_edges:
        k_edges = [HyperEdge(0, (0,))] if cg.n else []
    return CliqueHypergraph(cg.n, tuple(k_edges), tuple(a_sets))


def _incidence_degrees(edges: Iterable[Iterable[int]]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    return deg


def is_hyperforest(h: CliqueHypergraph | Iterable[Iterable[int]]) -> bool:
    """True iff the vertex/edge incidence graph has no cycle (union-find)."""
    edges = [e.vertices for e in h.k_edges] if isinstance(h, CliqueHypergraph) else list(h)
    parent: dict[object, object] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(edges):
        node = ("edge", i)
        for v in set(e):
            a, b = find(node), find(("vertex", v))
            if a == b:
                return False
            parent[a] = b
    return True


class Leaf(NamedTuple):
    edge: HyperEdge
    link: int
    has_link: bool


def leaves(h: CliqueHypergraph) -> list[Leaf]:
    """Leaf-edges of a hyperforest with their links.

    A leaf-edge has at most one vertex lying in another edge; that vertex is
    the link. Without one, the lowest-index vertex of the edge stands in.
    """
    if not is_hyperforest(h):
        raise PreconditionError("leaves() needs a hyperforest")
    deg = _incidence_degrees(e.vertices for e in h.k_edges)
    out = []
    for e in h.k_edges:
        shared = [v for v in e.vertices if deg[v] >= 2]
        if len(shared) <= 1:
            out.append(Leaf(e, shared[0] if shared else min(e.vertices), bool(shared)))
    return out


# -- structural predicates -----------------------------------------------------


def is_cad_complete(g: Graph, ge: GEDecomposition | None = None) -> bool:
    ge = ge or ge_decompose(g)
    full = g.vertex_mask
    c = to_mask(ge.C)
    for v in ge.A:
        if g.adj[v] | 1 << v != full:
            return False
    for v in ge.C:
        if (g.adj[v] | 1 << v) & c != c:
            return False
    return all(g.is_clique(comp) for comp in ge.d_components)


def is_ad_complete(g: Graph, ge: GEDecomposition | None = None) -> bool:
    ge = ge or ge_decompose(g)
    return not ge.C and is_cad_complete(g, ge)


def is_d_complete(g: Graph, ge: GEDecomposition | None = None) -> bool:
    """Disjoint union of (necessarily odd) cliques."""
    ge = ge or ge_decompose(g)
    return not ge.C and not ge.A and all(g.is_clique(c) for c in ge.d_components)


class Flags(NamedTuple):
    proper: bool
    AD_complete: bool
    D_complete: bool
    D_acyclic: bool
    Theta_complete: bool


def is_proper(cg: ColouredGraph) -> bool:
    g0 = cg.layers[0]
    for g in cg.colours:
        if any(a & b for a, b in zip(g0.adj, g.adj)):
            return False
    theta = to_mask(cg.theta)
    return all(v in cg.theta or not nb & ~theta for v, nb in enumerate(g0.adj))


def is_theta_complete(cg: ColouredGraph) -> bool:
    rest = [v for v in range(cg.n) if v not in cg.theta]
    sub, _ = cg.restrict(rest)
    return all(is_ad_complete(g) for g in sub.colours)


def predicates(cg: ColouredGraph) -> Flags:
    ges = [ge_decompose(g) for g in cg.colours]
    ad = all(is_ad_complete(g, ge) for g, ge in zip(cg.colours, ges))
    d = all(is_d_complete(g, ge) for g, ge in zip(cg.colours, ges))
    acyclic = d and is_hyperforest(clique_hypergraph(cg, ges))
    return Flags(is_proper(cg), ad, d, acyclic, is_theta_complete(cg))


# -- uncolouring ---------------------------------------------------------------


def uncolour(cg: ColouredGraph, t: Iterable[int]) -> ColouredGraph:
    """Strip every coloured edge touching ``t`` and join ``t`` to everything in ``G_0``."""
    t_mask = to_mask(t)
    if not t_mask:
        return cg
    g0 = cg.layers[0].join_mask(t_mask, cg.layers[0].vertex_mask)
    colours = [g.isolate(bits(t_mask)) for g in cg.colours]
    theta = cg.theta | frozenset(bits(t_mask))
    if not _is_complete(g0):
        theta = _universal(g0)
    return ColouredGraph((g0, *colours), theta)
