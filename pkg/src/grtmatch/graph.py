"""Simple undirected graphs on ``0..n-1`` with bit-set adjacency.

Includes maximum matching (Edmonds' blossom algorithm), the Gallai-Edmonds
decomposition and exact clique counting.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

MAX_VERTICES = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour bit set of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, n)")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def _unchecked(cls, n: int, adj: Iterable[int]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    # -- queries ------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    # -- derived graphs (all return new graphs) -----------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._unchecked(self.n, adj)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph._unchecked(self.n, adj)

    def join_mask(self, a: int, b: int) -> Graph:
        """Add every edge between bit sets ``a`` and ``b`` (loops skipped)."""
        adj = list(self.adj)
        for u in bits(a):
            adj[u] |= b & ~(1 << u)
        for v in bits(b):
            adj[v] |= a & ~(1 << v)
        return Graph._unchecked(self.n, adj)

    def isolate(self, vertices: Iterable[int] | int) -> Graph:
        """Delete every edge incident to the given vertices; ``n`` is kept."""
        mask = 1 << vertices if isinstance(vertices, int) else to_mask(vertices)
        adj = [0 if mask >> v & 1 else nb & ~mask for v, nb in enumerate(self.adj)]
        return Graph._unchecked(self.n, adj)

    def union(self, other: Graph) -> Graph:
        _same_order(self, other)
        return Graph._unchecked(self.n, (a | b for a, b in zip(self.adj, other.adj)))

    def difference(self, other: Graph) -> Graph:
        _same_order(self, other)
        return Graph._unchecked(self.n, (a & ~b for a, b in zip(self.adj, other.adj)))

    def subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the label map."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            adj.append(to_mask(index[u] for u in bits(self.adj[v]) if u in index))
        return Graph._unchecked(len(order), adj), order

    def replace_induced(self, order: list[int], sub: Graph) -> Graph:
        """Overwrite the edges inside ``order`` with those of ``sub`` (labels mapped by ``order``)."""
        inside = to_mask(order)
        adj = [nb & ~inside if inside >> v & 1 else nb for v, nb in enumerate(self.adj)]
        for i, v in enumerate(order):
            adj[v] |= to_mask(order[j] for j in bits(sub.adj[i]))
        return Graph._unchecked(self.n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _same_order(a: Graph, b: Graph) -> None:
    if a.n != b.n:
        raise ValueError(f"graphs have different orders {a.n} != {b.n}")


# -- matchings ---------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]
    covered: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)


def _blossom(n: int, adj: list[list[int]]) -> list[int]:
    match = [-1] * n
    # Greedy start; augmentation fixes any suboptimal choice.
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    def find_path(root: int) -> list[tuple[int, int]] | None:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return augmenting_pairs(to, parent)
                    used[match[to]] = True
                    queue.append(match[to])
        return None

    def augmenting_pairs(end: int, parent: list[int]) -> list[tuple[int, int]]:
        out = []
        v = end
        while v != -1:
            pv = parent[v]
            out.append((v, pv))
            v = match[pv]
        return out

    for root in range(n):
        if match[root] == -1 and adj[root]:
            path = find_path(root)
            if path is not None:
                for v, pv in path:
                    match[v], match[pv] = pv, v
    return match


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of ``g``; deterministic for a fixed input."""
    adj = [list(bits(nb)) for nb in g.adj]
    match = _blossom(g.n, adj)
    edges = frozenset((v, u) for v, u in enumerate(match) if v < u)
    covered = frozenset(v for v, u in enumerate(match) if u != -1)
    return Matching(edges, covered)


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


# -- Gallai-Edmonds ------------------------------------------------------------


@dataclass(frozen=True)
class GEDecomposition:
    C: frozenset[int]
    A: frozenset[int]
    D: frozenset[int]
    d_components: tuple[tuple[int, ...], ...]

    def as_triple(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return self.C, self.A, self.D


def components(g: Graph, u: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of ``g[u]``, each sorted, ordered by minimum element."""
    remaining = to_mask(u)
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        out.append(tuple(bits(comp)))
    return out


def inessential_vertices(g: Graph) -> frozenset[int]:
    nu = matching_number(g)
    return frozenset(v for v in range(g.n) if matching_number(g.isolate(v)) == nu)


def ge_decompose(g: Graph) -> GEDecomposition:
    """Gallai-Edmonds decomposition by the definition: ``v`` is in ``D`` iff
    removing it leaves the matching number unchanged."""
    D = inessential_vertices(g)
    d_mask = to_mask(D)
    A = frozenset(v for v in range(g.n) if not d_mask >> v & 1 and g.adj[v] & d_mask)
    C = frozenset(range(g.n)) - D - A
    return GEDecomposition(C, A, D, tuple(components(g, D)))


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    half = (g.n - 1) // 2
    return all(matching_number(g.isolate(v)) == half for v in range(g.n))


# -- cliques -----------------------------------------------------------------


def count_cliques(g: Graph, ell: int) -> int:
    """Exact number of ``ell``-vertex complete subgraphs.

    Uses pivoted recursion: every clique of the graph is represented exactly
    once as ``held`` vertices plus any subset of the ``pivots`` collected on a
    root-to-leaf path, so each leaf contributes ``C(pivots, ell - held)``.
    """
    if ell < 1:
        raise ValueError(f"clique size must be >= 1, got {ell}")
    if ell == 1:
        return g.n
    if ell == 2:
        return g.num_edges()
    adj = g.adj
    total = 0

    def rec(cand: int, held: int, pivots: int) -> None:
        nonlocal total
        if held > ell:
            return
        if not cand:
            total += comb(pivots, ell - held)
            return
        if held + pivots + cand.bit_count() < ell:
            return
        pivot, best = -1, -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > best:
                pivot, best = v, d
        rec(adj[pivot] & cand, held, pivots + 1)
        rest = cand & ~adj[pivot] & ~(1 << pivot)
        cand &= ~(1 << pivot)
        for v in bits(rest):
            rec(adj[v] & cand, held + 1, pivots)
            cand &= ~(1 << v)

    rec(g.vertex_mask, 0, 0)
    return total
