"""Exact maximisation of the surplus function

    sigma(T) = sum_X floor(|T & X| / 2) + sum_Y |T & Y| - |T|

over subsets ``T`` of a finite universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import bits, to_mask


@dataclass(frozen=True)
class SigmaProblem:
    universe: frozenset[int]
    x_edges: tuple[frozenset[int], ...]
    y_edges: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        object.__setattr__(self, "x_edges", tuple(frozenset(x) for x in self.x_edges))
        object.__setattr__(self, "y_edges", tuple(frozenset(y) for y in self.y_edges))
        for e in self.x_edges + self.y_edges:
            if not e <= self.universe:
                raise ValueError(f"edge {sorted(e)} leaves the universe")

    @classmethod
    def build(cls, universe: Iterable[int], x_edges: Iterable[Iterable[int]] = (),
              y_edges: Iterable[Iterable[int]] = ()) -> SigmaProblem:
        return cls(frozenset(universe), tuple(map(frozenset, x_edges)),
                   tuple(map(frozenset, y_edges)))

    def relevant(self) -> frozenset[int]:
        """Vertices in some edge; any other vertex only lowers sigma."""
        out: set[int] = set()
        for e in self.x_edges + self.y_edges:
            out |= e
        return frozenset(out)


def sigma_value(p: SigmaProblem, t: Iterable[int]) -> int:
    t = frozenset(t)
    if not t <= p.universe:
        raise ValueError("T must be a subset of the universe")
    return (sum(len(t & x) // 2 for x in p.x_edges)
            + sum(len(t & y) for y in p.y_edges) - len(t))


def sigma_maximal(p: SigmaProblem) -> frozenset[int]:
    """A sigma-maximal set: the largest global maximiser, ties broken towards
    avoiding high-index vertices (smallest bit mask).

    Every Y-vertex lies in every sigma-maximal set, so those are fixed up
    front; the remaining X-hypergraph splits into connected pieces that are
    solved independently by branch and bound.
    """
    x_masks = [to_mask(x) for x in p.x_edges]
    y_masks = [to_mask(y) for y in p.y_edges]
    forced = 0
    for y in y_masks:
        forced |= y
    free = to_mask(p.relevant()) & ~forced

    result = forced
    for piece in _pieces(free, x_masks):
        result |= _solve_piece(piece, forced, x_masks)
    return frozenset(bits(result))


def _pieces(free: int, x_masks: list[int]) -> list[int]:
    """Connected pieces of the free vertices, linked through shared X-edges."""
    out = []
    remaining = free
    while remaining:
        comp = remaining & -remaining
        grown = True
        while grown:
            grown = False
            for x in x_masks:
                if x & comp and x & remaining & ~comp:
                    comp |= x & remaining
                    grown = True
        remaining &= ~comp
        out.append(comp)
    return out


def _solve_piece(piece: int, forced: int, x_masks: list[int]) -> int:
    xs = [x for x in x_masks if x & piece]
    order = list(bits(piece))
    # Each X only sees the fixed vertices plus this piece's choices.
    base_counts = [(x & forced).bit_count() for x in xs]
    memb = [[i for i, x in enumerate(xs) if x >> v & 1] for v in order]
    # gain2[k]: twice the optimistic marginal of the vertices order[k:].
    gain2 = [0] * (len(order) + 1)
    for k in range(len(order) - 1, -1, -1):
        gain2[k] = gain2[k + 1] + max(0, len(memb[k]) - 2)

    counts = list(base_counts)
    best: list = [None]  # (sigma gain, size, -mask)

    def value() -> int:
        return sum(c // 2 - b // 2 for c, b in zip(counts, base_counts))

    def rec(k: int, chosen: int, size: int) -> None:
        cur = value() - size
        if k == len(order):
            key = (cur, size, -chosen)
            if best[0] is None or key > best[0]:
                best[0] = key
            return
        if best[0] is not None:
            odd = sum(1 for c, x in zip(counts, xs) if c & 1 and x & _rest_mask[k])
            ub = cur + (gain2[k] + odd) // 2
            if ub < best[0][0] or (ub == best[0][0] and size + len(order) - k < best[0][1]):
                return
        v = order[k]
        for i in memb[k]:
            counts[i] += 1
        rec(k + 1, chosen | 1 << v, size + 1)
        for i in memb[k]:
            counts[i] -= 1
        rec(k + 1, chosen, size)

    _rest_mask = [0] * (len(order) + 1)
    for k in range(len(order) - 1, -1, -1):
        _rest_mask[k] = _rest_mask[k + 1] | 1 << order[k]

    rec(0, 0, 0)
    gain, _, neg_mask = best[0]
    if gain < 0:
        return 0
    return -neg_mask
