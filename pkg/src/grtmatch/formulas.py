"""Closed-form clique counts, the generalised Ramsey-Turan value for
matchings, its two extremal colourings, and the edge-density asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

from .colouring import ColouredGraph
from .graph import Graph, to_mask


def binom(a: int, b: int) -> int:
    """``C(a, b)`` with the convention that it vanishes outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class MatchingProfile:
    """Forbidden matching sizes ``t = (t_1, ..., t_q)``: colour ``j`` must have
    matching number at most ``t_j - 1``."""

    t: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if not t:
            raise ValueError("profile needs at least one colour")
        if any(x < 1 for x in t):
            raise ValueError(f"thresholds must be positive, got {t}")
        object.__setattr__(self, "t", t)

    @classmethod
    def parse(cls, text: str) -> MatchingProfile:
        return cls(tuple(int(part) for part in text.split(",") if part.strip()))

    @property
    def q(self) -> int:
        return len(self.t)

    @property
    def t_max(self) -> int:
        return max(self.t)

    @property
    def lam(self) -> int:
        return sum(x - 1 for x in self.t)

    @property
    def ramsey(self) -> int:
        return self.t_max + self.lam + 1

    def admits(self, nu: Iterable[int]) -> bool:
        """True iff a colouring with these per-colour matching numbers avoids ``tK_2``."""
        return all(v <= x - 1 for v, x in zip(nu, self.t))

    def __str__(self) -> str:
        return ",".join(map(str, self.t))


def as_profile(t) -> MatchingProfile:
    if isinstance(t, MatchingProfile):
        return t
    if isinstance(t, str):
        return MatchingProfile.parse(t)
    if isinstance(t, int):
        return MatchingProfile((t,))
    return MatchingProfile(tuple(t))


def phi(ell: int, n: int, x: int, y: int) -> int:
    """Number of ``K_ell`` in the clique-cone graph ``G_{n,x,y}``."""
    if x < 0 or y < 0 or x + y > n:
        raise ValueError(f"need 0 <= x, y and x + y <= n, got x={x}, y={y}, n={n}")
    return binom(x + y, ell) + binom(y, ell - 1) * (n - x - y)


class GRTValue(NamedTuple):
    value: int
    regime: str
    sparse: int | None
    dense: int | None


def grt(ell: int, n: int, profile) -> GRTValue:
    """Maximum ``K_ell`` count over ``n``-vertex graphs with a ``tK_2``-free colouring."""
    p = as_profile(profile)
    if ell < 1 or n < 0:
        raise ValueError(f"need ell >= 1 and n >= 0, got ell={ell}, n={n}")
    if n < ell:
        return GRTValue(0, "trivial_zero", None, None)
    if n <= p.t_max + p.lam:
        return GRTValue(binom(n, ell), "complete", None, None)
    sparse = phi(ell, n, 1, p.lam)
    dense = phi(ell, n, 2 * p.t_max - 1, p.lam - p.t_max + 1)
    if sparse >= dense:
        return GRTValue(sparse, "sparse", sparse, dense)
    return GRTValue(dense, "dense", sparse, dense)


def clique_cone_graph(n: int, x: int, y: int) -> Graph:
    """``G_{n,x,y}`` with clique set ``0..x-1`` and cone set ``x..x+y-1``."""
    if x < 0 or y < 0 or x + y > n:
        raise ValueError(f"need 0 <= x, y and x + y <= n, got x={x}, y={y}, n={n}")
    clique = (1 << x) - 1
    cone = ((1 << y) - 1) << x
    return Graph.empty(n).join_mask(clique, clique).join_mask(cone, (1 << n) - 1)


def is_clique_cone(g: Graph, clique: Iterable[int], cone: Iterable[int]) -> bool:
    """True iff ``g`` is exactly the clique-cone graph with the given clique and cone sets."""
    clique, cone = frozenset(clique), frozenset(cone)
    if clique & cone:
        return False
    k, s = to_mask(clique), to_mask(cone)
    target = Graph.empty(g.n).join_mask(k, k).join_mask(s, g.vertex_mask)
    return target == g


def _star_layer(n: int, centres: int) -> Graph:
    return Graph.empty(n).join_mask(centres, (1 << n) - 1)


def sparse_construction(n: int, profile) -> ColouredGraph:
    """Colouring of ``G_{n,1,Lambda}``: colour ``i`` is every edge touching its share
    ``Y_i`` (size ``t_i - 1``) of the cone set. Vertex 0 is the clique set."""
    p = as_profile(profile)
    if n < 1 + p.lam:
        raise ValueError(f"sparse construction needs n >= 1 + Lambda = {1 + p.lam}, got {n}")
    layers, start = [], 1
    for t in p.t:
        share = ((1 << (t - 1)) - 1) << start
        layers.append(_star_layer(n, share))
        start += t - 1
    return ColouredGraph.from_colours(layers)


def dense_construction(n: int, profile) -> ColouredGraph:
    """Colouring of ``G_{n,2t_max-1,Lambda-t_max+1}``: the highest colour attaining
    ``t_max`` is the clique on ``0..2t_max-2``; the other colours take stars
    on consecutive shares of the cone set, in colour order."""
    p = as_profile(profile)
    x = 2 * p.t_max - 1
    y = p.lam - p.t_max + 1
    if n < x + y:
        raise ValueError(f"dense construction needs n >= {x + y}, got {n}")
    big = p.q - 1 - p.t[::-1].index(p.t_max)
    layers, start = [], x
    for j, t in enumerate(p.t):
        if j == big:
            clique = (1 << x) - 1
            layers.append(Graph.empty(n).join_mask(clique, clique))
        else:
            share = ((1 << (t - 1)) - 1) << start
            layers.append(_star_layer(n, share))
            start += t - 1
    return ColouredGraph.from_colours(layers)


def admissible(x: int, y: int, profile) -> bool:
    """Necessary condition ``y <= Lambda - floor(x/2)`` for ``G_{n,x,y}`` to avoid ``tK_2``."""
    if x < 0 or y < 0:
        raise ValueError("x and y must be non-negative")
    return y <= as_profile(profile).lam - x // 2


def g_kappa(ell: int, n: int, profile, kappa: int) -> int:
    """Clique count along the admissible boundary at ``x = 2 kappa + 1``."""
    p = as_profile(profile)
    if not 0 <= kappa <= p.t_max - 1:
        raise ValueError(f"kappa must lie in [0, {p.t_max - 1}], got {kappa}")
    return phi(ell, n, 2 * kappa + 1, p.lam - kappa)


def delta_g(ell: int, n: int, profile, kappa: int) -> int:
    p = as_profile(profile)
    if not 0 <= kappa <= p.t_max - 2:
        raise ValueError(f"kappa must lie in [0, {p.t_max - 2}], got {kappa}")
    return g_kappa(ell, n, p, kappa + 1) - g_kappa(ell, n, p, kappa)


# -- asymptotics for edges -----------------------------------------------------


class Asymptotics(NamedTuple):
    s: float
    d: float
    m_threshold: float
    bound: float


def sparse_rate(q: float, alpha: float) -> float:
    return (1 - math.sqrt(1 - alpha)) / q


def dense_rate(q: float, alpha: float) -> float:
    # Multiplying through by the conjugate cancels the (q - 3) factor, which
    # removes the singularity at q = 3.
    den = (q - 1) + math.sqrt((q - 1) ** 2 - alpha * (q - 3) * (q + 1))
    if den == 0:
        return 0.0
    return alpha / den


def crossing_density(q: float) -> float:
    return 4 * (q * q + 3 * q) / (2 * q + 3) ** 2


def asymptotics(q: int, alpha: float) -> Asymptotics:
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    s = sparse_rate(q, alpha)
    d = dense_rate(q, alpha)
    return Asymptotics(s, d, crossing_density(q), min(s, d))
