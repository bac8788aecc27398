"""Closed-form Betti numbers, depths and Cohen-Macaulay defects for cones,
joins, wheels and the graphs G_{r,b}.

Everything here is arithmetic on already-known data (Betti tables, clique
counts, depths); no Groebner computation happens in this module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import graphs
from .graphs import CliqueVector
from .resolution import BettiTable

log = logging.getLogger(__name__)


class FormulaError(ValueError):
    """Input outside the hypotheses of a formula."""


class CompleteInputError(FormulaError):
    pass


class UnsupportedNError(FormulaError):
    pass


class InvalidDimError(FormulaError):
    pass


class BadOrientationError(FormulaError):
    pass


class InvalidPartsError(FormulaError):
    pass


class InvalidPairError(FormulaError):
    pass


def binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out


def linear_strand(cliques: CliqueVector):
    """beta_{i,i+1} = i * k_{i+1} for every i >= 1 (zero entries dropped)."""
    return {i: i * cliques[i + 1] for i in range(1, len(cliques)) if cliques[i + 1]}


def betti_cone_formula(betti_h: BettiTable, cliques_h: CliqueVector, n: int) -> BettiTable:
    """Betti table of S/J_{v*H} from the table and clique counts of a non-complete H on n vertices."""
    if cliques_h[n] == 1 and n >= 1:
        raise CompleteInputError("H is complete; the cone formula assumes a non-complete H")
    if betti_h.n != n:
        raise FormulaError(f"table is for {betti_h.n} vertices, expected {n}")
    b = betti_h.beta
    k = cliques_h.__getitem__
    top_i = max(betti_h.pd + 2, n + 1)
    top_j = max(betti_h.reg, 2)
    entries = {(0, 0): 1}
    for i in range(1, top_i + 1):
        entries[(i, i + 1)] = i * (k(i) + k(i + 1))
        val = (b(i, 2) + 2 * b(i - 1, 2) + b(i - 2, 2)
               + (i - 1) * binom(n + 1, i + 1) - (i - 1) * k(i) - (i - 1) * k(i + 1))
        if val < 0:
            log.error("cone formula gave beta_{%d,%d} = %d < 0; input table is inconsistent", i, i + 2, val)
            val = 0
        entries[(i, i + 2)] = val
        for j in range(3, top_j + 1):
            entries[(i, i + j)] = b(i, j) + 2 * b(i - 1, j) + b(i - 2, j)
    ct = (2 * (n + 1), 2 * (n + 1)) if betti_h.is_complete else None
    return BettiTable(n + 1, entries, betti_h.p, ct)


def wheel_betti(n: int, p: int = 32003) -> BettiTable:
    """Full Betti table of the wheel v * C_n for n >= 5."""
    if n == 4:
        raise UnsupportedNError("n = 4: rows j=2 and j=n-2 coincide; compute W_4 from the cone formula instead")
    if n < 4:
        raise UnsupportedNError(f"wheel needs n >= 5 here, got {n}")
    c = binom
    e = {(0, 0): 1, (1, 2): 2 * n, (2, 3): 2 * n}
    e[(2, 4)] = c(n, 2) + c(n + 1, 3) - n
    e[(3, 5)] = 2 * c(n, 2) + 2 * c(n + 1, 4)
    e[(4, 6)] = c(n, 2) + 3 * c(n + 1, 5)
    for i in range(5, n + 1):
        e[(i, i + 2)] = (i - 1) * c(n + 1, i + 1)
    for i in range(3, n - 2):
        e[(i, 2 * i)] = c(n, i)
        e[(i + 1, 2 * i + 1)] = 2 * c(n, i)
        e[(i + 2, 2 * i + 2)] = c(n, i)
    for i in range(2, n - 2):
        e[(i, i + n - 2)] = (n + 1 - i) * c(n + 2, i - 2) + 2 * c(n + 1, i - 3)
    e[(n - 2, 2 * n - 4)] = c(n, 2) + 3 * c(n + 2, 6) + 2 * c(n + 1, 6)
    e[(n - 1, 2 * n - 3)] = 2 * c(n + 1, 3) + 2 * c(n, 4) + 4 * c(n + 1, 5)
    e[(n, 2 * n - 2)] = c(n - 1, 2) - 1 + c(n + 2, 4) + 2 * c(n + 1, 4)
    e[(n + 1, 2 * n - 1)] = 2 * c(n - 1, 2) - 2 + 2 * c(n, 3)
    e[(n + 2, 2 * n)] = c(n - 1, 2) - 1
    return BettiTable(n + 1, e, p, (2 * (n + 1), 2 * (n + 1)))


def depth_cone(depth_h: int, n: int, h_connected: bool) -> int:
    """depth of S/J_{v*H}: unchanged for connected H, capped at n+2 otherwise."""
    return depth_h if h_connected else min(depth_h, n + 2)


def cmdef_cone(dim_h: int, cmdef_h: int, n: int) -> int:
    if dim_h < n + 1:
        raise InvalidDimError(f"dim {dim_h} < n+1 = {n + 1} is impossible for a connected graph")
    return cmdef_h if dim_h >= n + 2 else cmdef_h + 1


def cmdef_complete_join(q: int, dim_h: int, cmdef_h: int, n: int) -> int:
    """cmdef of K_q * H for connected H; q = 1 is the cone."""
    if q < 1:
        raise FormulaError("q must be positive")
    if dim_h < n + 1:
        raise InvalidDimError(f"dim {dim_h} < n+1 = {n + 1} is impossible for a connected graph")
    if dim_h >= n + q + 1:
        return cmdef_h
    return n + q + 1 - dim_h + cmdef_h


def depth_join(depth_1, depth_2, n1, n2, conn_1, conn_2) -> int:
    """depth of S/J_{G1*G2} for non-complete G1, G2 on n1, n2 >= 2 vertices.

    Mixed case must be passed with the connected graph first; the
    disconnected/disconnected case needs n2 >= n1.
    """
    if n1 < 2 or n2 < 2:
        raise FormulaError("join formulas need n1, n2 >= 2")
    if conn_1 and conn_2:
        return min(depth_1, depth_2)
    if conn_1 and not conn_2:
        return min(depth_1, depth_2, n2 + 2)
    if conn_2:
        raise BadOrientationError("pass the connected factor first")
    if n2 < n1:
        raise BadOrientationError("two disconnected factors need n2 >= n1")
    return min(depth_1, depth_2, n1 + 2)


def depth_multipartite(parts) -> int:
    parts = sorted(parts)
    if len(parts) < 2:
        raise InvalidPartsError("need at least two parts")
    if parts[0] < 2:
        raise InvalidPartsError("every part must have size >= 2")
    return parts[0] + 2


def depth_disjoint_union(depths) -> int:
    """Resolutions tensor over disjoint variable sets, so depths add (an isolated vertex has depth 2)."""
    return sum(depths)


def extremal_transfer_cone(extremal, q: int = 1):
    """Positions (i, j, value) of extremal Betti numbers after q cones over a connected non-complete H."""
    return sorted((i + 2 * q, j, v) for i, j, v in extremal)


@dataclass(frozen=True)
class GrbProfile:
    r: int
    b: int
    n: int
    p: int
    depth: int
    extremal: tuple

    def to_json(self):
        return {"r": self.r, "b": self.b, "n": self.n, "pd": self.p, "depth": self.depth,
                "reg": self.r, "extremal": [list(e) for e in self.extremal]}


def grb_profile(r: int, b: int) -> GrbProfile:
    """Predicted invariants of P_{r-b+2} * ... * P_{r+1}.

    Extremal Betti numbers are beta_{p-i, p+r-b+1} = 1 for 0 <= i < b, i.e.
    (homological p-i, row r-b+1+i).
    """
    if not (1 <= b <= r - 1):
        raise InvalidPairError(f"need 1 <= b <= r-1, got (r, b) = ({r}, {b})")
    n = b * r - b * (b - 3) // 2
    p = (2 * b - 1) * r - (b - 1) * (b - 3)
    depth = r - b + 3
    extremal = tuple(sorted((p - i, r - b + 1 + i, 1) for i in range(b)))
    return GrbProfile(r, b, n, p, depth, extremal)


def pd_lower_bound(n: int, kappa: int) -> int:
    """pd(S/J_G) >= n - 2 + kappa(G) for connected non-complete G."""
    return n - 2 + kappa


def _is_path(g):
    return g.is_connected() and len(g.edges) == g.n - 1 and all(len(g.neighbors(v)) <= 2 for v in g.vertices)


def predict_depth(g, leaf=None):
    """depth of S/J_G assembled from the union, cone and join theorems.

    Closed-form leaves: a vertex (2), complete graphs and paths (n + 1, both
    have pd = n - 1). Any other indecomposable piece goes to ``leaf(g)``;
    without a leaf callback such pieces make the result None.
    """
    if g.n == 1:
        return 2
    if not g.is_connected():
        parts = [predict_depth(graphs.induced_subgraph(g, c), leaf) for c in graphs.components(g)]
        return None if None in parts else depth_disjoint_union(parts)
    if g.is_complete() or _is_path(g):
        return g.n + 1
    factors = graphs.join_factors(g)
    if len(factors) == 1:
        return leaf(g) if leaf else None
    apexes = [f for f in factors if len(f) == 1]
    heavy = [graphs.induced_subgraph(g, f) for f in factors if len(f) > 1]
    # every heavy factor has a connected complement, so it is not complete
    h = heavy[0]
    d = predict_depth(h, leaf)
    if d is None:
        return None
    for f in heavy[1:]:
        d2 = predict_depth(f, leaf)
        if d2 is None:
            return None
        first, second = (h, d), (f, d2)
        c1, c2 = h.is_connected(), f.is_connected()
        if (c2 and not c1) or (not c1 and not c2 and f.n < h.n):
            first, second = second, first
        (g1, e1), (g2, e2) = first, second
        d = depth_join(e1, e2, g1.n, g2.n, g1.is_connected(), g2.is_connected())
        h = graphs.join(h, f)
    if apexes:
        d = depth_cone(d, h.n, h.is_connected())
    return d
