"""Simple graphs on vertices 1..n, standard families, products and the
combinatorial invariants used by the binomial edge ideal formulas."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

CLIQUE_CAP = 12
CUTSET_CAP = 15


class GraphError(ValueError):
    """Raised for malformed graphs or invalid family parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        normed = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {{{u},{v}}} out of range 1..{self.n}")
            normed.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n, edges):
        edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v):
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_complete(self):
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_connected(self):
        return len(components(self)) == 1

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def read_graph_json(source):
    """Parse the ``{"n": int, "edges": [[u, v], ...]}`` format.

    ``source`` may be a path, a JSON string or an already decoded dict.
    Loops, duplicate edges, ``u >= v`` and out-of-range endpoints are rejected.
    """
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        data = json.loads(Path(source).read_text())
    elif isinstance(source, str):
        data = json.loads(source)
    else:
        data = source
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphError("graph JSON needs keys 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError("'n' must be an integer")
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"bad edge entry {e!r}")
        u, v = e
        if u >= v:
            raise GraphError(f"edge {e} must satisfy u < v")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_graph_json(g: Graph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)


# -- families ---------------------------------------------------------------

def path(n):
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n):
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def complete(n):
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def edgeless(n):
    if n < 1:
        raise GraphError("edgeless graph needs n >= 1")
    return Graph(n)


def wheel(n):
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    return cone(cycle(n))


def multipartite(*parts):
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise GraphError("multipartite parts must all be >= 1")
    g = edgeless(parts[0])
    for p in parts[1:]:
        g = join(g, edgeless(p))
    return g


def cone(h: Graph) -> Graph:
    """Add vertex n+1 adjacent to every vertex of ``h``."""
    apex = h.n + 1
    return Graph(apex, h.edges | {(u, apex) for u in h.vertices})


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; ``g2`` is shifted by ``g1.n``."""
    s = g1.n
    shifted = {(u + s, v + s) for u, v in g2.edges}
    cross = {(u, v + s) for u in g1.vertices for v in g2.vertices}
    return Graph(g1.n + g2.n, g1.edges | shifted | cross)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, shift = set(), 0
    for g in graphs:
        edges |= {(u + shift, v + shift) for u, v in g.edges}
        shift += g.n
    return Graph(shift, frozenset(edges))


def construct_grb(r, b, n_complete=3):
    """Iterated join P_{r-b+2} * ... * P_{r+1}; ``(1, 1)`` gives K_{n_complete}."""
    if (r, b) == (1, 1):
        return complete(n_complete)
    if not (1 <= b <= r - 1):
        raise GraphError(f"invalid pair (r, b) = ({r}, {b}); need 1 <= b <= r-1")
    g = path(r - b + 2)
    for m in range(r - b + 3, r + 2):
        g = join(g, path(m))
    return g


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "edgeless": (edgeless, 1),
    "wheel": (wheel, 1),
    "star": (lambda n: cone(edgeless(n)), 1),
    "multipartite": (multipartite, None),
    "grb": (construct_grb, 2),
}


def build_family(kind, params):
    try:
        builder, arity = FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}; known: {', '.join(sorted(FAMILIES))}") from None
    params = [int(p) for p in params]
    if arity is not None and len(params) != arity:
        raise GraphError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    if arity is None and not params:
        raise GraphError(f"family {kind!r} needs at least one parameter")
    return builder(*params)


def parse_family(spec: str) -> Graph:
    """Build a graph from ``name:p1,p2,...`` (e.g. ``wheel:5``, ``grb:3,2``)."""
    kind, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise GraphError(f"non-integer parameter in {spec!r}") from None
    return build_family(kind.strip(), params)


# -- structure --------------------------------------------------------------

def induced_subgraph(g: Graph, keep):
    """Induced subgraph relabelled to 1..len(keep), in increasing order of ``keep``."""
    keep = sorted(keep)
    pos = {v: i + 1 for i, v in enumerate(keep)}
    edges = {(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos}
    return Graph(len(keep), frozenset(edges))


def components(g: Graph, within=None):
    """Connected components (as sorted tuples) of ``g`` restricted to ``within``."""
    verts = set(g.vertices if within is None else within)
    adj = g.adjacency()
    comps = []
    while verts:
        start = min(verts)
        stack, seen = [start], {start}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts -= seen
        comps.append(tuple(sorted(seen)))
    return comps


def nontrivial_components(g: Graph):
    return [c for c in components(g) if len(c) > 1]


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(itertools.combinations(g.vertices, 2)) - g.edges)


def join_factors(g: Graph):
    """Vertex sets of the maximal join decomposition (components of the complement)."""
    return components(complement(g))


def neighborhood_completion(g: Graph, v: int) -> Graph:
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} out of range")
    nb = sorted(g.neighbors(v))
    return Graph(g.n, g.edges | set(itertools.combinations(nb, 2)))


def is_clique(g: Graph, verts):
    return all(g.has_edge(u, w) for u, w in itertools.combinations(verts, 2))


def maximal_cliques(g: Graph):
    """Bron-Kerbosch with pivoting."""
    adj = g.adjacency()
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for u in list(p - adj[pivot]):
            expand(r | {u}, p & adj[u], x & adj[u])
            p = p - {u}
            x = x | {u}

    expand(set(), set(g.vertices), set())
    return sorted(out)


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff ``v`` lies in exactly one maximal clique (its neighbourhood is a clique)."""
    return sum(v in c for c in maximal_cliques(g)) == 1


@dataclass(frozen=True)
class CliqueVector:
    counts: tuple

    def __getitem__(self, i):
        """k_i for i >= 1; zero outside 1..n."""
        if 1 <= i <= len(self.counts):
            return self.counts[i - 1]
        return 0

    def __len__(self):
        return len(self.counts)


def clique_vector(g: Graph) -> CliqueVector:
    """Exhaustive count of cliques of every size 1..n."""
    if g.n > CLIQUE_CAP:
        raise GraphError(f"clique enumeration capped at n <= {CLIQUE_CAP}")
    adj = g.adjacency()
    counts = [0] * g.n

    def grow(size, cands):
        counts[size - 1] += 1
        for w in cands:
            grow(size + 1, [u for u in cands if u > w and u in adj[w]])

    for v in g.vertices:
        grow(1, [u for u in adj[v] if u > v])
    return CliqueVector(tuple(counts))


def vertex_connectivity(g: Graph, with_flag=False):
    """Minimum number of vertices whose removal disconnects ``g``.

    Disconnected graphs give 0. K_n has no separating set; n-1 is returned and
    the convention flag is set when ``with_flag`` is true.
    """
    if not g.is_connected():
        return (0, False) if with_flag else 0
    if g.is_complete():
        return (g.n - 1, True) if with_flag else g.n - 1
    for k in range(1, g.n - 1):
        for removed in itertools.combinations(g.vertices, k):
            rest = set(g.vertices) - set(removed)
            if len(components(g, rest)) > 1:
                return (k, False) if with_flag else k
    raise AssertionError("non-complete connected graph without a separating set")


@dataclass(frozen=True)
class CutSet:
    t: tuple
    components: tuple

    @property
    def c_t(self):
        return len(self.components)


def has_cut_point_property(g: Graph, t) -> bool:
    t = set(t)
    rest = set(g.vertices) - t
    base = len(components(g, rest))
    return all(len(components(g, rest | {i})) < base for i in t)


def cut_point_sets(g: Graph):
    """All T in C(G), the empty set first, then by size and lexicographically.

    ``i`` is a cut vertex of G[rest + {i}] exactly when adding it back merges
    components of G[rest], i.e. lowers the component count.
    """
    if g.n > CUTSET_CAP:
        raise GraphError(f"cut-set enumeration capped at n <= {CUTSET_CAP}")
    out = []
    for k in range(0, g.n + 1):
        for t in itertools.combinations(g.vertices, k):
            if k == 0 or has_cut_point_property(g, t):
                rest = set(g.vertices) - set(t)
                out.append(CutSet(t, tuple(components(g, rest))))
    return out


def prime_dimension(g: Graph, cs: CutSet) -> int:
    """dim S/P_T(G) = n - |T| + c_T."""
    return g.n - len(cs.t) + cs.c_t


def krull_dimension(g: Graph) -> int:
    return max(prime_dimension(g, cs) for cs in cut_point_sets(g))


def blocks(g: Graph):
    """Biconnected components (edge sets grouped into vertex tuples), Hopcroft-Tarjan."""
    adj = g.adjacency()
    disc, low = {}, {}
    stack, out = [], []
    counter = itertools.count()

    def dfs(u, parent):
        disc[u] = low[u] = next(counter)
        for w in sorted(adj[u]):
            if w not in disc:
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.update(e)
                        if e == (u, w):
                            break
                    out.append(tuple(sorted(block)))
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in g.vertices:
        if v not in disc:
            dfs(v, None)
    return sorted(out)


def is_block_graph(g: Graph) -> bool:
    """Connected and every block is a clique."""
    return g.is_connected() and all(is_clique(g, b) for b in blocks(g))


# -- isomorphism and enumeration (small n only) -----------------------------

def canonical_form(g: Graph):
    """Lexicographically least edge list over all vertex permutations (n <= 8)."""
    if g.n > 8:
        raise GraphError("canonical_form is brute force; n <= 8 only")
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        relabelled = sorted((min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                            for u, v in g.edges)
        if best is None or relabelled < best:
            best = relabelled
    return (g.n, tuple(best))


def isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1) == canonical_form(g2)


def enumerate_graphs(n, connected=None):
    """One representative per isomorphism class on n vertices, via adjacency bitmasks.

    Every mask is mapped to the least mask in its orbit under vertex
    permutations (vectorised over all masks at once). ``connected=True`` keeps
    connected graphs, ``False`` disconnected ones, ``None`` everything.
    """
    if n > 7:
        raise GraphError("bitmask enumeration is exhaustive; n <= 7 only")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    index = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    bits = [(masks >> k) & 1 for k in range(len(pairs))]
    canon = masks.copy()
    for perm in itertools.permutations(range(1, n + 1)):
        image = np.zeros_like(masks)
        for k, (u, v) in enumerate(pairs):
            a, b = perm[u - 1], perm[v - 1]
            image |= bits[k] << index[(min(a, b), max(a, b))]
        np.minimum(canon, image, out=canon)
    out = []
    for mask in np.unique(canon):
        g = Graph(n, frozenset(p for k, p in enumerate(pairs) if int(mask) >> k & 1))
        if connected is None or g.is_connected() == connected:
            out.append(g)
    out.sort(key=lambda g: (len(g.edges), g.sorted_edges()))
    return out
