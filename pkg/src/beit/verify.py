"""Formula-versus-oracle verification suites.

Each suite walks a fixed, deterministically ordered instance set and returns
one VerifyReport per instance. Wall times are recorded but only printed on
request, so default output is byte-stable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import formulas as F
from . import graphs as G
from .algebra import Ring, ideal_of_graph
from .resolution import (EXTENDED_CAP, ORACLE_CAP, betti_table, depth_of, euler_check,
                         extremal_positions, summarize, validate_summary)


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool
    elapsed: float = 0.0

    def to_json(self, timing=False):
        out = {"name": self.name, "expected": _jsonable(self.expected),
               "actual": _jsonable(self.actual), "pass": self.passed}
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out


@dataclass
class VerifyReport:
    instance: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def check(self, name, expected, actual, passed=None, t0=None):
        ok = (expected == actual) if passed is None else bool(passed)
        dt = time.perf_counter() - t0 if t0 is not None else 0.0
        self.checks.append(Check(name, expected, actual, ok, dt))
        return ok

    def to_json(self, timing=False):
        out = {"instance": self.instance, "pass": self.passed,
               "checks": [c.to_json(timing) for c in self.checks]}
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def describe(g: G.Graph) -> str:
    return f"n{g.n}[" + ",".join(f"{u}-{v}" for u, v in g.sorted_edges()) + "]"


@dataclass
class VerifyConfig:
    extended: bool = False
    p: int | None = None
    method: str = "syzygy"

    @property
    def cap(self):
        return EXTENDED_CAP if self.extended else ORACLE_CAP

    def oracle(self, g, p=None, method=None):
        return betti_table(g, p or self.p, method or self.method, cap=self.cap)


# -- instance sets -------------------------------------------------------------

def connected_graphs(max_n):
    """Connected graphs on 2..max_n vertices (K_1 has J = 0 and is left out)."""
    return [g for n in range(2, max_n + 1) for g in G.enumerate_graphs(n, connected=True)]


def noncomplete(max_n, connected=True):
    out = []
    for n in range(2, max_n + 1):
        for g in G.enumerate_graphs(n, connected=connected):
            if not g.is_complete():
                out.append(g)
    return out


def _run(instances, body):
    reports = []
    for label, payload in instances:
        rep = VerifyReport(label)
        t0 = time.perf_counter()
        body(rep, payload)
        rep.elapsed = time.perf_counter() - t0
        reports.append(rep)
    return reports


# -- suites --------------------------------------------------------------------

def suite_cone_betti(cfg: VerifyConfig):
    """betti_cone_formula(oracle(H)) == oracle(v * H) for every non-complete H."""
    top = cfg.cap - 1
    hs = noncomplete(top, None)

    def body(rep, h):
        t0 = time.perf_counter()
        pred = F.betti_cone_formula(cfg.oracle(h), G.clique_vector(h), h.n)
        actual = cfg.oracle(G.cone(h))
        rep.check("cone-table", pred.to_json()["entries"], actual.to_json()["entries"], t0=t0)

    return _run([(describe(h), h) for h in hs], body)


def suite_cone_depth(cfg: VerifyConfig):
    top = cfg.cap - 1
    hs = noncomplete(top, None)

    def body(rep, h):
        t0 = time.perf_counter()
        th, tg = cfg.oracle(h), cfg.oracle(G.cone(h))
        rep.check("depth-cone", F.depth_cone(depth_of(th), h.n, h.is_connected()), depth_of(tg), t0=t0)
        if h.is_connected():
            sh = summarize(th, h)
            sg = summarize(tg, G.cone(h))
            rep.check("cmdef-cone", F.cmdef_cone(sh.dim, sh.cmdef, h.n), sg.cmdef)

    out = _run([(describe(h), h) for h in hs], body)
    # named instances from the depth theorems
    named = [
        ("multipartite(2,2)=C4", (2, 2)),
        ("multipartite(2,3)", (2, 3)),
    ]
    if cfg.extended:
        named.append(("multipartite(2,2,2)", (2, 2, 2)))

    def mp(rep, parts):
        t0 = time.perf_counter()
        rep.check("depth-multipartite", F.depth_multipartite(parts), depth_of(cfg.oracle(G.multipartite(*parts))), t0=t0)

    return out + _run(named, mp)


def _oriented(g1, g2):
    c1, c2 = g1.is_connected(), g2.is_connected()
    if (c2 and not c1) or (not c1 and not c2 and g2.n < g1.n):
        return g2, g1
    return g1, g2


def suite_join_depth(cfg: VerifyConfig):
    pool = [g for n in range(2, cfg.cap - 1) for g in G.enumerate_graphs(n) if not g.is_complete()]
    pairs = []
    for a in pool:
        for b in pool:
            if a.n + b.n <= cfg.cap and (a.n, describe(a)) <= (b.n, describe(b)):
                pairs.append(_oriented(a, b))

    def body(rep, pair):
        g1, g2 = pair
        t0 = time.perf_counter()
        pred = F.depth_join(depth_of(cfg.oracle(g1)), depth_of(cfg.oracle(g2)), g1.n, g2.n,
                            g1.is_connected(), g2.is_connected())
        rep.check("depth-join", pred, depth_of(cfg.oracle(G.join(g1, g2))), t0=t0)

    out = _run([(describe(a) + "*" + describe(b), (a, b)) for a, b in pairs], body)

    def rec(rep, g):
        t0 = time.perf_counter()
        rep.check("depth-recursive", F.predict_depth(g, lambda x: depth_of(cfg.oracle(x))),
                  depth_of(cfg.oracle(g)), t0=t0)

    allg = [g for n in range(2, cfg.cap + 1) for g in G.enumerate_graphs(n)]
    return out + _run([(describe(g), g) for g in allg], rec)


WHEEL5_GOLDEN = {
    (1, 2): 10, (2, 3): 10, (2, 4): 25, (3, 5): 50, (4, 6): 28, (5, 7): 4,
    (2, 5): 4, (3, 6): 33, (4, 7): 74, (5, 8): 70, (6, 9): 30, (7, 10): 5,
}


def suite_wheel(cfg: VerifyConfig):
    def golden(rep, _):
        w = F.wheel_betti(5)
        rep.check("golden-entries", WHEEL5_GOLDEN, {k: w[k] for k in WHEEL5_GOLDEN})
        rep.check("no-other-entries", sorted(WHEEL5_GOLDEN) + [(0, 0)], sorted(w.entries), set(w.entries) == set(WHEEL5_GOLDEN) | {(0, 0)})
        rep.check("pd", 7, w.pd)
        rep.check("reg", 3, w.reg)

    def via_cone(rep, n):
        t0 = time.perf_counter()
        c = G.cycle(n)
        pred = F.betti_cone_formula(cfg.oracle(c), G.clique_vector(c), n)
        if n >= 5:
            rep.check("closed-form=cone-formula", F.wheel_betti(n).to_json()["entries"], pred.to_json()["entries"], t0=t0)
        if n + 1 <= cfg.cap:
            rep.check("cone-formula=oracle", pred.to_json()["entries"], cfg.oracle(G.wheel(n)).to_json()["entries"])
        rep.check("pd=n+2", n + 2, pred.pd)
        rep.check("reg=n-2", n - 2, pred.reg)

    return _run([("wheel_betti(5)", None)], golden) + _run([(f"W{n}", n) for n in range(4, cfg.cap + 1)], via_cone)


def suite_linear_strand(cfg: VerifyConfig):
    def body(rep, g):
        t = cfg.oracle(g)
        k = G.clique_vector(g)
        row = t.row(1)
        rep.check("beta_{i,i+1}=i*k_{i+1}", F.linear_strand(k), row)
        p = t.pd
        rep.check("beta_{p,p+1}!=0 iff complete", g.is_complete(), t.beta(p, 1) != 0)

    return _run([(describe(g), g) for g in connected_graphs(cfg.cap)], body)


def suite_pd_lower(cfg: VerifyConfig):
    def body(rep, g):
        t = cfg.oracle(g)
        s = summarize(t, g)
        rep.check("auslander-buchsbaum", 2 * g.n, s.depth + s.pd)
        rep.check("pd>=n-1", f">= {g.n - 1}", s.pd, s.pd >= g.n - 1)
        rep.check("depth<=n+1", f"<= {g.n + 1}", s.depth, s.depth <= g.n + 1)
        if not g.is_complete():
            bound = F.pd_lower_bound(g.n, G.vertex_connectivity(g))
            rep.check("pd>=n-2+kappa", f">= {bound}", s.pd, s.pd >= bound)
        else:
            rep.check("pd(K_n)=n-1", g.n - 1, s.pd)
        bad = validate_summary(s, t, g)
        rep.check("summary-valid", [], bad)
        ext = s.extremal
        if g.is_complete():
            rep.check("complete-extremal-row1", [(g.n - 1, 1)], [(i, j) for i, j, _ in ext])
        elif s.reg >= 2:
            rep.check("extremal-count<=reg-1", f"<= {s.reg - 1}", len(ext), len(ext) <= s.reg - 1)

    return _run([(describe(g), g) for g in connected_graphs(cfg.cap)], body)


def suite_extremal_transfer(cfg: VerifyConfig):
    def body(rep, h):
        t0 = time.perf_counter()
        pred = F.extremal_transfer_cone(extremal_positions(cfg.oracle(h)))
        rep.check("extremal-shift", pred, extremal_positions(cfg.oracle(G.cone(h))), t0=t0)
        if h.n + 2 <= cfg.cap:
            k2 = G.join(G.complete(2), h)
            rep.check("extremal-shift-q2", F.extremal_transfer_cone(extremal_positions(cfg.oracle(h)), q=2),
                      extremal_positions(cfg.oracle(k2)))

    return _run([(describe(h), h) for h in noncomplete(cfg.cap - 1, True)], body)


def suite_euler(cfg: VerifyConfig):
    def body(rep, g):
        t = cfg.oracle(g)
        gb = ideal_of_graph(g, Ring(g.n, t.p))
        t0 = time.perf_counter()
        rep.check("hilbert=betti", True, euler_check(t, gb, t.reg + t.pd), t0=t0)

    return _run([(describe(g), g) for g in connected_graphs(cfg.cap)], body)


def suite_oracle_agree(cfg: VerifyConfig):
    top = 5 if cfg.extended else 4
    allg = [g for n in range(1, top + 1) for g in G.enumerate_graphs(n)]

    def body(rep, g):
        t0 = time.perf_counter()
        a = cfg.oracle(g, method="koszul")
        b = cfg.oracle(g, method="syzygy")
        rep.check("koszul=syzygy", a.to_json()["entries"], b.to_json()["entries"], t0=t0)

    return _run([(describe(g), g) for g in allg], body)


def suite_primes(cfg: VerifyConfig):
    top = 5 if cfg.extended else 4
    allg = [g for n in range(1, top + 1) for g in G.enumerate_graphs(n)]

    def body(rep, g):
        a = cfg.oracle(g, p=32003)
        b = cfg.oracle(g, p=101)
        rep.check("p=32003 vs p=101", a.to_json()["entries"], b.to_json()["entries"])

    return _run([(describe(g), g) for g in allg], body)


def suite_disconnected(cfg: VerifyConfig):
    named = [
        ("2K2", G.disjoint_union(G.complete(2), G.complete(2))),
        ("K2+P3", G.disjoint_union(G.complete(2), G.path(3))),
        ("K2+K3", G.disjoint_union(G.complete(2), G.complete(3))),
    ]
    seen = {G.canonical_form(g) for _, g in named}
    for n in range(4, cfg.cap + 1):
        for g in G.enumerate_graphs(n, connected=False):
            if len(G.nontrivial_components(g)) >= 2 and G.canonical_form(g) not in seen:
                named.append((describe(g), g))

    def body(rep, g):
        t = cfg.oracle(g)
        p = t.pd
        rep.check("beta_{p,p+1}=0", 0, t.beta(p, 1))
        comps = [G.induced_subgraph(g, c) for c in G.components(g)]
        rep.check("depth=sum", F.depth_disjoint_union(depth_of(cfg.oracle(c)) for c in comps), depth_of(t))

    return _run(named, body)


def suite_grb(cfg: VerifyConfig):
    def small(rep, _):
        prof = F.grb_profile(2, 1)
        g = G.construct_grb(2, 1)
        t = cfg.oracle(g)
        s = summarize(t, g)
        rep.check("n", prof.n, g.n)
        rep.check("pd", prof.p, s.pd)
        rep.check("depth", prof.depth, s.depth)
        rep.check("reg", prof.r, s.reg)
        rep.check("extremal", list(prof.extremal), list(s.extremal))

    def profile(rep, rb):
        r, b = rb
        prof = F.grb_profile(r, b)
        g = G.construct_grb(r, b)
        rep.check("n=br-b(b-3)/2", prof.n, g.n)
        rep.check("depth+p=2n", 2 * prof.n, prof.depth + prof.p)
        rep.check("|extremal|=b", b, len(prof.extremal))
        rep.check("extremal-values", [1] * b, [v for *_, v in prof.extremal])
        rep.check("depth-via-join-chain", prof.depth, F.predict_depth(g))
        if b == 1:
            # P_{r+1}: complete intersection of r quadrics
            rep.check("ci-extremal", ((r, r, 1),), prof.extremal)

    pairs = [(r, b) for r in range(2, 9) for b in range(1, r)]
    return _run([("grb(2,1)=P3", None)], small) + _run([(f"grb({r},{b})", (r, b)) for r, b in pairs], profile)


SUITES = {
    "cone-betti": suite_cone_betti,
    "cone-depth": suite_cone_depth,
    "join-depth": suite_join_depth,
    "wheel": suite_wheel,
    "linear-strand": suite_linear_strand,
    "pd-lower": suite_pd_lower,
    "extremal-transfer": suite_extremal_transfer,
    "euler": suite_euler,
    "oracle-agree": suite_oracle_agree,
    "primes": suite_primes,
    "disconnected": suite_disconnected,
    "grb": suite_grb,
}


def run_suite(name, cfg: VerifyConfig | None = None):
    """Return {suite: [VerifyReport, ...]} for one suite or for ``all``."""
    cfg = cfg or VerifyConfig()
    if name == "all":
        return {k: SUITES[k](cfg) for k in SUITES}
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    return {name: SUITES[name](cfg)}
