"""Free resolution of S/J_G by Schreyer's algorithm, then minimalization.

Each level is a list of vectors in a free module F_k = S^{r_k}. A vector is a
dict ``{(component, monomial): coeff}``. The module order on F_k is the
Schreyer order induced by the previous level: a term m*e_c is compared by
the level-0 monomial m * L_c, then by the tie-break chain of component
indices (a smaller index wins).

Syzygies of a Groebner basis computed this way are again a Groebner basis
for the induced order, so no Buchberger loop is needed beyond level 0.
Sorting each level by leading monomial (lex, descending) makes every new
level avoid one more variable, which bounds the length by 2n.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .algebra import Ring, default_prime, divides, ideal_of_graph, mono_div, mono_lcm, mono_mul
from .resolution import BettiTable


@dataclass
class Frame:
    """Basis data of a free module F_k: level-0 lead monomial, tie chain and degree per generator."""

    lead: list
    chain: list
    degree: list

    def __len__(self):
        return len(self.lead)


def _term_key(frame, ring_key, comp, mono):
    return (ring_key(mono_mul(mono, frame.lead[comp])), frame.chain[comp])


def _leading(vec, frame, ring_key):
    return max(vec, key=lambda t: _term_key(frame, ring_key, *t))


def _axpy(target, vec, coeff, shift, p):
    """target += coeff * shift * vec in place."""
    for (comp, m), a in vec.items():
        k = (comp, mono_mul(m, shift))
        v = (target.get(k, 0) + coeff * a) % p
        if v:
            target[k] = v
        else:
            target.pop(k, None)


def _divide(vec, elems, leads, frame, ring_key, p):
    """Reduce ``vec`` to zero by ``elems`` (monic leads), returning the quotient terms."""
    vec = dict(vec)
    quotient = {}
    by_comp = {}
    for j, (comp, mu) in enumerate(leads):
        by_comp.setdefault(comp, []).append((j, mu))
    while vec:
        comp, m = _leading(vec, frame, ring_key)
        c = vec[comp, m]
        for j, mu in by_comp.get(comp, ()):
            if divides(mu, m):
                q = mono_div(m, mu)
                _axpy(vec, elems[j], -c, q, p)
                quotient[j, q] = (quotient.get((j, q), 0) + c) % p
                break
        else:
            raise ArithmeticError("Schreyer S-vector did not reduce to zero")
    return quotient


def schreyer_resolution(gb):
    """Non-minimal free resolution of S/I from a reduced Groebner basis of I.

    Returns (frames, differentials); ``differentials[k]`` is the list of
    columns of d_{k+1}: F_{k+1} -> F_k, each a vector over F_k.
    """
    ring = gb.ring
    key, p = ring.key, ring.p
    frame = Frame([ring.one()], [()], [0])
    elems = [{(0, m): c for m, c in g.terms.items()} for g in gb.generators]
    frames, diffs = [frame], []
    while elems:
        leads = [_leading(v, frame, key) for v in elems]
        order = sorted(range(len(elems)), key=lambda j: (leads[j][0], tuple(-e for e in leads[j][1])))
        elems = [elems[j] for j in order]
        leads = [leads[j] for j in order]
        for v, (comp, mu) in zip(elems, leads):
            if v[comp, mu] != 1:
                raise ArithmeticError("leading coefficient is not 1")
        diffs.append(elems)
        nxt = Frame(
            [mono_mul(mu, frame.lead[comp]) for comp, mu in leads],
            [frame.chain[comp] + (-c,) for c, (comp, _) in enumerate(leads)],
            [sum(mu) + frame.degree[comp] for comp, mu in leads],
        )
        syz = []
        for i, (ci, mi) in enumerate(leads):
            cands = {}
            for j in range(i + 1, len(leads)):
                cj, mj = leads[j]
                if cj != ci:
                    continue
                q = mono_div(mono_lcm(mi, mj), mi)
                cands.setdefault(q, j)
            minimal = [q for q in cands if not any(o != q and divides(o, q) for o in cands)]
            for q in sorted(minimal, key=lambda q: cands[q]):
                j = cands[q]
                mj = leads[j][1]
                qj = mono_div(mono_mul(q, mi), mj)
                s = {}
                _axpy(s, elems[i], 1, q, p)
                _axpy(s, elems[j], -1, qj, p)
                quotient = _divide(s, elems, leads, frame, key, p)
                vec = {(i, q): 1}
                vec[j, qj] = (vec.get((j, qj), 0) - 1) % p
                for (k, mk), c in quotient.items():
                    vec[k, mk] = (vec.get((k, mk), 0) - c) % p
                syz.append({t: c for t, c in vec.items() if c})
        frame = nxt
        frames.append(frame)
        elems = syz
    return frames, diffs


# -- minimalization ------------------------------------------------------------

def _poly_mul(f, g, p):
    out = {}
    for m1, a in f.items():
        for m2, b in g.items():
            m = mono_mul(m1, m2)
            v = (out.get(m, 0) + a * b) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _poly_axpy(f, g, c, p):
    out = dict(f)
    for m, b in g.items():
        v = (out.get(m, 0) + c * b) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


@dataclass
class Complex:
    """Graded free complex F_0 <- F_1 <- ... with polynomial matrices.

    ``maps[k]`` holds d_{k+1} as ``{col: {row: poly}}``; ``degrees[k]`` maps
    basis indices of F_k to their degree.
    """

    ring: Ring
    degrees: list
    maps: list

    def ranks(self):
        return [len(d) for d in self.degrees]

    def betti(self):
        out = {}
        for i, degs in enumerate(self.degrees):
            for d in degs.values():
                out[(i, d)] = out.get((i, d), 0) + 1
        return out


def to_complex(ring, frames, diffs):
    degrees = [dict(enumerate(f.degree)) for f in frames]
    maps = []
    for cols in diffs:
        m = {}
        for c, vec in enumerate(cols):
            col = {}
            for (row, mono), a in vec.items():
                col.setdefault(row, {})[mono] = a
            m[c] = col
        maps.append(m)
    return Complex(ring, degrees, maps)


def _unit(poly, one):
    return poly.get(one) if len(poly) == 1 else None


def minimalize(cx: Complex) -> Complex:
    """Split off trivial summands until no differential has a constant entry.

    For a unit u at (r, c) of d_k: F_k -> F_{k-1}, the remaining block of d_k
    becomes A - A[:, c] A[r, :] / u, row c of d_{k+1} and column r of d_{k-1}
    are deleted.
    """
    p = cx.ring.p
    one = cx.ring.one()
    maps = [{c: {r: dict(f) for r, f in col.items()} for c, col in m.items()} for m in cx.maps]
    degrees = [dict(d) for d in cx.degrees]
    for k in range(len(maps)):
        A = maps[k]
        while True:
            best = None
            for c, col in A.items():
                for r, f in col.items():
                    u = _unit(f, one)
                    if u is not None:
                        row_len = sum(1 for cc in A.values() if r in cc)
                        cost = (len(col) - 1) * (row_len - 1)
                        if best is None or cost < best[0]:
                            best = (cost, r, c, u)
                if best is not None and best[0] == 0:
                    break
            if best is None:
                break
            _, r, c, u = best
            pivot_col = A.pop(c)
            inv = pow(u, -1, p)
            for cc, col in A.items():
                f = col.pop(r, None)
                if f is None:
                    continue
                # column operation: col_cc -= (A[r, cc] / u) * col_c
                for rr, g in pivot_col.items():
                    if rr == r:
                        continue
                    h = _poly_axpy(col.get(rr, {}), _poly_mul(f, g, p), -inv, p)
                    if h:
                        col[rr] = h
                    else:
                        col.pop(rr, None)
            del degrees[k + 1][c]
            del degrees[k][r]
            if k + 1 < len(maps):
                for col in maps[k + 1].values():
                    col.pop(c, None)
            if k >= 1:
                maps[k - 1].pop(r, None)
    return Complex(cx.ring, degrees, maps)


def is_complex(cx: Complex) -> bool:
    """d_k o d_{k+1} = 0 for every k."""
    p = cx.ring.p
    for k in range(len(cx.maps) - 1):
        A, B = cx.maps[k], cx.maps[k + 1]
        for col in B.values():
            acc = {}
            for mid, f in col.items():
                for r, g in A.get(mid, {}).items():
                    acc[r] = _poly_axpy(acc.get(r, {}), _poly_mul(g, f, p), 1, p)
            if any(acc.values()):
                return False
    return True


def minimal_resolution(g: graphs.Graph, p=None) -> Complex:
    ring = Ring(g.n, p or default_prime())
    gb = ideal_of_graph(g, ring)
    frames, diffs = schreyer_resolution(gb)
    return minimalize(to_complex(ring, frames, diffs))


def schreyer_betti(g: graphs.Graph, p=None) -> BettiTable:
    cx = minimal_resolution(g, p)
    ranks = cx.ranks()
    top = max((i for i, r in enumerate(ranks) if r), default=0)
    maxdeg = max(max(d.values(), default=0) for d in cx.degrees)
    return BettiTable(g.n, cx.betti(), cx.ring.p, (top, maxdeg))
