"""Sparse polynomials over GF(p) in x_1..x_n, y_1..y_n, Buchberger's
algorithm, normal forms and Hilbert functions.

Monomials are exponent tuples of length 2n laid out as (x_1..x_n, y_1..y_n);
variable index 0 is the largest variable in both supported orders.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb

DEFAULT_PRIME = 32003


def default_prime():
    return int(os.environ.get("BEIT_PRIME", DEFAULT_PRIME))


def is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def degrevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m):
    return m


ORDERS = {"degrevlex": degrevlex_key, "lex": lex_key}


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class Ring:
    """S = GF(p)[x_1..x_n, y_1..y_n] with a fixed monomial order."""

    n: int
    p: int = DEFAULT_PRIME
    order: str = "degrevlex"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self):
        return 2 * self.n

    @property
    def key(self):
        return ORDERS[self.order]

    def with_order(self, order):
        return Ring(self.n, self.p, order)

    def one(self):
        return tuple([0] * self.nvars)

    def var(self, k):
        e = [0] * self.nvars
        e[k] = 1
        return tuple(e)

    def x(self, i):
        return self.var(i - 1)

    def y(self, i):
        return self.var(self.n + i - 1)

    def var_name(self, k):
        return f"x{k + 1}" if k < self.n else f"y{k - self.n + 1}"

    def poly(self, terms):
        return Polynomial(self, _clean(terms, self.p))

    def monomial(self, m, c=1):
        return self.poly({tuple(m): c})


def _clean(terms, p):
    return {m: c % p for m, c in terms.items() if c % p}


def _add_scaled(f, g, c, shift, p):
    """f += c * shift * g in place (dict polynomials)."""
    for m, a in g.items():
        mm = mono_mul(m, shift) if shift is not None else m
        v = (f.get(mm, 0) + c * a) % p
        if v:
            f[mm] = v
        else:
            f.pop(mm, None)


@dataclass(frozen=True, eq=False)
class Polynomial:
    ring: Ring
    terms: dict = field(default_factory=dict)

    @cached_property
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def is_zero(self):
        return not self.terms

    @property
    def lm(self):
        return self.sorted_terms[0][0]

    @property
    def lc(self):
        return self.sorted_terms[0][1]

    def degree(self):
        return max(sum(m) for m in self.terms) if self.terms else -1

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        f = dict(self.terms)
        _add_scaled(f, other.terms, 1, None, self.ring.p)
        return Polynomial(self.ring, f)

    def __neg__(self):
        return Polynomial(self.ring, {m: (-c) % self.ring.p for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        p = self.ring.p
        if isinstance(other, int):
            return self.ring.poly({m: c * other for m, c in self.terms.items()})
        f = {}
        for m, a in other.terms.items():
            _add_scaled(f, self.terms, a, m, p)
        return Polynomial(self.ring, f)

    __rmul__ = __mul__

    def monic(self):
        inv = pow(self.lc, -1, self.ring.p)
        return self * inv

    def __str__(self):
        if not self.terms:
            return "0"
        half = self.ring.p // 2
        parts = []
        for m, c in self.sorted_terms:
            c = c - self.ring.p if c > half else c
            mono = "*".join(
                self.ring.var_name(k) + (f"^{e}" if e > 1 else "") for k, e in enumerate(m) if e
            )
            coef = "" if abs(c) == 1 and mono else str(abs(c))
            body = "*".join(s for s in (coef, mono) if s) or "1"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def binomial_edge_generators(g, ring=None):
    """x_i y_j - x_j y_i for each edge {i, j}, i < j, in edge order."""
    ring = ring or Ring(g.n, default_prime())
    return [
        ring.poly({mono_mul(ring.x(i), ring.y(j)): 1, mono_mul(ring.x(j), ring.y(i)): -1})
        for i, j in g.sorted_edges()
    ]


# -- reduction --------------------------------------------------------------

def _reduce(f, basis, key, p, full=True):
    """Divide dict ``f`` by ``basis`` (list of (lm, lc_inv, terms)).

    Returns the remainder; with ``full`` every term is reduced, otherwise only
    the head.
    """
    f = dict(f)
    rem = {}
    while f:
        lt = max(f, key=key)
        c = f[lt]
        for lm, lc_inv, terms in basis:
            if divides(lm, lt):
                _add_scaled(f, terms, (-c * lc_inv) % p, mono_div(lt, lm), p)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lt] = c
            del f[lt]
    return rem


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    ring: Ring
    generators: tuple

    @property
    def order(self):
        return self.ring.order

    @cached_property
    def leading_monomials(self):
        return tuple(g.lm for g in self.generators)

    @cached_property
    def _table(self):
        return [(g.lm, pow(g.lc, -1, self.ring.p), g.terms) for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reduce(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, _reduce(f.terms, self._table, self.ring.key, self.ring.p))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_standard(self, m):
        return not any(divides(lm, m) for lm in self.leading_monomials)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.reduce(f)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    l = mono_lcm(f.lm, g.lm)
    a = ring.poly({mono_div(l, f.lm): pow(f.lc, -1, ring.p)})
    b = ring.poly({mono_div(l, g.lm): pow(g.lc, -1, ring.p)})
    return a * f - b * g


def _gm_update(lms, active, pairs, h):
    """Gebauer-Moeller UPDATE for a new basis element ``h``.

    ``lms`` maps every element index to its leading monomial, ``active`` is the
    current basis (indices) and ``pairs`` the pending critical pairs.
    Returns the new (active, pairs).
    """
    lh = lms[h]
    lcm_h = {g: mono_lcm(lh, lms[g]) for g in active}
    todo = list(active)
    survivors = []
    while todo:
        g1 = todo.pop(0)
        l1 = lcm_h[g1]
        if coprime(lh, lms[g1]) or not any(divides(lcm_h[g2], l1) for g2 in todo + survivors):
            survivors.append(g1)
    fresh = {(g, h) for g in survivors if not coprime(lh, lms[g])}

    kept = set()
    for a, b in pairs:
        lab = mono_lcm(lms[a], lms[b])
        if divides(lh, lab) and mono_lcm(lms[a], lh) != lab and mono_lcm(lms[b], lh) != lab:
            continue
        kept.add((a, b))
    new_active = [g for g in active if not divides(lh, lms[g])] + [h]
    return new_active, kept | fresh


def groebner(generators, ring=None, order=None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Normal selection strategy (least lcm first) with Buchberger's product and
    chain criteria in Gebauer-Moeller form. Output generators are monic and
    sorted by decreasing leading monomial.
    """
    generators = list(generators)
    if ring is None:
        if not generators:
            raise ValueError("need a ring for an empty generator list")
        ring = generators[0].ring
    if order is not None:
        ring = ring.with_order(order)
    key, p = ring.key, ring.p

    elems, lms = [], []
    active, pairs = [], set()

    def add(terms):
        nonlocal active, pairs
        lm = max(terms, key=key)
        inv = pow(terms[lm], -1, p)
        elems.append((lm, 1, {m: c * inv % p for m, c in terms.items()}))
        lms.append(lm)
        active, pairs = _gm_update(lms, active, pairs, len(elems) - 1)

    for f in sorted((g for g in generators if not g.is_zero()), key=lambda f: key(f.lm)):
        r = _reduce(f.terms, [elems[i] for i in active], key, p, full=False)
        if r:
            add(r)

    while pairs:
        a, b = min(pairs, key=lambda ab: (key(mono_lcm(lms[ab[0]], lms[ab[1]])), ab))
        pairs.discard((a, b))
        l = mono_lcm(lms[a], lms[b])
        s = {}
        _add_scaled(s, elems[a][2], 1, mono_div(l, lms[a]), p)
        _add_scaled(s, elems[b][2], -1, mono_div(l, lms[b]), p)
        r = _reduce(s, [elems[i] for i in active], key, p, full=False)
        if r:
            add(r)

    return _reduced(ring, [elems[i] for i in active])


def _reduced(ring, table):
    key, p = ring.key, ring.p
    table = [t for t in table if not any(
        o is not t and divides(o[0], t[0]) and (o[0] != t[0] or id(o) < id(t)) for o in table
    )]
    out = []
    for t in table:
        others = [o for o in table if o is not t]
        tail = {m: c for m, c in t[2].items() if m != t[0]}
        tail = _reduce(tail, others, key, p)
        tail[t[0]] = 1
        out.append(Polynomial(ring, tail))
    out.sort(key=lambda f: key(f.lm), reverse=True)
    return GroebnerBasis(ring, tuple(out))


def is_groebner(polys, ring=None) -> bool:
    """Buchberger's criterion: all S-polynomials reduce to zero."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return True
    ring = ring or polys[0].ring
    table = [(f.lm, pow(f.lc, -1, ring.p), f.terms) for f in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j])
            if _reduce(s.terms, table, ring.key, ring.p):
                return False
    return True


def ideal_of_graph(g, ring=None, order="degrevlex") -> GroebnerBasis:
    ring = (ring or Ring(g.n, default_prime())).with_order(order)
    gens = binomial_edge_generators(g, ring)
    return groebner(gens, ring)


# -- Hilbert functions ------------------------------------------------------

def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for m in gens:
        if not any(divides(o, m) for o in out):
            out.append(m)
    return out


@lru_cache(maxsize=4096)
def _hilbert_numerator(gens):
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^N of S/(gens), as a coefficient tuple."""
    gens = list(gens)
    if not gens:
        return (1,)
    if all(sum(1 for e in m if e) == 1 for m in gens):
        # pure powers of distinct variables: product of (1 - t^a)
        poly = [1]
        for m in gens:
            a = sum(m)
            nxt = [0] * (len(poly) + a)
            for k, c in enumerate(poly):
                nxt[k] += c
                nxt[k + a] -= c
            poly = nxt
        return tuple(poly)
    last = gens[-1]
    rest = tuple(_minimalize(gens[:-1]))
    colon = tuple(_minimalize([tuple(max(x - y, 0) for x, y in zip(m, last)) for m in gens[:-1]]))
    a = _hilbert_numerator(rest)
    b = _hilbert_numerator(colon)
    d = sum(last)
    out = [0] * max(len(a), len(b) + d)
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k + d] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def hilbert_numerator(gb: GroebnerBasis):
    return _hilbert_numerator(tuple(_minimalize(gb.leading_monomials)))


def hilbert_function(gb: GroebnerBasis, d: int) -> int:
    """dim_K (S/I)_d, counted as standard monomials via the initial ideal."""
    if d < 0:
        return 0
    N = gb.ring.nvars
    num = hilbert_numerator(gb)
    return sum(c * comb(d - k + N - 1, N - 1) for k, c in enumerate(num) if d - k >= 0)


def monomials_of_degree(nvars, d):
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            yield (e,) + rest


def standard_monomials(gb: GroebnerBasis, d: int):
    """Brute-force list of degree-d monomials outside the initial ideal."""
    return [m for m in monomials_of_degree(gb.ring.nvars, d) if gb.is_standard(m)]
