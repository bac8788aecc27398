import logging

import pytest
from hypothesis import given, strategies as st

from beit import formulas as F
from beit import graphs as G
from beit.resolution import BettiTable, betti_table, depth_of, extremal_positions, summarize

from conftest import graphs


def p3_table():
    return BettiTable(3, {(0, 0): 1, (1, 2): 2, (2, 4): 1}, complete_through=(6, 6))


def test_cone_formula_on_p3():
    t = F.betti_cone_formula(p3_table(), G.CliqueVector((3, 2, 0)), 3)
    assert t.beta(1, 1) == 5 and t.beta(2, 1) == 4
    assert t.beta(2, 2) == 3
    assert all(j <= 2 for _, j in t.positions())
    assert t == betti_table(G.cone(G.path(3)))


def test_cone_formula_rejects_complete():
    with pytest.raises(F.CompleteInputError):
        F.betti_cone_formula(betti_table(G.complete(3)), G.clique_vector(G.complete(3)), 3)


def test_cone_formula_clamps_negative(caplog):
    # nonsense input table: j=2 row would go negative
    fake = BettiTable(3, {(0, 0): 1}, complete_through=(6, 6))
    with caplog.at_level(logging.ERROR):
        t = F.betti_cone_formula(fake, G.CliqueVector((3, 5, 0)), 3)
    assert all(b > 0 for b in t.entries.values())
    assert "inconsistent" in caplog.text


def test_wheel_examples():
    w = F.wheel_betti(5)
    assert w.beta(1, 1) == 10
    assert w[(7, 10)] == 5
    assert w[(2, 4)] == 25
    assert (w.pd, w.reg) == (7, 3)
    with pytest.raises(F.UnsupportedNError):
        F.wheel_betti(4)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_wheel_shape(n):
    w = F.wheel_betti(n)
    assert (w.pd, w.reg) == (n + 2, n - 2)
    assert w.beta(1, 1) == 2 * n and w.beta(n + 2, n - 2) == F.binom(n - 1, 2) - 1


@pytest.mark.parametrize("n", [5, 6])
def test_wheel_matches_oracle(n):
    assert F.wheel_betti(n) == betti_table(G.wheel(n), cap=7)


def test_depth_cone_examples():
    assert F.depth_cone(4, 3, True) == 4
    assert F.depth_cone(6, 3, False) == 5
    assert F.depth_cone(4, 4, True) == 4
    assert depth_of(betti_table(G.wheel(4))) == 4
    assert depth_of(betti_table(G.cone(G.edgeless(3)))) == 5


def test_cmdef_cone_examples():
    assert F.cmdef_cone(4, 0, 3) == 1
    assert F.cmdef_cone(5, 3, 3) == 3
    with pytest.raises(F.InvalidDimError):
        F.cmdef_cone(3, 0, 3)
    # K_q * (CM graph): P_3 is CM, dim 4 = n+1
    for q in (1, 2, 3):
        assert F.cmdef_complete_join(q, 4, 0, 3) == q
    for q in (1, 2):
        g = G.join(G.complete(q), G.path(3))
        assert summarize(betti_table(g), g).cmdef == q


def test_depth_join_examples():
    assert F.depth_join(5, 4, 4, 4, True, True) == 4
    assert F.depth_join(4, 6, 3, 4, True, False) == 4
    assert F.depth_join(4, 6, 2, 3, False, False) == 4
    assert depth_of(betti_table(G.join(G.edgeless(2), G.edgeless(3)))) == 4
    with pytest.raises(F.BadOrientationError):
        F.depth_join(6, 4, 4, 3, False, True)
    with pytest.raises(F.BadOrientationError):
        F.depth_join(6, 4, 3, 2, False, False)
    with pytest.raises(F.FormulaError):
        F.depth_join(2, 4, 1, 3, True, True)


def test_multipartite():
    assert F.depth_multipartite([2, 2]) == 4
    assert F.depth_multipartite([2, 3]) == 4
    assert F.depth_multipartite([2, 2, 3]) == 4
    assert F.depth_multipartite([3, 2]) == 4
    with pytest.raises(F.InvalidPartsError):
        F.depth_multipartite([1, 3])
    with pytest.raises(F.InvalidPartsError):
        F.depth_multipartite([3])


def test_extremal_transfer_examples():
    assert F.extremal_transfer_cone([(2, 2, 1)]) == [(4, 2, 1)]
    assert F.extremal_transfer_cone([(2, 2, 1)], q=3) == [(8, 2, 1)]
    assert F.extremal_transfer_cone([]) == []


def test_grb_examples():
    p = F.grb_profile(2, 1)
    assert (p.n, p.p, p.depth, p.extremal) == (3, 2, 4, ((2, 2, 1),))
    p = F.grb_profile(3, 2)
    assert (p.n, p.p, p.depth) == (7, 10, 4)
    assert set(p.extremal) == {(10, 2, 1), (9, 3, 1)}
    p = F.grb_profile(4, 2)
    assert (p.n, p.p, p.depth) == (9, 13, 5)
    assert set(p.extremal) == {(13, 3, 1), (12, 4, 1)}
    for bad in [(3, 3), (2, 0), (1, 1)]:
        with pytest.raises(F.InvalidPairError):
            F.grb_profile(*bad)


def test_grb_32_oracle():
    # 7 vertices, 14 variables: beyond the CLI cap but quick for the Schreyer oracle
    g = G.construct_grb(3, 2)
    s = summarize(betti_table(g, cap=7), g)
    prof = F.grb_profile(3, 2)
    assert (s.pd, s.depth, s.reg) == (prof.p, prof.depth, prof.r)
    assert tuple(s.extremal) == prof.extremal


@given(st.integers(2, 12), st.data())
def test_grb_invariants(r, data):
    b = data.draw(st.integers(1, r - 1))
    p = F.grb_profile(r, b)
    assert p.depth + p.p == 2 * p.n
    assert len(p.extremal) == b and all(v == 1 for *_, v in p.extremal)
    assert G.construct_grb(r, b).n == p.n
    assert F.predict_depth(G.construct_grb(r, b)) == p.depth


@pytest.mark.parametrize("r", range(2, 6))
def test_grb_b1_is_ci(r):
    p = F.grb_profile(r, 1)
    assert p.extremal == ((r, r, 1),)
    if r + 1 <= 5:
        t = betti_table(G.path(r + 1))
        assert t.entries == {(i, 2 * i): F.binom(r, i) for i in range(r + 1)}


def test_linear_strand():
    assert F.linear_strand(G.clique_vector(G.complete(4))) == {1: 6, 2: 8, 3: 3}


@given(graphs(min_n=2, max_n=4, noncomplete=True))
def test_cone_formula_matches_oracle(h):
    pred = F.betti_cone_formula(betti_table(h), G.clique_vector(h), h.n)
    assert pred == betti_table(G.cone(h))


@given(graphs(min_n=2, max_n=4, noncomplete=True))
def test_cone_depth_and_transfer(h):
    th, tg = betti_table(h), betti_table(G.cone(h))
    assert F.depth_cone(depth_of(th), h.n, h.is_connected()) == depth_of(tg)
    if h.is_connected():
        assert F.extremal_transfer_cone(extremal_positions(th)) == extremal_positions(tg)
        sh, sg = summarize(th, h), summarize(tg, G.cone(h))
        assert F.cmdef_cone(sh.dim, sh.cmdef, h.n) == sg.cmdef


@given(graphs(min_n=2, max_n=3, noncomplete=True), graphs(min_n=2, max_n=3, noncomplete=True))
def test_join_depth_matches_oracle(a, b):
    if a.n + b.n > 5:
        return
    ca, cb = a.is_connected(), b.is_connected()
    if (cb and not ca) or (not ca and not cb and b.n < a.n):
        a, b = b, a
    pred = F.depth_join(depth_of(betti_table(a)), depth_of(betti_table(b)), a.n, b.n,
                        a.is_connected(), b.is_connected())
    assert pred == depth_of(betti_table(G.join(a, b)))


@given(graphs(max_n=5))
def test_predict_depth(g):
    d = F.predict_depth(g, lambda x: depth_of(betti_table(x)))
    assert d == depth_of(betti_table(g))


@given(graphs(min_n=2, max_n=5, noncomplete=True))
def test_extremal_count_bound(g):
    t = betti_table(g)
    if t.reg >= 2:
        assert len(extremal_positions(t)) <= t.reg - 1
