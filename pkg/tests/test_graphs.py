import json

import pytest
from hypothesis import given

from beit import graphs as G
from beit.graphs import Graph, GraphError

from conftest import graphs


def test_path_edges():
    g = G.path(3)
    assert list(g.vertices) == [1, 2, 3]
    assert g.sorted_edges() == [(1, 2), (2, 3)]


def test_wheel_counts():
    w = G.wheel(4)
    assert (w.n, len(w.edges)) == (5, 8)
    assert w == G.cone(G.cycle(4))


def test_multipartite_22_is_c4():
    assert G.isomorphic(G.multipartite(2, 2), G.cycle(4))


@pytest.mark.parametrize("kind,params", [
    ("path", [0]), ("cycle", [2]), ("complete", [0]), ("edgeless", [0]),
    ("wheel", [3]), ("multipartite", [2, 0]), ("grb", [2, 2]), ("nope", [1]),
])
def test_family_rejects(kind, params):
    with pytest.raises(GraphError):
        G.build_family(kind, params)


def test_parse_family():
    assert G.parse_family("wheel:5") == G.wheel(5)
    assert G.parse_family("multipartite:2,3") == G.multipartite(2, 3)
    with pytest.raises(GraphError):
        G.parse_family("path:x")


def test_cone_examples():
    d = G.cone(G.path(3))
    assert (d.n, len(d.edges)) == (4, 5)
    assert G.isomorphic(d, Graph(4, frozenset(G.complete(4).edges - {(1, 3)})))
    star = G.cone(G.edgeless(3))
    assert star.sorted_edges() == [(1, 4), (2, 4), (3, 4)]


def test_join_examples():
    k23 = G.join(G.edgeless(2), G.edgeless(3))
    assert len(k23.edges) == 6
    g = G.join(G.path(3), G.path(4))
    assert (g.n, len(g.edges)) == (7, 17)
    assert G.isomorphic(G.join(G.complete(1), G.cycle(4)), G.wheel(4))


def test_clique_vectors():
    assert G.clique_vector(G.complete(4)).counts == (4, 6, 4, 1)
    assert G.clique_vector(G.cycle(4)).counts == (4, 4, 0, 0)
    assert G.clique_vector(G.wheel(4)).counts == (5, 8, 4, 0, 0)


def test_vertex_connectivity():
    assert G.vertex_connectivity(G.cycle(5)) == 2
    assert G.vertex_connectivity(G.path(4)) == 1
    assert G.vertex_connectivity(G.join(G.edgeless(2), G.edgeless(3))) == 2
    assert G.vertex_connectivity(G.edgeless(3)) == 0
    assert G.vertex_connectivity(G.complete(4), with_flag=True) == (3, True)


def test_cut_point_sets():
    cs = G.cut_point_sets(G.path(3))
    assert [(c.t, c.c_t) for c in cs] == [((), 1), ((2,), 2)]
    assert [c.t for c in G.cut_point_sets(G.cycle(4))] == [(), (1, 3), (2, 4)]
    assert [c.t for c in G.cut_point_sets(G.complete(4))] == [()]


def test_krull_dimension():
    assert G.krull_dimension(G.complete(4)) == 5
    # apex over P_3: dim = |V(P_3)| + 2
    assert G.krull_dimension(G.cone(G.path(3))) == 5
    assert G.krull_dimension(G.edgeless(3)) == 6


def test_neighborhood_completion():
    assert G.neighborhood_completion(G.path(3), 2) == G.complete(3)
    assert G.neighborhood_completion(G.complete(4), 1) == G.complete(4)
    assert G.neighborhood_completion(G.cycle(4), 1).sorted_edges() == [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(GraphError):
        G.neighborhood_completion(G.path(3), 4)


def test_simplicial():
    assert G.is_simplicial(G.path(3), 1)
    assert not G.is_simplicial(G.path(3), 2)


def test_construct_grb():
    assert G.construct_grb(2, 1) == G.path(3)
    assert G.construct_grb(3, 2) == G.join(G.path(3), G.path(4))
    assert G.construct_grb(4, 2).n == 9
    assert G.construct_grb(1, 1) == G.complete(3)
    with pytest.raises(GraphError):
        G.construct_grb(3, 3)


def test_blocks():
    assert G.is_block_graph(G.path(4))
    assert G.is_block_graph(G.cone(G.edgeless(3)))
    assert not G.is_block_graph(G.cycle(4))
    two_triangles = Graph(5, frozenset({(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)}))
    assert G.blocks(two_triangles) == [(1, 2, 3), (3, 4, 5)]


def test_json_roundtrip_and_rejects(tmp_path):
    g = G.wheel(4)
    p = tmp_path / "g.json"
    p.write_text(G.write_graph_json(g))
    assert G.read_graph_json(str(p)) == g
    assert G.read_graph_json(json.loads(G.write_graph_json(g))) == g
    for bad in ('{"n": 2, "edges": [[1, 1]]}', '{"n": 2, "edges": [[1, 3]]}',
                '{"n": 3, "edges": [[1, 2], [1, 2]]}', '{"n": 3, "edges": [[2, 1]]}', '{"edges": []}'):
        with pytest.raises(GraphError):
            G.read_graph_json(bad)


def test_enumeration_counts():
    assert [len(G.enumerate_graphs(n, connected=True)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    assert len(G.enumerate_graphs(5)) == 34
    reps = G.enumerate_graphs(4)
    assert len({G.canonical_form(g) for g in reps}) == len(reps)


@given(graphs(max_n=6))
def test_cone_clique_recurrence(h):
    kh, kg = G.clique_vector(h), G.clique_vector(G.cone(h))
    for i in range(1, h.n + 1):
        assert kg[i + 1] == kh[i] + kh[i + 1]


@given(graphs(max_n=6))
def test_clique_vector_invariants(g):
    k = G.clique_vector(g)
    assert k[1] == g.n and k[2] == len(g.edges)
    for i in range(1, g.n):
        if k[i] == 0:
            assert k[i + 1] == 0


@given(graphs(max_n=6))
def test_cut_sets_contain_empty(g):
    cs = G.cut_point_sets(g)
    assert cs[0].t == ()
    for c in cs:
        assert c.c_t == len(c.components)
    if g.is_complete():
        assert len(cs) == 1


@given(graphs(max_n=5, connected=True))
def test_cone_dimension(h):
    assert G.krull_dimension(G.cone(h)) == max(G.krull_dimension(h), h.n + 2)


@given(graphs(max_n=3), graphs(max_n=3))
def test_join_commutes(a, b):
    assert G.isomorphic(G.join(a, b), G.join(b, a))


@given(graphs(max_n=6))
def test_cone_is_join_with_vertex(h):
    assert G.isomorphic(G.cone(h), G.join(G.complete(1), h))


@given(graphs(min_n=3, max_n=6, connected=True, noncomplete=True))
def test_connectivity_range(g):
    assert 1 <= G.vertex_connectivity(g) <= g.n - 2


@given(graphs(max_n=6))
def test_join_factors_rebuild(g):
    factors = G.join_factors(g)
    for i, a in enumerate(factors):
        for b in factors[i + 1:]:
            assert all(g.has_edge(u, v) for u in a for v in b)
