import itertools
import math

import pytest

from starlit.graph import (Factor, Graph, GraphError, cartesian_product, cycle_graph, degree_sequence,
                           four_path_count, grid_graph, hypercube, path_cycle_graph, path_graph,
                           product_of, toroidal_graph)


def small_factors():
    out = [path_graph(n) for n in range(1, 7)] + [cycle_graph(n) for n in range(3, 7)]
    return out


def test_path_graph_shapes():
    assert path_graph(1).vertex_count == 1 and path_graph(1).edge_count == 0
    g = path_graph(3)
    assert list(g.edges) == [(0, 1), (1, 2)]
    assert g.max_degree == 2
    assert path_graph(5).edge_count == 4


def test_cycle_graph_order():
    assert list(cycle_graph(4).edges) == [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert cycle_graph(3).edge_count == 3 and cycle_graph(3).max_degree == 2
    assert cycle_graph(15).edge_count == 15


@pytest.mark.parametrize("n", [0, 1, 2, -1])
def test_cycle_too_short(n):
    with pytest.raises(GraphError):
        cycle_graph(n)


def test_products_small():
    c4 = cartesian_product(path_graph(2), path_graph(2))
    assert (c4.vertex_count, c4.edge_count) == (4, 4)
    assert degree_sequence(c4) == [2] * 4
    p2c4 = cartesian_product(path_graph(2), cycle_graph(4))
    assert (p2c4.vertex_count, p2c4.edge_count) == (8, 12)
    assert set(degree_sequence(p2c4)) == {3}
    c4c4 = cartesian_product(cycle_graph(4), cycle_graph(4))
    assert (c4c4.vertex_count, c4c4.edge_count) == (16, 32)
    q4 = hypercube(4)
    assert degree_sequence(c4c4) == degree_sequence(q4)
    assert four_path_count(c4c4) == four_path_count(q4)


def test_generators():
    assert (hypercube(3).vertex_count, hypercube(3).edge_count) == (8, 12)
    g = grid_graph([2, 7])
    assert (g.vertex_count, g.edge_count) == (14, 19)
    t = toroidal_graph([4, 4, 4])
    assert (t.vertex_count, t.edge_count) == (64, 192)
    assert set(degree_sequence(t)) == {6}


@pytest.mark.parametrize("bad", [[], [1, 3]])
def test_grid_rejects(bad):
    with pytest.raises(GraphError):
        grid_graph(bad)


def test_torus_rejects_short_side():
    with pytest.raises(GraphError):
        toroidal_graph([3, 2])
    with pytest.raises(GraphError):
        toroidal_graph([])


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_product_overflow(monkeypatch):
    import starlit.graph as G
    monkeypatch.setattr(G, "MAX_VERTICES", 50)
    with pytest.raises(GraphError):
        cartesian_product(path_graph(8), path_graph(8))


def test_adjacency_consistent():
    g = toroidal_graph([3, 5])
    seen = [0] * g.edge_count
    for v, nbrs in enumerate(g.adjacency):
        for w, e in nbrs:
            assert set(g.edges[e]) == {v, w}
            seen[e] += 1
    assert seen == [2] * g.edge_count
    assert g.max_degree == max(len(a) for a in g.adjacency)


def test_canonical_product_order():
    g = cartesian_product(path_graph(3), cycle_graph(4))
    # G-axis edges come first, grouped by H-vertex x
    m_g = 2
    for x in range(4):
        for e, (a, b) in enumerate(path_graph(3).edges):
            assert g.edges[x * m_g + e] == (a * 4 + x, b * 4 + x)
    base = 4 * m_g
    for a in range(3):
        for f, (x, y) in enumerate(cycle_graph(4).edges):
            assert g.edges[base + a * 4 + f] == (a * 4 + x, a * 4 + y)


@pytest.mark.parametrize("g,h", list(itertools.combinations_with_replacement(small_factors(), 2)))
def test_commutative_fingerprints(g, h):
    gh, hg = cartesian_product(g, h), cartesian_product(h, g)
    assert degree_sequence(gh) == degree_sequence(hg)
    assert four_path_count(gh) == four_path_count(hg)
    assert gh.edge_count == g.edge_count * h.vertex_count + g.vertex_count * h.edge_count


@pytest.mark.parametrize("g", [grid_graph([3, 4, 2]), toroidal_graph([3, 4]), path_cycle_graph(3, 5),
                               hypercube(4), product_of([Factor("cycle", 5), Factor("path", 3)])])
def test_axis_invariant(g):
    lab = g.label
    for e, (u, v) in enumerate(g.edges):
        ax = lab.edge_axis[e]
        cu, cv = lab.vertex_coords[u], lab.vertex_coords[v]
        diff = [i for i in range(len(cu)) if cu[i] != cv[i]]
        assert diff == [ax]
        f = lab.factors[ax]
        step = (cv[ax] - cu[ax]) % f.length if f.kind == "cycle" else abs(cv[ax] - cu[ax])
        assert step in ((1, f.length - 1) if f.kind == "cycle" else (1,))
    assert g.vertex_count == math.prod(lab.factor_sizes)


def test_edge_key_and_vertex_at():
    g = path_cycle_graph(2, 5)
    for e in range(g.edge_count):
        axis, start = g.edge_key(e)
        u, v = g.edges[e]
        assert g.vertex_at(start) in (u, v)
    # the closing ring edge starts at the last column
    e = g.edge_index[g.vertex_at((0, 4)), g.vertex_at((0, 0))]
    assert g.edge_key(e) == (1, (0, 4))


def test_graph_equality_and_fingerprint():
    assert cycle_graph(5) == cycle_graph(5)
    assert cycle_graph(5).fingerprint != path_graph(5).fingerprint
    assert hash(grid_graph([2, 3])) == hash(grid_graph([2, 3]))
    assert "P2□P3" in repr(grid_graph([2, 3]))
