import pytest

from starlit.construct import (PreconditionError, chain_family, compose_with_family, cycle_family,
                               cycle_star_coloring, path_family, path_star_coloring, power_family,
                               power_graph, product_family, product_star_coloring, proper_vertex_coloring)
from starlit.graph import (cartesian_product, cycle_graph, grid_graph, path_cycle_graph, path_graph,
                           toroidal_graph)
from starlit.solve import star_chromatic_index_exact
from starlit.verify import CompatibleFamily, EdgeColoring, verify_compatible_family, verify_star


@pytest.mark.parametrize("g,size", [
    (path_graph(4), 2), (cycle_graph(5), 3), (toroidal_graph([4, 6]), 2), (toroidal_graph([3, 5]), 3),
    (path_cycle_graph(3, 7), 3),
])
def test_proper_vertex_coloring(g, size):
    vc = proper_vertex_coloring(g)
    assert vc.palette_size == size
    assert all(vc.colors[u] != vc.colors[v] for u, v in g.edges)


def test_product_rule_examples():
    p2, c6 = path_graph(2), cycle_graph(6)
    c = product_star_coloring(p2, EdgeColoring.of(p2, [0], 1), c6, cycle_star_coloring(6))
    assert c.palette_size <= 5 and verify_star(cartesian_product(p2, c6), c)
    c = product_star_coloring(p2, EdgeColoring.of(p2, [0], 1), p2, EdgeColoring.of(p2, [0], 1))
    assert c.palette_size <= 3
    c4 = cycle_graph(4)
    c = product_star_coloring(c4, cycle_star_coloring(4), c4, cycle_star_coloring(4))
    assert c.palette_size <= 9
    assert star_chromatic_index_exact(cartesian_product(c4, c4)).value == 6


def test_product_rule_separates_axes():
    g, h = cycle_graph(5), cycle_graph(7)
    c = product_star_coloring(g, cycle_star_coloring(5), h, cycle_star_coloring(7))
    prod = cartesian_product(g, h)
    g_cols = {c.colors[e] for e in range(prod.edge_count) if prod.label.edge_axis[e] == 0}
    h_cols = {c.colors[e] for e in range(prod.edge_count) if prod.label.edge_axis[e] == 1}
    assert g_cols.isdisjoint(h_cols)
    assert c.palette_size == min(4 * 3 + 3, 3 * 3 + 4)
    assert c.meta["variant"] == "g"


def test_product_rule_rejects_non_star():
    p5 = path_graph(5)
    with pytest.raises(PreconditionError):
        product_star_coloring(p5, EdgeColoring.of(p5, [0, 1, 0, 1]), p5, path_star_coloring(5))


def test_compose_examples():
    c = compose_with_family(path_graph(5), path_family(5, 2), path_graph(6), path_star_coloring(3 + 3))
    assert c.palette_size == 4 + 3
    c = compose_with_family(path_graph(5), path_family(5, 2), path_graph(3), path_star_coloring(3))
    assert c.palette_size == 6
    c = compose_with_family(cycle_graph(6), cycle_family(6, 2), cycle_graph(8), cycle_star_coloring(8))
    assert c.palette_size <= 7


def test_compose_single_copy():
    p4, p1 = path_graph(4), path_graph(1)
    fam = CompatibleFamily((EdgeColoring.of(p4, [0, 1, 2], 3),), 3)
    c = compose_with_family(p4, fam, p1, EdgeColoring.of(p1, [], 0))
    assert c.colors == (0, 1, 2)


def test_compose_restrictions():
    g, h = cycle_graph(7), cycle_graph(9)
    fam = cycle_family(7, 3)
    fh = cycle_star_coloring(9)
    c = compose_with_family(g, fam, h, fh)
    members = {m.colors for m in fam.colorings}
    mg = g.edge_count
    for x in range(h.vertex_count):
        assert tuple(c.colors[x * mg:(x + 1) * mg]) in members
    base = h.vertex_count * mg
    for a in range(g.vertex_count):
        seg = c.colors[base + a * h.edge_count: base + (a + 1) * h.edge_count]
        assert tuple(seg) == tuple(x + fam.k for x in fh.colors)


def test_compose_needs_enough_members():
    c5 = cycle_graph(5)
    with pytest.raises(PreconditionError):
        compose_with_family(path_graph(4), path_family(4, 2), c5, cycle_star_coloring(5))


def test_product_family_examples():
    fam = product_family(path_graph(4), path_family(4, 2), path_graph(4), path_family(4, 2))
    assert (fam.k, fam.t) == (8, 2)
    fam = product_family(cycle_graph(6), cycle_family(6, 2), cycle_graph(8), cycle_family(8, 2))
    assert (fam.k, fam.t) == (8, 2)
    assert verify_compatible_family(toroidal_graph([6, 8]), fam)


def test_product_family_precondition():
    p4 = path_graph(4)
    single = CompatibleFamily((path_family(4, 2).colorings[0],), 4)
    with pytest.raises(PreconditionError):
        product_family(p4, single, p4, path_family(4, 2))


def test_power_family_examples():
    fam = path_family(3, 2)
    assert power_family(path_graph(3), fam, 1) is fam
    fam3 = power_family(path_graph(3), fam, 3)
    assert (fam3.k, fam3.t) == (12, 2)
    assert verify_compatible_family(grid_graph([3, 3, 3]), fam3)
    fam2 = power_family(cycle_graph(4), cycle_family(4, 2), 2)
    assert (fam2.k, fam2.t) == (8, 2)
    assert verify_compatible_family(power_graph(cycle_graph(4), 2), fam2)


def test_chain_family_mixed_lengths():
    g, fam = chain_family([cycle_graph(7), cycle_graph(9)], [cycle_family(7, 3), cycle_family(9, 3)])
    assert g == toroidal_graph([7, 9])
    assert (fam.k, fam.t) == (14, 3)
