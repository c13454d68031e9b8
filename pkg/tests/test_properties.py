"""Property-based checks of the stated invariants."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_is_star
from starlit.construct import (compose_with_family, cycle_family, cycle_star_coloring, path_family,
                               path_star_coloring)
from starlit.graph import (Factor, cartesian_product, cycle_graph, degree_sequence, four_path_count,
                           path_graph, product_of)
from starlit.solve import bipartite_perfect_matching, star_colorable_with_k
from starlit.verify import EdgeColoring, replay_witness, verify_proper, verify_star

factors = st.one_of(
    st.builds(lambda n: Factor("path", n), st.integers(1, 5)),
    st.builds(lambda n: Factor("cycle", n), st.integers(3, 5)),
)


@st.composite
def colored_products(draw):
    fs = draw(st.lists(factors, min_size=1, max_size=2))
    g = product_of(fs)
    k = draw(st.integers(2, 6))
    cols = draw(st.lists(st.integers(0, k - 1), min_size=g.edge_count, max_size=g.edge_count))
    return g, EdgeColoring.of(g, cols, k)


@settings(max_examples=300, deadline=None)
@given(colored_products())
def test_verify_star_matches_naive(gc):
    g, c = gc
    rep = verify_star(g, c)
    assert bool(rep) == naive_is_star(g.vertex_count, g.edges, c.colors)
    if rep:
        assert verify_proper(g, c)
    else:
        assert replay_witness(g, c, rep)


@settings(max_examples=100, deadline=None)
@given(colored_products(), st.randoms(use_true_random=False))
def test_palette_permutation_invariance(gc, rnd):
    g, c = gc
    perm = list(range(c.palette_size))
    rnd.shuffle(perm)
    assert bool(verify_star(g, c)) == bool(verify_star(g, c.permuted(perm)))


@settings(max_examples=60, deadline=None)
@given(factors, factors)
def test_product_counts(f1, f2):
    g, h = product_of([f1]), product_of([f2])
    gh, hg = cartesian_product(g, h), cartesian_product(h, g)
    assert gh.edge_count == g.edge_count * h.vertex_count + g.vertex_count * h.edge_count
    assert degree_sequence(gh) == degree_sequence(hg)
    assert four_path_count(gh) == four_path_count(hg)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 14), st.integers(2, 4), st.integers(2, 9))
def test_compose_restrictions(n, r, m):
    g, fam = cycle_graph(n), cycle_family(n, r)
    h = path_graph(m)
    fh = path_star_coloring(m)
    c = compose_with_family(g, fam, h, fh)
    members = {x.colors for x in fam.colorings}
    mg = g.edge_count
    for x in range(m):
        assert c.colors[x * mg:(x + 1) * mg] in members
    base = m * mg
    for a in range(n):
        seg = c.colors[base + a * h.edge_count: base + (a + 1) * h.edge_count]
        assert seg == tuple(v + fam.k for v in fh.colors)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sets(st.integers(0, 4), max_size=4), min_size=1, max_size=5))
def test_matching_against_brute_force(sets):
    right = set(range(5))
    res = bipartite_perfect_matching(sets, right)
    exists = any(all(p[i] in s for i, s in enumerate(sets))
                 for p in itertools.permutations(range(5), len(sets)))
    assert res.ok == exists
    if res.ok:
        assert len(set(res.matching)) == len(sets)
        assert all(q in s for q, s in zip(res.matching, sets))
    else:
        viol = res.hall_violator
        assert len(set().union(*(sets[i] for i in viol))) < len(viol)


@settings(max_examples=30, deadline=None)
@given(st.lists(factors, min_size=1, max_size=2).filter(lambda fs: product_of(fs).edge_count <= 14),
       st.integers(1, 5))
def test_solver_soundness(fs, k):
    g = product_of(fs)
    res = star_colorable_with_k(g, k)
    if res.witness is not None:
        assert verify_star(g, res.witness)
        assert naive_is_star(g.vertex_count, g.edges, res.witness.colors)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30), st.integers(2, 5))
def test_path_family_incident_sets_disjoint(n, r):
    fam = path_family(n, r)
    g = path_graph(n)
    for v in range(n):
        seen = set()
        for c in fam.colorings:
            inc = {c.colors[e] for _, e in g.adjacency[v]}
            assert seen.isdisjoint(inc)
            seen |= inc


@given(st.integers(3, 200))
def test_cycle_coloring_always_star(n):
    c = cycle_star_coloring(n)
    assert verify_star(cycle_graph(n), c)
    assert c.palette_size == (4 if n == 5 else 3)
