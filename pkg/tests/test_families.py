import pytest

from starlit.construct import (ConstructionError, PreconditionError, a_value, cycle_family,
                               cycle_family_palette, cycle_star_coloring, odd_cycle_trace, path_family,
                               path_star_coloring, tuple_entry)
from starlit.construct.families import _odd_group, _r2_patterns
from starlit.graph import cycle_graph, path_graph
from starlit.solve import star_chromatic_index_exact
from starlit.verify import verify_compatible_family, verify_star


def test_path_family_formula():
    fam = path_family(5, 2)
    assert [c.colors for c in fam.colorings] == [(0, 1, 2, 3), (2, 3, 0, 1)]
    fam = path_family(3, 3)
    assert [c.colors for c in fam.colorings] == [(0, 1), (2, 3), (4, 5)]
    assert fam.k == 6 and fam.t == 3


@pytest.mark.parametrize("n", range(2, 12))
def test_path_star_coloring_optimal(n):
    c = path_star_coloring(n)
    assert c.palette_size == star_chromatic_index_exact(path_graph(n)).value


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_star_coloring_matches_solver(n):
    c = cycle_star_coloring(n)
    assert verify_star(cycle_graph(n), c)
    assert c.palette_size == star_chromatic_index_exact(cycle_graph(n)).value == (4 if n == 5 else 3)


def test_cycle_star_coloring_n6_literal():
    assert cycle_star_coloring(6).colors == (0, 1, 2, 0, 1, 2)


@pytest.mark.parametrize("n", range(13, 60))
def test_cycle_star_coloring_large(n):
    c = cycle_star_coloring(n)
    assert verify_star(cycle_graph(n), c) and c.palette_size == 3


def test_cycle_family_examples():
    fam = cycle_family(8, 2)
    assert [c.colors for c in fam.colorings] == [(0, 1, 2, 3, 0, 1, 2, 3), (2, 3, 0, 1, 2, 3, 0, 1)]
    fam = cycle_family(3, 2)
    assert fam.k == 6
    palettes = [set(c.colors) for c in fam.colorings]
    assert palettes[0].isdisjoint(palettes[1]) and all(len(p) == 3 for p in palettes)


def test_figure_trace_n15_r3():
    fam = cycle_family(15, 3)
    tr = fam.meta["trace"]
    assert (tr.b, tr.p, tr.u) == (4, 2, 2)
    assert tr.tuples == ((4, 5, 6, 1, 2), (2, 3, 4, 5, 6), (6, 1, 2, 3, 4))
    assert fam.k == 7 and fam.t == 3
    assert verify_compatible_family(cycle_graph(15), fam)


def test_trace_invariants():
    for r in range(3, 7):
        for n in range(2 * r + 1, 2 * r + 30, 2):
            tr = odd_cycle_trace(n, r)
            assert n - 1 == 2 * r * tr.p + tr.u and tr.u % 2 == 0 and 0 <= tr.u < 2 * r and tr.p >= 1
            assert tr.b == (n - 1 - 2 * r) // 2
            for i in range(r):
                assert tr.a_values[i] == tuple(((2 * r - 1) * i + s) % (2 * r + 1) for s in range(2 * r))
                assert all(tr.tuples[i][l - 1] == tuple_entry(r, i, l) for l in range(1, tr.b + 2))
            if tr.b == 1:
                assert len(set(tr.q)) == r
                assert all(q in S for q, S in zip(tr.q, tr.S_sets))


def test_closed_forms():
    assert tuple_entry(3, 0, 1) == 4 and tuple_entry(3, 2, 5) == 4
    assert a_value(3, 1, 0) == 5


def test_b1_graph_is_regular():
    for r in range(3, 9):
        tr = odd_cycle_trace(2 * r + 3, r)
        left = [tr.S_sets[0] - {1}] + list(tr.S_sets[1:])
        degs = {len(s) for s in left} | {sum(y in s for s in left) for y in range(1, 2 * r, 2)}
        assert degs == {r - 2}


def test_trace_rejects_small_n():
    with pytest.raises(PreconditionError):
        odd_cycle_trace(5, 3)


def test_c5_has_no_three_color_group():
    with pytest.raises(ConstructionError):
        _odd_group(5, 1)


@pytest.mark.parametrize("n", range(4, 24))
def test_r2_patterns_literal_tails(n):
    pats = _r2_patterns(n)
    if n % 4 == 2:
        assert pats[0][-2:] == [2, 1] and pats[1][-2:] == [0, 3]
    if n % 4 == 0:
        assert pats[0] == [x % 4 for x in range(n)]


@pytest.mark.parametrize("n", range(3, 41))
@pytest.mark.parametrize("r", range(2, 6))
def test_cycle_family_sweep(n, r):
    fam = cycle_family(n, r)
    assert fam.t == r
    assert fam.k == cycle_family_palette(n, r)
    assert verify_compatible_family(cycle_graph(n), fam)


def test_small_odd_palette_formula():
    assert cycle_family_palette(3, 2) == 6
    assert cycle_family_palette(5, 3) == 8
    assert cycle_family_palette(7, 3) == 7
    assert cycle_family_palette(6, 3) == 6


@pytest.mark.parametrize("bad", [(2, 2), (5, 1)])
def test_cycle_family_rejects(bad):
    with pytest.raises(PreconditionError):
        cycle_family(*bad)
