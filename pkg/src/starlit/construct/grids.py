"""Star colorings of grids, P_m□C_n, C_m□C_n, hypercubes and toroidal grids.

Colorings of two-factor products are written as rules ``rule(axis, (i, j))``
where ``(i, j)`` is the start vertex of the edge along ``axis`` (axis 0 runs
between rows ``i`` and ``i+1``, axis 1 between columns ``j`` and ``j+1``).
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from ..graph import (Graph, cartesian_product, cycle_graph, grid_graph, hypercube, path_cycle_graph,
                     path_graph, toroidal_graph)
from ..verify import CompatibleFamily, EdgeColoring
from . import _tables
from .common import (PreconditionError, from_rule, released, rule_of, transfer, transposed)
from .families import (cycle_family, cycle_family_palette, cycle_star_coloring, path_family,
                       path_star_coloring, _r2_patterns)
from .products import chain_family, compose_with_family, product_star_coloring

log = logging.getLogger(__name__)

DISCREPANCY_C5 = ("C_5 has no three pairwise star compatible colorings over 7 colors "
                  "(exhaustive search); the odd-cycle bound uses C_5 as (8,3) instead")


def compose_with_path(g: Graph, famG: CompatibleFamily, n: int) -> EdgeColoring:
    """G□P_n with ``famG.k + χ'_s(P_n)`` colors (needs t >= 2)."""
    return compose_with_family(g, famG, path_graph(n), path_star_coloring(n))


def compose_with_cycle(g: Graph, famG: CompatibleFamily, n: int) -> EdgeColoring:
    """G□C_n with ``famG.k + χ'_s(C_n)`` colors (needs t >= χ(C_n))."""
    return compose_with_family(g, famG, cycle_graph(n), cycle_star_coloring(n))


# -- P_m□P_n -----------------------------------------------------------------

def grid2_value(m: int, n: int) -> int:
    """Star chromatic index of P_m□P_n."""
    m, n = sorted((m, n))
    if m == n == 2:
        return 3
    if m == 2:
        return 4
    if m == 3 and n in (3, 4):
        return 5
    return 6


def _f2n(axis: int, c: tuple[int, ...]) -> int:
    i, j = c
    if axis == 0:
        return (j + 1) % 4
    return j % 4 if i == 0 else (j + 3) % 4


def _fmn(axis: int, c: tuple[int, ...]) -> int:
    i, j = c
    if axis == 0:
        return i % 4 if j % 2 == 0 else (i + 3) % 4
    if j % 4 == 1:
        return 4 + i % 2
    if j % 4 == 3:
        return 5 - i % 2
    return (i + 1) % 4


def grid2_star_coloring(m: int, n: int) -> EdgeColoring:
    """Optimal star coloring of P_m□P_n (3, 4, 5 or 6 colors)."""
    if m < 2 or n < 2:
        raise PreconditionError(f"grid sides must be >= 2, got {m}, {n}")
    g = grid_graph([m, n])
    swapped = False
    if m == n == 2:
        rule = lambda axis, c: 0 if axis == 0 else 1 + c[0]
    elif m == 2:
        rule = _f2n
    elif n == 2:
        rule, swapped = transposed(_f2n), True
    elif (m, n) == (3, 3):
        rule = rule_of(g, EdgeColoring.of(g, _tables.P3P3))
    elif (m, n) == (4, 3):
        rule = rule_of(g, EdgeColoring.of(g, _tables.P4P3))
    elif (m, n) == (3, 4):
        g43 = grid_graph([4, 3])
        rule, swapped = transposed(rule_of(g43, EdgeColoring.of(g43, _tables.P4P3))), True
    else:
        rule = _fmn
    k = grid2_value(m, n)
    return released(g, from_rule(g, rule, k, transposed=swapped), bound=k)


def grid_d_star_coloring(dims: Sequence[int]) -> EdgeColoring:
    """Star coloring of P_{l1}□...□P_{ld} with at most ``4d - 2`` colors.

    The first ``d-2`` paths carry (4,2) families combined into a
    ``(4(d-2), 2)`` family, composed with an optimal coloring of the last two.
    """
    dims = list(dims)
    if len(dims) < 2 or any(l < 2 for l in dims):
        raise PreconditionError(f"need d >= 2 sides, each >= 2; got {dims}")
    if len(dims) == 2:
        return grid2_star_coloring(*dims)
    head = [path_graph(l) for l in dims[:-2]]
    g_head, fam = chain_family(head, [path_family(l, 2) for l in dims[:-2]])
    tail = grid_graph(dims[-2:])
    col = compose_with_family(g_head, fam, tail, grid2_star_coloring(*dims[-2:]))
    target = grid_graph(dims)
    return released(target, transfer(cartesian_product(g_head, tail), col, target),
                    bound=4 * len(dims) - 2)


# -- P_m□C_n -----------------------------------------------------------------

def path_cycle_value(m: int, n: int) -> tuple[int, bool]:
    """``(value, exact)`` for P_m□C_n; when not exact, ``value`` is an upper bound."""
    if m == 2 and n % 4 == 0:
        # P_2□C_{4k} covers P_2□C_4, so the 4-coloring of the latter lifts
        return 4, True
    if m == 2 and n >= 5:
        return 5, True
    if n % 3 == 0 or (m >= 3 and n % 4 == 0) or (m in (3, 4) and n % 4 == 2):
        return 6, True
    return 7, False


_RUNG_TUPLES = {
    1: {0: (5, 6, 5, 1), 1: (5, 6, 5, 2), 2: (5, 6, 5, 4), -2: (5, 6, 5, 3), -1: (5, 6, 5, 0)},
    3: {0: (6, 5, 3, 5), 1: (5, 2, 5, 6), 2: (5, 4, 5, 6), -2: (5, 1, 5, 6), -1: (0, 5, 6, 5)},
}


def _two_ring_rows(n: int) -> tuple[list[int], list[int]]:
    """Rows of the 5-coloring of P_2□C_n (n >= 6).

    Row 0 is the 3-color cycle word with its final block written ``102``;
    row 1 is row 0 with colors 1 and 2 exchanged. Rungs alternate 3 and 4.
    """
    row0 = list(cycle_star_coloring(n).colors[:-3]) + [1, 0, 2]
    return row0, [(0, 2, 1)[x] for x in row0]


def path_cycle_star_coloring(m: int, n: int) -> EdgeColoring:
    """Star coloring of P_m□C_n; optimal where the value is known, else <= 7 colors."""
    if m < 2 or n < 3:
        raise PreconditionError(f"need m >= 2, n >= 3; got {m}, {n}")
    g = path_cycle_graph(m, n)
    value, exact = path_cycle_value(m, n)
    if m == 2 and n % 4 == 0:
        base = path_cycle_graph(2, 4)
        lift = rule_of(base, EdgeColoring.of(base, _tables.P2C4, 4))
        return released(g, from_rule(g, lambda axis, c: lift(axis, (c[0], c[1] % 4)), 4,
                                     case="table" if n == 4 else "lifted-table"), value)
    if (m, n) == (2, 5):
        return released(g, EdgeColoring.of(g, _tables.P2C5, 5, case="table"), value)
    if m == 2 and n >= 6:
        rows = _two_ring_rows(n)

        def rule(axis, c):
            i, j = c
            return (3 if j % 2 == 0 else 4) if axis == 0 else rows[i][j]

        return released(g, from_rule(g, rule, 5, case="two-ring"), value)
    if n % 3 == 0:
        offs = (0, 2, 1)

        def rule(axis, c):
            i, j = c
            if axis == 0:
                return (i + offs[j % 3]) % 3 + 3
            return (i + j % 3) % 3

        return released(g, from_rule(g, rule, 6, case="mod3"), value)
    if n % 4 == 0:
        # the 6-color grid rule closes up around the ring when 4 | n
        return released(g, from_rule(g, _fmn, 6, case="mod4"), value)
    if n % 4 == 2:
        if m <= 4:
            cn, pm = cycle_graph(n), path_graph(m)
            col = compose_with_family(cn, cycle_family(n, 2), pm, path_star_coloring(m))
            return released(g, transfer(cartesian_product(cn, pm), col, g, perm=[1, 0],
                                        case="cycle-family", transposed=True), value)
        pm, cn = path_graph(m), cycle_graph(n)
        col = compose_with_family(pm, path_family(m, 2), cn, cycle_star_coloring(n))
        return released(g, EdgeColoring(col.graph_fingerprint, col.colors, col.palette_size,
                                        {"case": "path-family"}), value)
    # n = 1 or 5 (mod 6): rows alternate the two (5,2) ring colorings, rungs follow fixed tuples
    rows = _r2_patterns(n)
    tuples = _RUNG_TUPLES[n % 4]

    def rule(axis, c):
        i, j = c
        if axis == 1:
            return rows[i % 2][j]
        key = j if j < 2 else (2 if j <= n - 3 else j - n)
        return tuples[key][i % 4]

    return released(g, from_rule(g, rule, 7, case="rung-tuples"), value)


# -- C_m□C_n -----------------------------------------------------------------

def _family_palette(length: int, t: int) -> int:
    return cycle_family_palette(length, t)


def _cc_plan(m: int, n: int) -> tuple[int, int, int, int, bool]:
    """Cheapest ``(palette, family_cycle, other_cycle, t, swapped)`` composition."""
    best = None
    for fam_len, other, swapped in ((m, n, False), (n, m, True)):
        t = 2 if other % 2 == 0 else 3
        total = _family_palette(fam_len, t) + (4 if other == 5 else 3)
        if best is None or total < best[0]:
            best = (total, fam_len, other, t, swapped)
    return best


def cycle_cycle_bound(m: int, n: int) -> int:
    """Upper bound on χ'_s(C_m□C_n) delivered by :func:`cycle_cycle_star_coloring`."""
    if (m, n) == (3, 3):
        return 6
    if (m, n) == (5, 5):
        return 7
    if m % 2 == 0 and n % 2 == 0:
        return 7
    if m % 2 == 0 or n % 2 == 0:
        return 9 if 3 in (m, n) else 8
    if 5 in (m, n) and not _tables.C5_FAMILY_7_3_EXISTS:
        return 11
    return 10


def cycle_cycle_star_coloring(m: int, n: int) -> EdgeColoring:
    """Star coloring of C_m□C_n by composing a cycle family with a 3- or 4-coloring.

    ``meta['transposed']`` is set when the family sits on the second factor.
    """
    if m < 3 or n < 3:
        raise PreconditionError(f"cycles need length >= 3; got {m}, {n}")
    g = toroidal_graph([m, n])
    if (m, n) == (3, 3):
        return released(g, EdgeColoring.of(g, _tables.C3C3, 6, transposed=False), 6)
    if (m, n) == (5, 5):
        return released(g, EdgeColoring.of(g, _tables.C5C5, 7, transposed=False), 7)
    total, fam_len, other, t, swapped = _cc_plan(m, n)
    cf, co = cycle_graph(fam_len), cycle_graph(other)
    col = compose_with_family(cf, cycle_family(fam_len, t), co, cycle_star_coloring(other))
    meta = {"transposed": swapped, "family": (fam_len, t)}
    bound = cycle_cycle_bound(m, n)
    if m % 2 and n % 2 and 5 in (m, n) and bound > 10:
        meta["note"] = DISCREPANCY_C5
        log.info("C_%d□C_%d: %s", m, n, DISCREPANCY_C5)
    out = transfer(cartesian_product(cf, co), col, g, perm=[1, 0] if swapped else None, **meta)
    return released(g, out, bound)


# -- hypercubes --------------------------------------------------------------

def hypercube_bound(d: int) -> int:
    return {1: 1, 2: 3, 3: 4}.get(d, 2 * d - 2)


def hypercube_star_coloring(d: int) -> EdgeColoring:
    """Star coloring of Q_d: exact for d <= 4, at most ``2d - 2`` colors for d >= 3."""
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if d == 1:
        return EdgeColoring.of(hypercube(1), [0], 1)
    if d == 2:
        g = hypercube(2)
        return transfer(grid_graph([2, 2]), grid2_star_coloring(2, 2), g)
    g = hypercube(3)
    col = released(g, EdgeColoring.of(g, _tables.Q3, 4))
    p2 = EdgeColoring.of(path_graph(2), [0], 1)
    for k in range(4, d + 1):
        col = product_star_coloring(g, col, path_graph(2), p2)
        g = hypercube(k)
    return released(g, col, hypercube_bound(d))


# -- toroidal grids ----------------------------------------------------------

def toroidal_bound(dims: Sequence[int]) -> int | None:
    """Bound for the toroidal grid, or None when neither hypothesis applies.

    All sides even: ``4d - 1``. All sides > 3: ``7d - 4``, one more when exactly
    one side is 5 and all others are odd (C_5 is only (8,3)-star colorable).
    """
    d = len(dims)
    if d == 2:
        return cycle_cycle_bound(*dims)
    if all(l % 2 == 0 for l in dims):
        return 4 * d - 1
    if all(l > 3 for l in dims):
        lone_five = sum(l == 5 for l in dims) == 1 and all(l % 2 for l in dims)
        extra = 1 if lone_five and not _tables.C5_FAMILY_7_3_EXISTS else 0
        return 7 * d - 4 + extra
    return None


def _c5c5_family() -> CompatibleFamily:
    g = toroidal_graph([5, 5])
    cols = _tables.C5C5_FAMILY_14_3
    return CompatibleFamily(tuple(EdgeColoring.of(g, c, 14) for c in cols), 14)


def _blocks(idx: list[int], dims: Sequence[int], t: int) -> list[list[int]]:
    """Group factor indices into family blocks; with t = 3, pairs of C_5 share a block."""
    if t == 2:
        return [[i] for i in idx]
    fives = [i for i in idx if dims[i] == 5]
    blocks = [fives[k:k + 2] for k in range(0, len(fives) - 1, 2)]
    blocks += [[i] for i in idx if dims[i] != 5 or (len(fives) % 2 and i == fives[-1])]
    return blocks


def _block_palette(block: list[int], dims: Sequence[int], t: int) -> int:
    if len(block) == 2:
        return 14
    return _family_palette(dims[block[0]], t)


def toroidal_star_coloring(dims: Sequence[int]) -> EdgeColoring:
    """Star coloring of C_{l1}□...□C_{ld}.

    Families on d-2 of the cycles (t = 2 when every side is even, else 3) are
    combined and composed with a coloring of the remaining two; the split with
    the smallest palette wins.
    """
    dims = list(dims)
    d = len(dims)
    if d < 2 or any(l < 3 for l in dims):
        raise PreconditionError(f"need d >= 2 sides, each >= 3; got {dims}")
    if d == 2:
        return cycle_cycle_star_coloring(*dims)
    t = 2 if all(l % 2 == 0 for l in dims) else 3
    best = None
    for p, q in combinations(range(d), 2):
        rest = [i for i in range(d) if i not in (p, q)]
        blocks = _blocks(rest, dims, t)
        cc_pal = cycle_cycle_star_coloring(dims[p], dims[q]).palette_size
        total = sum(_block_palette(b, dims, t) for b in blocks) + cc_pal
        key = (total, (p, q) != (d - 2, d - 1), p, q)
        if best is None or key < best[0]:
            best = (key, blocks, (p, q))
    _, blocks, (p, q) = best

    graphs, fams = [], []
    for b in blocks:
        if len(b) == 2:
            graphs.append(toroidal_graph([5, 5]))
            fams.append(_c5c5_family())
        else:
            graphs.append(cycle_graph(dims[b[0]]))
            fams.append(cycle_family(dims[b[0]], t))
    g_head, fam = chain_family(graphs, fams)
    tail = toroidal_graph([dims[p], dims[q]])
    col = compose_with_family(g_head, fam, tail, cycle_cycle_star_coloring(dims[p], dims[q]))
    order = [i for b in blocks for i in b] + [p, q]
    target = toroidal_graph(dims)
    meta = {"order": order, "t": t}
    bound = toroidal_bound(dims)
    if bound is not None and bound > (4 * d - 1 if t == 2 else 7 * d - 4):
        meta["note"] = DISCREPANCY_C5
    out = transfer(cartesian_product(g_head, tail), col, target, perm=order, **meta)
    return released(target, out, bound)
