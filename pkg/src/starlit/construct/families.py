"""Star colorings of cycles and star compatible families of paths and cycles."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import cycle_graph, path_graph
from ..solve import bipartite_perfect_matching
from ..verify import CompatibleFamily, EdgeColoring
from . import _tables
from .common import ConstructionError, PreconditionError, ceil_div, released, released_family


def path_family(n: int, r: int) -> CompatibleFamily:
    """``r`` compatible colorings of P_n over ``2r`` colors: edge ``x`` gets ``x + 2i mod 2r``."""
    if n < 2 or r < 2:
        raise PreconditionError(f"path_family needs n, r >= 2 (got n={n}, r={r})")
    g = path_graph(n)
    fam = CompatibleFamily(
        tuple(EdgeColoring.of(g, [(x + 2 * i) % (2 * r) for x in range(n - 1)], 2 * r)
              for i in range(r)), 2 * r)
    return released_family(g, fam)


def path_star_coloring(n: int) -> EdgeColoring:
    """Optimal star coloring of P_n: 1 color for one edge, 2 up to three edges, else 3."""
    if n < 2:
        raise PreconditionError(f"path needs at least one edge, got n={n}")
    period = 1 if n == 2 else 2 if n <= 4 else 3
    return released(path_graph(n), EdgeColoring.of(path_graph(n), [x % period for x in range(n - 1)],
                                                   period))


def cycle_star_coloring(n: int) -> EdgeColoring:
    """A star coloring of C_n with 3 colors, or 4 when n = 5.

    Cyclic words built from the blocks ``012`` and ``0102`` never contain an
    alternating window ``abab``, and every n >= 3 other than 5 is a sum of 3s
    and 4s.
    """
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    if n == 5:
        colors = list(_tables.C5_STAR)
    else:
        fours = n % 3  # 4*fours = n (mod 3)
        colors = [0, 1, 2] * ((n - 4 * fours) // 3) + [0, 1, 0, 2] * fours
    return released(cycle_graph(n), EdgeColoring.of(cycle_graph(n), colors, 4 if n == 5 else 3))


@dataclass(frozen=True)
class CycleFamilyTrace:
    """Parameters of the odd-cycle family with ``2r+1`` colors.

    ``tuples[i][l-1]`` is the ``l``-th entry of the i-th color tuple;
    ``a_values[i]`` lists the ``2r`` consecutive values used by coloring ``i``.
    """

    n: int
    r: int
    b: int
    p: int
    u: int
    tuples: tuple[tuple[int, ...], ...]
    a_values: tuple[tuple[int, ...], ...]
    q: tuple[int, ...]
    S_sets: tuple[frozenset[int], ...] | None = None
    matching: tuple[int, ...] | None = None


def tuple_entry(r: int, i: int, l: int) -> int:
    """Entry ``l`` (1-based) of tuple ``i``: runs ``2r-2i-2, ..., 2r, 1, 2, ...``."""
    return (2 * r - 2 * i - 4 + l) % (2 * r) + 1


def a_value(r: int, i: int, s: int) -> int:
    return ((2 * r - 1) * i + s) % (2 * r + 1)


def odd_cycle_trace(n: int, r: int) -> CycleFamilyTrace:
    if n % 2 == 0 or n < 2 * r + 1 or r < 2:
        raise PreconditionError(f"needs odd n >= 2r+1 and r >= 2 (got n={n}, r={r})")
    p, u = divmod(n - 1, 2 * r)
    b = (n - 1 - 2 * r) // 2
    tuples = tuple(tuple(tuple_entry(r, i, l) for l in range(1, b + 2)) for i in range(r))
    avals = tuple(tuple(a_value(r, i, s) for s in range(2 * r)) for i in range(r))
    S_sets = matching = None
    if b == 0:
        q = tuple(a_value(r, i, 2 * r) for i in range(r))
    elif b > 1:
        q = tuple(tuples[i][b] for i in range(r))
    else:
        odd = set(range(1, 2 * r, 2))
        S_sets = tuple(frozenset(odd - {avals[i][0], avals[i][-1]}) for i in range(r))
        # S_0 is not joined to color 1
        left = [S_sets[0] - {1}] + list(S_sets[1:])
        res = bipartite_perfect_matching(left, odd)
        if not res.ok:
            raise ConstructionError(
                f"no perfect matching for n={n}, r={r}; Hall violator {res.hall_violator}",
                S_sets=S_sets)
        matching = q = res.matching
    return CycleFamilyTrace(n, r, b, p, u, tuples, avals, tuple(q), S_sets, matching)


def _odd_family_colorings(trace: CycleFamilyTrace) -> list[list[int]]:
    r, b = trace.r, trace.b
    T = trace.tuples
    out = []
    for i in range(r):
        prev = T[(i - 1) % r]
        out.append([T[i][l] for l in range(b - 1, -1, -1)] + list(trace.a_values[i])
                   + [prev[l] for l in range(b)] + [trace.q[i]])
    return out


def _r2_patterns(n: int) -> list[list[int]]:
    """The two literal colorings for r = 2 (4 colors if n even, 5 if n odd)."""
    if n % 4 == 0:
        return [[x % 4 for x in range(n)], [(x + 2) % 4 for x in range(n)]]
    if n % 4 == 2:
        body = n - 2
        return [[x % 4 for x in range(body)] + [2, 1],
                [(x + 2) % 4 for x in range(body)] + [0, 3]]
    if n % 4 == 1:
        return [[x % 4 for x in range(n - 5)] + [0, 1, 2, 4, 3],
                [4, 3] + [x % 4 for x in range(n - 2)]]
    return [[x % 4 for x in range(n - 3)] + [0, 4, 2],
            [4, 3] + [x % 4 for x in range(n - 3)] + [1]]


def _even_colorings(n: int, r: int) -> list[list[int]]:
    if r == 2:
        return _r2_patterns(n)
    return [[(x + 2 * i) % (2 * r) for x in range(n - 1)] + [(n + 1 + 2 * i) % (2 * r)]
            for i in range(r)]


def _odd_group(n: int, s: int) -> tuple[list[list[int]], int]:
    """``s`` compatible colorings of odd C_n with ``2s+1`` colors (needs n >= 2s+1)."""
    if s == 1:
        # a single coloring; C_5 has none with 3 colors
        if n == 5:
            raise ConstructionError("C_5 has no 3-color star coloring")
        return [list(cycle_star_coloring(n).colors)], 3
    if s == 2:
        return _r2_patterns(n), 5
    return _odd_family_colorings(odd_cycle_trace(n, s)), 2 * s + 1


def cycle_family_palette(n: int, r: int) -> int:
    if n % 2 == 0:
        return 2 * r
    if n >= 2 * r + 1:
        return 2 * r + 1
    return 2 * r + ceil_div(2 * r, n - 1)


def cycle_family(n: int, r: int) -> CompatibleFamily:
    """``r`` pairwise star compatible colorings of C_n.

    Palette: ``2r`` for even n, ``2r+1`` for odd n >= 2r+1, and
    ``2r + ceil(2r/(n-1))`` for smaller odd n, where groups of colorings on
    disjoint palettes are stacked. For odd n >= 2r+1 with r > 2 the family
    carries its construction parameters in ``meta['trace']``.
    """
    if n < 3 or r < 2:
        raise PreconditionError(f"cycle_family needs n >= 3, r >= 2 (got n={n}, r={r})")
    g = cycle_graph(n)
    meta: dict = {}
    if n % 2 == 0:
        cols = _even_colorings(n, r)
        k = 2 * r
    elif n >= 2 * r + 1:
        if r == 2:
            cols = _r2_patterns(n)
        else:
            trace = odd_cycle_trace(n, r)
            meta["trace"] = trace
            cols = _odd_family_colorings(trace)
        k = 2 * r + 1
    else:
        cols, sizes = _stacked_small_odd(n, r)
        meta["groups"] = sizes
        k = sum(sizes)
    fam = CompatibleFamily(tuple(EdgeColoring.of(g, c, k) for c in cols), k, meta)
    return released_family(g, fam)


def _stacked_small_odd(n: int, r: int) -> tuple[list[list[int]], list[int]]:
    """Odd n < 2r+1: stack groups of compatible colorings on disjoint palettes."""
    p = (n - 1) // 2
    a = ceil_div(2 * r, n - 1) - 1
    rest = r - a * p
    groups: list[tuple[list[list[int]], int]] = []
    if n == 5 and rest == 1:
        # the leftover single coloring would need a 3-color star coloring of C_5;
        # replace one (5,2) group plus the leftover by a searched (8,3) family
        groups.append((_tables.C5_FAMILY_8_3, 8))
        groups += [_odd_group(n, p)] * (a - 1)
    else:
        groups += [_odd_group(n, p)] * a
        groups.append(_odd_group(n, rest))
    cols: list[list[int]] = []
    sizes = []
    offset = 0
    for members, k in groups:
        cols += [[c + offset for c in m] for m in members]
        sizes.append(k)
        offset += k
    return cols, sizes
