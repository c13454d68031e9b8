from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..graph import Graph, GraphError, bipartition, cartesian_product
from ..verify import CompatibleFamily, EdgeColoring, verify_compatible_family, verify_star

Rule = Callable[[int, tuple[int, ...]], int]


class ConstructionError(RuntimeError):
    """A construction produced an invalid coloring or could not be completed."""

    def __init__(self, msg: str, **context):
        super().__init__(msg)
        self.context = context


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    palette_size: int


def released(g: Graph, c: EdgeColoring, bound: int | None = None) -> EdgeColoring:
    """Verify before handing a coloring out."""
    rep = verify_star(g, c)
    if not rep:
        raise ConstructionError(f"invalid star coloring of {g!r}: {rep.describe()}", coloring=c)
    if bound is not None and c.palette_size > bound:
        raise ConstructionError(f"palette {c.palette_size} exceeds bound {bound} on {g!r}")
    return c


def released_family(g: Graph, fam: CompatibleFamily) -> CompatibleFamily:
    rep = verify_compatible_family(g, fam)
    if not rep:
        raise ConstructionError(f"invalid family on {g!r}: {rep.describe()}", family=fam)
    return fam


def from_rule(g: Graph, rule: Rule, palette_size: int | None = None, **meta) -> EdgeColoring:
    """Color each edge of a product graph by ``rule(axis, start_coords)``."""
    return EdgeColoring.of(g, [rule(*g.edge_key(e)) for e in range(g.edge_count)],
                           palette_size, **meta)


def rule_of(g: Graph, c: EdgeColoring) -> Rule:
    table = {g.edge_key(e): c.colors[e] for e in range(g.edge_count)}
    return lambda axis, coords: table[axis, tuple(coords)]


def transposed(rule: Rule) -> Rule:
    """Rule for the two-factor product with its factors swapped."""
    return lambda axis, c: rule(1 - axis, (c[1], c[0]))


def transfer(src: Graph, c: EdgeColoring, dst: Graph, perm: Sequence[int] | None = None,
             **meta) -> EdgeColoring:
    """Move a coloring between two labelings of the same product.

    Axis ``i`` of ``src`` is axis ``perm[i]`` of ``dst`` (identity by default).
    """
    c.bind_check(src)
    if src.label is None or dst.label is None:
        raise GraphError("transfer needs product labels on both graphs")
    nd = len(dst.label.factors)
    perm = list(range(nd)) if perm is None else list(perm)
    out = [-1] * dst.edge_count
    for e, (u, v) in enumerate(src.edges):
        cu, cv = src.coords(u), src.coords(v)
        du, dv = [0] * nd, [0] * nd
        for i, p in enumerate(perm):
            du[p], dv[p] = cu[i], cv[i]
        out[dst.edge_index[dst.vertex_at(du), dst.vertex_at(dv)]] = c.colors[e]
    merged = dict(c.meta)
    merged.update(meta)
    return EdgeColoring.of(dst, out, c.palette_size, **merged)


def _factor_vertex_colors(kind: str, n: int) -> list[int]:
    cols = [x % 2 for x in range(n)]
    if kind == "cycle" and n % 2:
        cols[-1] = 2
    return cols


def _exact_vertex_coloring(g: Graph) -> list[int]:
    n = g.vertex_count
    order = sorted(range(n), key=lambda v: -g.degree(v))
    for k in range(1, n + 1):
        cols = [-1] * n

        def rec(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            taken = {cols[w] for w, _ in g.adjacency[v]}
            for c in range(min(k, used + 1)):
                if c not in taken:
                    cols[v] = c
                    if rec(i + 1, max(used, c + 1)):
                        return True
            cols[v] = -1
            return False

        if rec(0, 0):
            return cols
    return []


def proper_vertex_coloring(g: Graph) -> VertexColoring:
    """Proper vertex coloring with χ(g) colors.

    Bipartite graphs get their 2-coloring; path/cycle products get the sum of
    per-factor colorings modulo the largest factor palette; anything else is
    colored by exact backtracking.
    """
    if g.vertex_count == 0:
        return VertexColoring((), 0)
    if g.edge_count == 0:
        return VertexColoring((0,) * g.vertex_count, 1)
    side = bipartition(g)
    if side is not None:
        return VertexColoring(tuple(side), 2)
    if g.label is not None:
        per = [_factor_vertex_colors(f.kind, f.length) for f in g.label.factors]
        k = max(max(p) for p in per) + 1
        cols = tuple(sum(per[i][x] for i, x in enumerate(cs)) % k for cs in g.label.vertex_coords)
        return VertexColoring(cols, k)
    cols = _exact_vertex_coloring(g)
    return VertexColoring(tuple(cols), max(cols) + 1)


def power_graph(g: Graph, d: int) -> Graph:
    """``g□g□...□g`` (d times), left-associated."""
    out = g
    for _ in range(d - 1):
        out = cartesian_product(out, g)
    return out


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


__all__ = [
    "ConstructionError", "PreconditionError", "VertexColoring", "released", "released_family",
    "from_rule", "rule_of", "transposed", "transfer", "proper_vertex_coloring", "power_graph",
    "ceil_div",
]
