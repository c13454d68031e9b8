"""Colorings of G□H assembled from colorings and compatible families of the factors.

All functions index the product exactly as :func:`starlit.graph.cartesian_product`
does: G-axis edge ``e`` in copy ``x`` has index ``x*|E(G)| + e`` and H-axis edge
``f`` in copy ``a`` has index ``|V(H)|*|E(G)| + a*|E(H)| + f``.
"""

from __future__ import annotations

from ..graph import Graph, cartesian_product
from ..verify import CompatibleFamily, EdgeColoring, verify_star
from .common import (PreconditionError, VertexColoring, power_graph, proper_vertex_coloring,
                     released, released_family)


def _product_colors(g: Graph, h: Graph, g_color, h_color) -> list[int]:
    """``g_color(x, e)`` colors G-edge ``e`` in H-copy ``x``; ``h_color(a, f)`` likewise."""
    out = [g_color(x, e) for x in range(h.vertex_count) for e in range(g.edge_count)]
    out += [h_color(a, f) for a in range(g.vertex_count) for f in range(h.edge_count)]
    return out


def _require_star(graph: Graph, c: EdgeColoring, name: str) -> None:
    rep = verify_star(graph, c)
    if not rep:
        raise PreconditionError(f"{name} is not a star coloring: {rep.describe()}")


def product_star_coloring(g: Graph, fG: EdgeColoring, h: Graph, fH: EdgeColoring) -> EdgeColoring:
    """Star coloring of G□H with ``min(kG*χ(H) + kH, kH*χ(G) + kG)`` colors.

    Variant ``f`` shifts the G-copies by ``kG * c_H(x)``; variant ``g`` shifts
    the H-copies by ``kH * c_G(a)``. The smaller one is returned (``f`` on ties)
    and ``meta['variant']`` records which.
    """
    _require_star(g, fG, "fG")
    _require_star(h, fH, "fH")
    kG, kH = fG.palette_size, fH.palette_size
    cG, cH = proper_vertex_coloring(g), proper_vertex_coloring(h)
    prod = cartesian_product(g, h)
    size_f = kG * cH.palette_size + kH
    size_g = kH * cG.palette_size + kG
    if size_f <= size_g:
        cols = _product_colors(
            g, h,
            lambda x, e: fG.colors[e] + kG * cH.colors[x],
            lambda a, f: fH.colors[f] + kG * cH.palette_size)
        c = EdgeColoring.of(prod, cols, size_f, variant="f")
    else:
        cols = _product_colors(
            g, h,
            lambda x, e: fG.colors[e] + kH * cG.palette_size,
            lambda a, f: fH.colors[f] + kH * cG.colors[a])
        c = EdgeColoring.of(prod, cols, size_g, variant="g")
    return released(prod, c)


def compose_with_family(g: Graph, famG: CompatibleFamily, h: Graph, fH: EdgeColoring,
                        cH: VertexColoring | None = None) -> EdgeColoring:
    """Star coloring of G□H with ``famG.k + fH.palette_size`` colors.

    The copy of G at ``x`` uses member ``cH(x)`` of the family; H-copies reuse
    ``fH`` shifted past the family palette. Needs ``famG.t >= χ(H)``.
    """
    cH = cH or proper_vertex_coloring(h)
    if famG.t < cH.palette_size:
        raise PreconditionError(
            f"family has {famG.t} members but H needs {cH.palette_size} vertex colors")
    _require_star(h, fH, "fH")
    for i, member in enumerate(famG.colorings):
        _require_star(g, member, f"family member {i}")
    k = famG.k
    prod = cartesian_product(g, h)
    cols = _product_colors(
        g, h,
        lambda x, e: famG.colorings[cH.colors[x]].colors[e],
        lambda a, f: fH.colors[f] + k)
    return released(prod, EdgeColoring.of(prod, cols, k + fH.palette_size))


def product_family(g: Graph, famG: CompatibleFamily, h: Graph, famH: CompatibleFamily,
                   cG: VertexColoring | None = None,
                   cH: VertexColoring | None = None) -> CompatibleFamily:
    """``(kG + kH, min(tG, tH))`` family on G□H.

    Member ``i`` colors the G-copy at ``x`` with ``famG[(cH(x) + i) mod tG]`` and
    the H-copy at ``a`` with ``famH[(cG(a) + i) mod tH]`` shifted by ``kG``.
    """
    cG = cG or proper_vertex_coloring(g)
    cH = cH or proper_vertex_coloring(h)
    tG, tH = famG.t, famH.t
    if tG < cH.palette_size or tH < cG.palette_size:
        raise PreconditionError(
            f"need t_G >= χ(H) and t_H >= χ(G); got t_G={tG}, χ(H)={cH.palette_size}, "
            f"t_H={tH}, χ(G)={cG.palette_size}")
    kG = famG.k
    prod = cartesian_product(g, h)
    members = []
    for i in range(min(tG, tH)):
        cols = _product_colors(
            g, h,
            lambda x, e: famG.colorings[(cH.colors[x] + i) % tG].colors[e],
            lambda a, f: famH.colorings[(cG.colors[a] + i) % tH].colors[f] + kG)
        members.append(EdgeColoring.of(prod, cols, kG + famH.k))
    return released_family(prod, CompatibleFamily(tuple(members), kG + famH.k))


def power_family(g: Graph, famG: CompatibleFamily, d: int) -> CompatibleFamily:
    """``(d*kG, tG)`` family on the d-fold product of ``g`` (see :func:`power_graph`)."""
    if d < 1:
        raise PreconditionError("d must be >= 1")
    if d == 1:
        return famG
    cG = proper_vertex_coloring(g)
    if famG.t < cG.palette_size:
        raise PreconditionError(f"t_G={famG.t} < χ(G)={cG.palette_size}")
    cur_graph, fam = g, famG
    for _ in range(d - 1):
        fam = product_family(cur_graph, fam, g, famG, proper_vertex_coloring(cur_graph), cG)
        cur_graph = cartesian_product(cur_graph, g)
    return fam


def chain_family(graphs: list[Graph], families: list[CompatibleFamily]) -> tuple[Graph, CompatibleFamily]:
    """Left-associated :func:`product_family` over several factors."""
    cur_graph, fam = graphs[0], families[0]
    for g, f in zip(graphs[1:], families[1:]):
        fam = product_family(cur_graph, fam, g, f)
        cur_graph = cartesian_product(cur_graph, g)
    return cur_graph, fam


__all__ = ["product_star_coloring", "compose_with_family", "product_family", "power_family",
           "chain_family", "power_graph"]
