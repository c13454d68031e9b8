"""JSON and DOT serialization for graphs, colorings and families."""

from __future__ import annotations

import json
from typing import Any

from .graph import Factor, Graph, GraphError, product_of
from .verify import CompatibleFamily, EdgeColoring

# fixed 10-entry scheme; palette indices past the end are drawn black with a label only
DOT_PALETTE = ("red", "blue", "green3", "orange", "purple", "cyan3", "magenta", "gold3",
               "brown", "gray40")


def graph_to_dict(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if g.label is not None:
        out["factors"] = [{"kind": f.kind, "len": f.length} for f in g.label.factors]
    return out


def graph_from_dict(d: dict[str, Any]) -> Graph:
    """Rebuild a graph; with ``factors`` present the labeled product is rebuilt and
    must reproduce the listed edges exactly."""
    try:
        n, edges = int(d["n"]), [tuple(e) for e in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    factors = d.get("factors")
    if not factors:
        return Graph(n, edges)
    g = product_of([Factor(f["kind"], int(f["len"])) for f in factors])
    if g.vertex_count != n or list(g.edges) != [tuple(map(int, e)) for e in edges]:
        raise GraphError("edge list does not match the canonical order of the listed factors")
    return g


def coloring_to_dict(c: EdgeColoring) -> dict[str, Any]:
    return {"k": c.palette_size, "colors": list(c.colors)}


def coloring_from_dict(g: Graph, d: dict[str, Any]) -> EdgeColoring:
    try:
        return EdgeColoring.of(g, d["colors"], int(d["k"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring JSON: {exc}") from exc


def family_to_dict(fam: CompatibleFamily) -> dict[str, Any]:
    return {"k": fam.palette_size, "t": fam.t, "colorings": [list(c.colors) for c in fam.colorings]}


def dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def to_dot(g: Graph, c: EdgeColoring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for e, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"  {u} -- {v};")
            continue
        col = c.colors[e]
        attrs = f'label="{col}"'
        if col < len(DOT_PALETTE):
            attrs += f', color="{DOT_PALETTE[col]}"'
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: Graph, c: EdgeColoring) -> str:
    rows = ["edge,u,v,color"]
    rows += [f"{e},{u},{v},{c.colors[e]}" for e, (u, v) in enumerate(g.edges)]
    return "\n".join(rows) + "\n"
