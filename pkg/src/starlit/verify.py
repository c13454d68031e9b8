"""Edge colorings, compatible families and their certification.

Every failing check returns a :class:`VerificationReport` whose witness can be
replayed against the graph with :func:`replay_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .graph import Graph

IMPROPER = "improper-edge-pair"
PATH4 = "bicolored-4path"
CYCLE4 = "bicolored-4cycle"
OVERLAP = "compat-overlap"
OVERFLOW = "palette-overflow"


class FingerprintMismatch(ValueError):
    """A coloring was checked against a graph it was not built for."""


@dataclass(frozen=True)
class EdgeColoring:
    """Palette indices for the edges of one graph, in canonical edge order."""

    graph_fingerprint: str
    colors: tuple[int, ...]
    palette_size: int
    meta: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def of(cls, g: Graph, colors: Sequence[int], palette_size: int | None = None,
           **meta: Any) -> "EdgeColoring":
        colors = tuple(int(c) for c in colors)
        if len(colors) != g.edge_count:
            raise ValueError(f"{len(colors)} colors for {g.edge_count} edges")
        if palette_size is None:
            palette_size = max(colors, default=-1) + 1
        return cls(g.fingerprint, colors, palette_size, dict(meta))

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def bind_check(self, g: Graph) -> None:
        if self.graph_fingerprint != g.fingerprint or len(self.colors) != g.edge_count:
            raise FingerprintMismatch(
                f"coloring bound to {self.graph_fingerprint}, graph is {g.fingerprint}")

    def permuted(self, perm: Sequence[int]) -> "EdgeColoring":
        """Rename color ``c`` to ``perm[c]``."""
        return EdgeColoring(self.graph_fingerprint, tuple(perm[c] for c in self.colors),
                            max(self.palette_size, max(perm, default=-1) + 1), dict(self.meta))

    def shifted(self, offset: int) -> "EdgeColoring":
        return EdgeColoring(self.graph_fingerprint, tuple(c + offset for c in self.colors),
                            self.palette_size + offset, dict(self.meta))


@dataclass(frozen=True)
class CompatibleFamily:
    """``t`` pairwise star compatible colorings of one graph over ``k`` colors."""

    colorings: tuple[EdgeColoring, ...]
    palette_size: int
    meta: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def t(self) -> int:
        return len(self.colorings)

    @property
    def k(self) -> int:
        return self.palette_size

    def __getitem__(self, i: int) -> EdgeColoring:
        return self.colorings[i]

    def __len__(self) -> int:
        return len(self.colorings)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure_kind: str | None = None
    witness: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.failure_kind}: {self.witness}"


OK = VerificationReport(True)


def _fail(kind: str, **witness: Any) -> VerificationReport:
    return VerificationReport(False, kind, witness)


def _check_palette(g: Graph, c: EdgeColoring, k: int | None = None) -> VerificationReport:
    k = c.palette_size if k is None else k
    for e, col in enumerate(c.colors):
        if not 0 <= col < k:
            return _fail(OVERFLOW, edge=e, color=col, palette_size=k)
    return OK


def verify_proper(g: Graph, c: EdgeColoring) -> VerificationReport:
    c.bind_check(g)
    rep = _check_palette(g, c)
    if not rep:
        return rep
    colors = c.colors
    for v, nbrs in enumerate(g.adjacency):
        seen: dict[int, int] = {}
        for _, e in nbrs:
            col = colors[e]
            if col in seen:
                return _fail(IMPROPER, vertex=v, edges=(seen[col], e), colors=(col, col))
            seen[col] = e
    return OK


def verify_star(g: Graph, c: EdgeColoring) -> VerificationReport:
    """Proper, and no path or cycle with four edges uses only two colors.

    Each bi-colored 3-edge path ``w-x-y-z`` colored ``a b a`` is found from its
    middle edge ``xy``; it extends to a bad 4-path or 4-cycle exactly when an
    edge of color ``b`` meets ``w`` or ``z``.
    """
    rep = verify_proper(g, c)
    if not rep:
        return rep
    colors = c.colors
    adj = g.adjacency
    # at[v][color] -> (neighbor, edge); proper, so at most one per color
    at = [{colors[e]: (w, e) for w, e in nbrs} for nbrs in adj]
    for m, (x, y) in enumerate(g.edges):
        b = colors[m]
        for w, e1 in adj[x]:
            if e1 == m:
                continue
            a = colors[e1]
            hit = at[y].get(a)
            if hit is None:
                continue
            z, e3 = hit
            # w == z would put two a-edges at w, excluded by properness
            tail = at[z].get(b)
            if tail is not None:
                u, _ = tail
                if u == w:
                    return _fail(CYCLE4, vertices=(w, x, y, z, w), colors=(a, b))
                return _fail(PATH4, vertices=(w, x, y, z, u), colors=(a, b))
            head = at[w].get(b)
            if head is not None:
                u, _ = head
                return _fail(PATH4, vertices=(u, w, x, y, z), colors=(b, a))
    return OK


def incident_colors(g: Graph, c: EdgeColoring, v: int) -> set[int]:
    return {c.colors[e] for _, e in g.adjacency[v]}


def verify_compatible_family(g: Graph, fam: CompatibleFamily) -> VerificationReport:
    for i, col in enumerate(fam.colorings):
        col.bind_check(g)
        rep = _check_palette(g, col, fam.palette_size)
        if rep:
            rep = verify_star(g, col)
        if not rep:
            return VerificationReport(False, rep.failure_kind, {"member": i, **(rep.witness or {})})
    for v in range(g.vertex_count):
        owner: dict[int, int] = {}
        for i, col in enumerate(fam.colorings):
            for x in incident_colors(g, col, v):
                if x in owner:
                    return _fail(OVERLAP, members=(owner[x], i), vertex=v, color=x)
                owner[x] = i
    return OK


def replay_witness(g: Graph, colorings: Sequence[EdgeColoring] | EdgeColoring,
                   rep: VerificationReport) -> bool:
    """Re-derive the violation named by ``rep`` directly from the graph.

    Returns True when the witness describes a genuine violation.
    """
    if rep.ok:
        return False
    if isinstance(colorings, EdgeColoring):
        colorings = [colorings]
    w = dict(rep.witness or {})
    c = colorings[w.pop("member", 0)] if rep.failure_kind != OVERLAP else None
    kind = rep.failure_kind
    if kind == OVERFLOW:
        return not 0 <= c.colors[w["edge"]] < w["palette_size"]
    if kind == IMPROPER:
        e1, e2 = w["edges"]
        v = w["vertex"]
        return (e1 != e2 and v in g.edges[e1] and v in g.edges[e2]
                and c.colors[e1] == c.colors[e2])
    if kind in (PATH4, CYCLE4):
        vs = w["vertices"]
        try:
            es = [g.edge_index[(vs[i], vs[i + 1])] for i in range(4)]
        except KeyError:
            return False
        distinct = len(set(vs[:4])) == 4 and (vs[4] == vs[0] if kind == CYCLE4
                                              else len(set(vs)) == 5)
        return distinct and len({c.colors[e] for e in es}) <= 2
    if kind == OVERLAP:
        i, j = w["members"]
        v, x = w["vertex"], w["color"]
        return i != j and x in incident_colors(g, colorings[i], v) and x in incident_colors(
            g, colorings[j], v)
    return False
