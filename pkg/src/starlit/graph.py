"""Immutable simple graphs and the product families built from paths and cycles.

Vertices are ``0..n-1``. Edges keep a canonical order so that index formulas
(edge ``x`` of a cycle joins ``x`` and ``x+1 mod n``) map directly onto edge
indices. Products carry a :class:`ProductLabel` with one coordinate per factor.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]

MAX_VERTICES = 10_000_000


class GraphError(ValueError):
    """Raised for invalid graph parameters or malformed edge lists."""


@dataclass(frozen=True)
class Factor:
    kind: str  # "path" or "cycle"
    length: int

    def __post_init__(self) -> None:
        if self.kind not in ("path", "cycle"):
            raise GraphError(f"unknown factor kind {self.kind!r}")
        if self.length < (3 if self.kind == "cycle" else 1):
            raise GraphError(f"{self.kind} factor of length {self.length}")

    @property
    def name(self) -> str:
        return f"{'P' if self.kind == 'path' else 'C'}{self.length}"

    def start(self, a: int, b: int) -> int:
        """The coordinate ``x`` for which the factor edge ``{a, b}`` is ``x(x+1)``."""
        if self.kind == "cycle" and (a + 1) % self.length == b:
            return a
        if self.kind == "cycle" and (b + 1) % self.length == a:
            return b
        return min(a, b)


@dataclass(frozen=True)
class ProductLabel:
    """Coordinates of a product graph.

    ``vertex_coords[v]`` has one entry per factor; ``edge_axis[e]`` names the
    factor along which edge ``e`` runs.
    """

    factors: tuple[Factor, ...]
    vertex_coords: tuple[tuple[int, ...], ...]
    edge_axis: tuple[int, ...]

    @property
    def factor_sizes(self) -> tuple[int, ...]:
        return tuple(f.length for f in self.factors)


class Graph:
    """A finite simple undirected graph with a fixed edge order."""

    __slots__ = ("_n", "_edges", "_label", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], label: ProductLabel | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        canon: list[Edge] = []
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            canon.append((u, v))
        if label is not None:
            if len(label.vertex_coords) != n or len(label.edge_axis) != len(canon):
                raise GraphError("product label does not match graph size")
        self._n = n
        self._edges = tuple(canon)
        self._label = label

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def label(self) -> ProductLabel | None:
        return self._label

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge_index)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self._n)]
        for i, (u, v) in enumerate(self._edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for i, (u, v) in enumerate(self._edges):
            idx[(u, v)] = i
            idx[(v, u)] = i
        return idx

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha256(str(self._n).encode())
        for u, v in self._edges:
            h.update(f";{u},{v}".encode())
        return h.hexdigest()[:16]

    @cached_property
    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def coords(self, v: int) -> tuple[int, ...]:
        if self._label is None:
            raise GraphError("graph has no product label")
        return self._label.vertex_coords[v]

    def vertex_at(self, coords: Sequence[int]) -> int:
        """Row-major vertex index of a coordinate tuple."""
        if self._label is None:
            raise GraphError("graph has no product label")
        v = 0
        for c, f in zip(coords, self._label.factors):
            v = v * f.length + c
        return v

    def edge_key(self, e: int) -> tuple[int, tuple[int, ...]]:
        """``(axis, coords)`` of edge ``e``, ``coords`` being its start endpoint along ``axis``."""
        lab = self._label
        if lab is None:
            raise GraphError("graph has no product label")
        u, v = self._edges[e]
        axis = lab.edge_axis[e]
        cu, cv = lab.vertex_coords[u], lab.vertex_coords[v]
        s = lab.factors[axis].start(cu[axis], cv[axis])
        return axis, (cu if cu[axis] == s else cv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        name = ""
        if self._label is not None:
            name = "□".join(f.name for f in self._label.factors) + ", "
        return f"Graph({name}n={self._n}, m={len(self._edges)})"


def bipartition(g: Graph) -> list[int] | None:
    """2-coloring of ``g`` by BFS, or ``None`` when ``g`` has an odd cycle."""
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w, _ in g.adjacency[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _factor_graph(f: Factor) -> Graph:
    n = f.length
    if f.kind == "path":
        edges = [(x, x + 1) for x in range(n - 1)]
    else:
        edges = [(x, (x + 1) % n) for x in range(n)]
    label = ProductLabel((f,), tuple((x,) for x in range(n)), tuple(0 for _ in edges))
    return Graph(n, edges, label)


def path_graph(n: int) -> Graph:
    """P_n: vertices ``0..n-1``, edge ``x`` joins ``x`` and ``x+1``."""
    return _factor_graph(Factor("path", n))


def cycle_graph(n: int) -> Graph:
    """C_n: edge ``x`` joins ``x`` and ``x+1 mod n``."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return _factor_graph(Factor("cycle", n))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G□H with row-major vertices ``(a, x) -> a*|H| + x``.

    Edge order: G-axis edges grouped by H-vertex, then H-axis edges grouped
    by G-vertex. When both inputs carry product labels they are concatenated;
    otherwise the result is unlabeled.
    """
    ng, nh = g.vertex_count, h.vertex_count
    if ng * nh > MAX_VERTICES:
        raise GraphError(f"product too large: {ng} x {nh} vertices")
    edges: list[Edge] = []
    for x in range(nh):
        for a, b in g.edges:
            edges.append((a * nh + x, b * nh + x))
    for a in range(ng):
        for x, y in h.edges:
            edges.append((a * nh + x, a * nh + y))

    label = None
    if g.label is not None and h.label is not None:
        lg, lh = g.label, h.label
        coords = tuple(cg + ch for cg in lg.vertex_coords for ch in lh.vertex_coords)
        shift = len(lg.factors)
        axis = [lg.edge_axis[e] for _ in range(nh) for e in range(g.edge_count)]
        axis += [shift + lh.edge_axis[e] for _ in range(ng) for e in range(h.edge_count)]
        label = ProductLabel(lg.factors + lh.factors, coords, tuple(axis))
    return Graph(ng * nh, edges, label)


def product_of(factors: Sequence[Factor]) -> Graph:
    """Left-associated product of path/cycle factors."""
    if not factors:
        raise GraphError("empty factor list")
    g = _factor_graph(factors[0])
    for f in factors[1:]:
        g = cartesian_product(g, _factor_graph(f))
    return g


def grid_graph(dims: Sequence[int]) -> Graph:
    if not dims:
        raise GraphError("empty dims")
    if any(d < 2 for d in dims):
        raise GraphError(f"grid sides must be >= 2, got {list(dims)}")
    return product_of([Factor("path", d) for d in dims])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError(f"hypercube dimension must be >= 1, got {d}")
    return product_of([Factor("path", 2)] * d)


def toroidal_graph(dims: Sequence[int]) -> Graph:
    if not dims:
        raise GraphError("empty dims")
    if any(d < 3 for d in dims):
        raise GraphError(f"torus sides must be >= 3, got {list(dims)}")
    return product_of([Factor("cycle", d) for d in dims])


def path_cycle_graph(m: int, n: int) -> Graph:
    """P_m□C_n."""
    return product_of([Factor("path", m), Factor("cycle", n)])


def four_path_count(g: Graph) -> int:
    """Number of paths with four edges (five distinct vertices), unordered."""
    count = 0
    adj = g.adjacency
    for v0 in range(g.vertex_count):
        for v1, _ in adj[v0]:
            for v2, _ in adj[v1]:
                if v2 == v0:
                    continue
                for v3, _ in adj[v2]:
                    if v3 in (v0, v1):
                        continue
                    for v4, _ in adj[v3]:
                        if v4 not in (v0, v1, v2):
                            count += 1
    return count // 2


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in range(g.vertex_count)), reverse=True)
