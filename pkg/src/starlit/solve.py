"""Exact search for star edge colorings and star compatible families.

The search assigns one variable per (member, edge) in a fixed order and keeps,
for every member and vertex, the neighbor reached by each color. In a proper
coloring the edges of any two colors form paths and cycles; the coloring is a
star coloring exactly when each such component has at most three edges, so a
new assignment only needs to walk at most three steps in each direction.

Symmetry is broken by color introduction order: a variable may use a color at
most one larger than every color used before it. Infeasibility is reported only
when the search finished without hitting a budget.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph
from .verify import CompatibleFamily, EdgeColoring, verify_compatible_family, verify_star

log = logging.getLogger(__name__)

EXACT = "exact"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchLimits:
    max_colors: int = 64
    node_budget: int | None = None
    time_budget: float | None = None  # seconds
    thread_hint: int | None = None

    def __post_init__(self) -> None:
        for name in ("node_budget", "time_budget", "thread_hint"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive, got {val}")
        if self.max_colors < 1:
            raise ValueError("max_colors must be >= 1")


@dataclass
class SolveResult:
    status: str
    value: int | None = None
    witness: EdgeColoring | CompatibleFamily | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    trail: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (EXACT, FEASIBLE)


class _Abort(Exception):
    pass


def edge_order(g: Graph) -> list[int]:
    """Static order: grow from edge 0, always taking the unordered edge with the
    most already-ordered edges sharing an endpoint (ties: lowest index)."""
    m = g.edge_count
    if m == 0:
        return []
    nbr_edges: list[set[int]] = [set() for _ in range(m)]
    for nbrs in g.adjacency:
        es = [e for _, e in nbrs]
        for e in es:
            nbr_edges[e].update(x for x in es if x != e)
    score = [0] * m
    placed = [False] * m
    order = []
    for _ in range(m):
        best = -1
        for e in range(m):
            if not placed[e] and (best < 0 or score[e] > score[best]):
                best = e
        placed[best] = True
        order.append(best)
        for x in nbr_edges[best]:
            score[x] += 1
    return order


class _Search:
    """Backtracking over ``t`` simultaneous colorings of ``g`` with ``k`` colors."""

    def __init__(self, g: Graph, k: int, t: int, limits: SearchLimits):
        self.g, self.k, self.t = g, k, t
        self.order = edge_order(g)
        self.vars = [(e, mem) for e in self.order for mem in range(t)]
        self.ends = g.edges
        self.adj = g.adjacency
        self.node_budget = limits.node_budget
        self.deadline = None if limits.time_budget is None else time.monotonic() + limits.time_budget
        self.nodes = 0
        n = g.vertex_count
        self.at = [[[-1] * k for _ in range(n)] for _ in range(t)]
        self.col = [[-1] * g.edge_count for _ in range(t)]
        self.vmask = [0] * n

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _Abort
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _Abort

    def _star_ok(self, mem: int, u: int, v: int, c: int) -> bool:
        at = self.at[mem]
        col = self.col[mem]
        for base in (u, v):
            for _, e in self.adj[base]:
                d = col[e]
                if d < 0:
                    continue
                # alternating d/c walk away from u, then from v
                steps = 0
                cur, x = u, d
                while steps < 3:
                    nxt = at[cur][x]
                    if nxt < 0:
                        break
                    steps += 1
                    cur = nxt
                    x = c if x == d else d
                if steps >= 3:
                    return False
                cur, x = v, d
                while steps < 3:
                    nxt = at[cur][x]
                    if nxt < 0:
                        break
                    steps += 1
                    cur = nxt
                    x = c if x == d else d
                if steps >= 3:
                    return False
        return True

    def _assign(self, mem: int, e: int, u: int, v: int, c: int) -> None:
        self.at[mem][u][c] = v
        self.at[mem][v][c] = u
        self.col[mem][e] = c
        bit = 1 << c
        self.vmask[u] |= bit
        self.vmask[v] |= bit

    def _unassign(self, mem: int, e: int, u: int, v: int, c: int) -> None:
        self.at[mem][u][c] = -1
        self.at[mem][v][c] = -1
        self.col[mem][e] = -1
        bit = ~(1 << c)
        self.vmask[u] &= bit
        self.vmask[v] &= bit

    def candidates(self, i: int, maxc: int) -> Iterable[int]:
        e, mem = self.vars[i]
        u, v = self.ends[e]
        busy = self.vmask[u] | self.vmask[v]
        for c in range(min(self.k, maxc + 2)):
            if not busy >> c & 1 and self._star_ok(mem, u, v, c):
                yield c

    def run(self, prefix: Sequence[int] = ()) -> bool:
        """Search with the first ``len(prefix)`` variables fixed. Returns True when found."""
        maxc = -1
        for i, c in enumerate(prefix):
            e, mem = self.vars[i]
            u, v = self.ends[e]
            if c not in self.candidates(i, maxc):
                return False
            self._assign(mem, e, u, v, c)
            maxc = max(maxc, c)
        return self._dfs(len(prefix), maxc)

    def _dfs(self, i: int, maxc: int) -> bool:
        if i == len(self.vars):
            return True
        self._tick()
        e, mem = self.vars[i]
        u, v = self.ends[e]
        for c in list(self.candidates(i, maxc)):
            self._assign(mem, e, u, v, c)
            if self._dfs(i + 1, c if c > maxc else maxc):
                return True
            self._unassign(mem, e, u, v, c)
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All consistent assignments of the first ``depth`` variables, in search order."""
        out: list[tuple[int, ...]] = []

        def rec(i: int, maxc: int, pre: tuple[int, ...]) -> None:
            if i == depth:
                out.append(pre)
                return
            e, mem = self.vars[i]
            u, v = self.ends[e]
            for c in list(self.candidates(i, maxc)):
                self._assign(mem, e, u, v, c)
                rec(i + 1, max(maxc, c), pre + (c,))
                self._unassign(mem, e, u, v, c)

        rec(0, -1, ())
        return out


def _run_subtree(args: tuple) -> tuple[bool | None, int, list[list[int]] | None]:
    g, k, t, limits, prefix = args
    s = _Search(g, k, t, limits)
    try:
        found = s.run(prefix)
    except _Abort:
        return None, s.nodes, None
    return found, s.nodes, (s.col if found else None)


def _search(g: Graph, k: int, t: int, limits: SearchLimits) -> tuple[str, list[list[int]] | None, int]:
    threads = limits.thread_hint or 1
    if threads <= 1 or len(g.edges) < 6:
        s = _Search(g, k, t, limits)
        try:
            found = s.run()
        except _Abort:
            return EXHAUSTED, None, s.nodes
        return (FEASIBLE if found else INFEASIBLE), (s.col if found else None), s.nodes

    # split on the leading variables; take the first feasible subtree in search order
    splitter = _Search(g, k, t, limits)
    depth = 1
    pres = splitter.prefixes(depth)
    while len(pres) < 4 * threads and depth < min(6, len(splitter.vars)):
        depth += 1
        pres = splitter.prefixes(depth)
    nodes = 0
    exhausted = False
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for found, n, cols in pool.map(_run_subtree, [(g, k, t, limits, p) for p in pres]):
            nodes += n
            if found is None:
                exhausted = True
            elif found and not exhausted:
                return FEASIBLE, cols, nodes
    return (EXHAUSTED if exhausted else INFEASIBLE), None, nodes


def star_colorable_with_k(g: Graph, k: int, limits: SearchLimits | None = None) -> SolveResult:
    """Decide whether ``g`` has a star edge coloring with ``k`` colors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    limits = limits or SearchLimits()
    t0 = time.monotonic()
    status, cols, nodes = _search(g, k, 1, limits)
    res = SolveResult(status, nodes_explored=nodes, elapsed=time.monotonic() - t0)
    if cols is not None:
        wit = EdgeColoring.of(g, cols[0], k)
        rep = verify_star(g, wit)
        if not rep:
            raise AssertionError(f"search produced an invalid witness: {rep.describe()}")
        res.witness = wit
    log.debug("k=%d on %r: %s after %d nodes", k, g, status, nodes)
    return res


def star_chromatic_index_exact(g: Graph, limits: SearchLimits | None = None) -> SolveResult:
    """Smallest ``k`` with a star edge coloring, searching upward from max(Δ, 1)."""
    limits = limits or SearchLimits()
    t0 = time.monotonic()
    if g.edge_count == 0:
        return SolveResult(EXACT, 0, EdgeColoring.of(g, [], 0))
    nodes = 0
    trail: list[tuple[int, str]] = []
    proven_below = True
    for k in range(max(g.max_degree, 1), limits.max_colors + 1):
        res = star_colorable_with_k(g, k, limits)
        nodes += res.nodes_explored
        trail.append((k, res.status))
        if res.status == FEASIBLE:
            # the first k >= Δ is a valid lower bound, so no refutation is needed below it
            status = EXACT if proven_below else FEASIBLE
            return SolveResult(status, k if status == EXACT else None, res.witness, nodes,
                               time.monotonic() - t0, trail)
        if res.status == EXHAUSTED:
            proven_below = False
    return SolveResult(EXHAUSTED if not proven_below else INFEASIBLE, None, None, nodes,
                       time.monotonic() - t0, trail)


def find_compatible_family(g: Graph, k: int, t: int, limits: SearchLimits | None = None) -> SolveResult:
    """Search for ``t`` pairwise star compatible colorings of ``g`` over ``k`` colors."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be >= 1")
    limits = limits or SearchLimits()
    t0 = time.monotonic()
    status, cols, nodes = _search(g, k, t, limits)
    res = SolveResult(status, nodes_explored=nodes, elapsed=time.monotonic() - t0)
    if cols is not None:
        fam = CompatibleFamily(tuple(EdgeColoring.of(g, c, k) for c in cols), k)
        rep = verify_compatible_family(g, fam)
        if not rep:
            raise AssertionError(f"search produced an invalid family: {rep.describe()}")
        res.witness = fam
    return res


@dataclass(frozen=True)
class MatchingResult:
    matching: tuple | None  # matching[i] is the element chosen for left vertex i
    hall_violator: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.matching is not None


def bipartite_perfect_matching(left_sets: Sequence[Iterable], right_elements: Iterable) -> MatchingResult:
    """Kuhn's augmenting paths; left vertices in order, candidates in sorted order.

    On failure the witness is a set of left indices whose combined candidate set
    is smaller than the set itself.
    """
    right = set(right_elements)
    cands = [sorted(x for x in s if x in right) for s in left_sets]
    owner: dict = {}

    def augment(i: int, seen: set) -> bool:
        for y in cands[i]:
            if y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = i
                return True
        return False

    for i in range(len(cands)):
        if not augment(i, set()):
            # left vertices reachable from i by alternating paths violate Hall's condition
            reach, frontier = {i}, [i]
            while frontier:
                j = frontier.pop()
                for y in cands[j]:
                    o = owner.get(y)
                    if o is not None and o not in reach:
                        reach.add(o)
                        frontier.append(o)
            return MatchingResult(None, tuple(sorted(reach)))
    match = [None] * len(cands)
    for y, i in owner.items():
        match[i] = y
    return MatchingResult(tuple(match))
