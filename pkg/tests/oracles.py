"""Independent reference implementations used only by the tests.

Nothing here imports the verifier or the solver; the walk enumeration works
straight from the edge list.
"""

from __future__ import annotations

import itertools

import numpy as np


def adjacency(n: int, edges) -> list[list[tuple[int, int]]]:
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    return adj


def four_walks(n: int, edges) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All 4-edge paths and 4-cycles as ``(vertices, edges)``, each in both directions."""
    adj = adjacency(n, edges)
    out = []

    def grow(vs, es):
        if len(es) == 4:
            closed = vs[-1] == vs[0] and len(set(vs[:4])) == 4
            if len(set(vs)) == 5 or closed:
                out.append((tuple(vs), tuple(es)))
            return
        for w, e in adj[vs[-1]]:
            if e not in es:
                grow(vs + [w], es + [e])

    for v in range(n):
        grow([v], [])
    return out


def adjacent_pairs(n: int, edges) -> list[tuple[int, int]]:
    adj = adjacency(n, edges)
    return [(a, b) for v in range(n) for (_, a), (_, b) in itertools.combinations(adj[v], 2)]


def naive_is_star(n: int, edges, colors) -> bool:
    if any(colors[a] == colors[b] for a, b in adjacent_pairs(n, edges)):
        return False
    return all(len({colors[e] for e in es}) > 2 for _, es in four_walks(n, edges))


def naive_star_index(n: int, edges, chunk: int = 1 << 16) -> int:
    """Smallest k by testing every one of the k^|E| colorings (vectorized)."""
    m = len(edges)
    if m == 0:
        return 0
    pairs = np.array(adjacent_pairs(n, edges) or [(0, 0)], dtype=np.int64)
    has_pairs = bool(adjacent_pairs(n, edges))
    walks = sorted({min(es, es[::-1]) for _, es in four_walks(n, edges)})
    quads = np.array(walks or [(0, 0, 0, 0)], dtype=np.int64)
    has_quads = bool(four_walks(n, edges))
    for k in range(1, m + 1):
        total = k ** m
        powers = k ** np.arange(m, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            cols = ((idx[:, None] // powers[None, :]) % k).astype(np.uint8)
            ok = np.ones(len(idx), dtype=bool)
            if has_pairs:
                ok &= (cols[:, pairs[:, 0]] != cols[:, pairs[:, 1]]).all(axis=1)
            if has_quads:
                c = cols[:, quads]
                bi = (c[:, :, 0] == c[:, :, 2]) & (c[:, :, 1] == c[:, :, 3])
                ok &= ~bi.any(axis=1)
            if ok.any():
                return k
    return m
