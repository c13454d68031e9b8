"""Exact-value tables: claimed values or bounds, constructed palettes and solver values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import construct as C
from .graph import Graph, cycle_graph, grid_graph, hypercube, path_cycle_graph, toroidal_graph
from .solve import EXACT, SearchLimits, star_chromatic_index_exact
from .verify import EdgeColoring, verify_star


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Callable[[], Graph]
    build: Callable[[], EdgeColoring]
    claim: int
    exact: bool  # claim is the value itself, not only an upper bound


@dataclass(frozen=True)
class TableRow:
    instance: str
    claim: str
    constructed: int
    solver: int | None
    agreement: bool

    def as_csv(self) -> list[str]:
        return [self.instance, self.claim, str(self.constructed),
                "" if self.solver is None else str(self.solver),
                "yes" if self.agreement else "no"]


def stated_path_cycle(m: int, n: int) -> tuple[int, bool]:
    """Reference value (or bound) for P_m□C_n, before the correction for m = 2, 4 | n."""
    if m == 2 and n == 4:
        return 4, True
    if m == 2 and n >= 5:
        return 5, True
    return C.path_cycle_value(m, n)


def instances() -> list[Instance]:
    out: list[Instance] = []
    for n in range(3, 10):
        out.append(Instance(f"C{n}", lambda n=n: cycle_graph(n),
                            lambda n=n: C.cycle_star_coloring(n), 4 if n == 5 else 3, True))
    for m in range(2, 11):
        for n in range(2, m + 1):
            if m * n <= 20:
                out.append(Instance(f"P{m}xP{n}", lambda m=m, n=n: grid_graph([m, n]),
                                    lambda m=m, n=n: C.grid2_star_coloring(m, n),
                                    C.grid2_value(m, n), True))
    for m, n in [(2, n) for n in range(3, 10)] + [(3, 3), (4, 3), (3, 4), (3, 6)]:
        val, exact = stated_path_cycle(m, n)
        out.append(Instance(f"P{m}xC{n}", lambda m=m, n=n: path_cycle_graph(m, n),
                            lambda m=m, n=n: C.path_cycle_star_coloring(m, n), val, exact))
    for d in range(1, 5):
        out.append(Instance(f"Q{d}", lambda d=d: hypercube(d),
                            lambda d=d: C.hypercube_star_coloring(d),
                            {1: 1, 2: 3, 3: 4, 4: 6}[d], True))
    for m, n in [(3, 3), (4, 4), (5, 5)]:
        out.append(Instance(f"C{m}xC{n}", lambda m=m, n=n: toroidal_graph([m, n]),
                            lambda m=m, n=n: C.cycle_cycle_star_coloring(m, n),
                            C.cycle_cycle_bound(m, n) if (m, n) != (4, 4) else 7, False))
    return out


def table_rows(limits: SearchLimits | None = None, solve: bool = True) -> Iterator[TableRow]:
    """One row per instance; agreement means the construction verifies, meets the
    claim, and (when the solver ran) matches or beats it as the claim requires."""
    for inst in instances():
        g, col = inst.graph(), inst.build()
        ok = verify_star(g, col).ok and (col.palette_size <= inst.claim or inst.exact)
        value = None
        if solve:
            res = star_chromatic_index_exact(g, limits)
            value = res.value if res.status == EXACT else None
            if inst.exact:
                ok = ok and value == inst.claim == col.palette_size
            else:
                ok = ok and value is not None and value <= inst.claim
        elif inst.exact:
            ok = ok and col.palette_size == inst.claim
        claim = f"{'=' if inst.exact else '<='}{inst.claim}"
        yield TableRow(inst.name, claim, col.palette_size, value, ok)
