"""Command-line interface: ``starlit <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import sys
from typing import Sequence

from . import construct as C
from .graph import (Factor, Graph, GraphError, cycle_graph, grid_graph, hypercube, path_cycle_graph,
                    path_graph, product_of, toroidal_graph)
from .io import (coloring_from_dict, coloring_to_dict, dumps, family_to_dict, graph_from_dict,
                 graph_to_dict, to_csv, to_dot)
from .solve import (EXACT, EXHAUSTED, SearchLimits, find_compatible_family,
                    star_chromatic_index_exact, star_colorable_with_k)
from .tables import table_rows
from .verify import CompatibleFamily, EdgeColoring, verify_compatible_family, verify_star

log = logging.getLogger("starlit")

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("path", "cycle", "grid", "hypercube", "torus", "path-cycle", "cycle-cycle", "product")


class UsageError(Exception):
    pass


# -- graph specs --------------------------------------------------------------

def _ints(params: Sequence[str], what: str) -> list[int]:
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{what}: expected integers, got {' '.join(params)}") from None


def _factor_token(tok: str) -> Factor:
    kind = {"P": "path", "C": "cycle"}.get(tok[:1].upper())
    if kind is None or not tok[1:].isdigit():
        raise UsageError(f"factor token {tok!r} should look like P4 or C5")
    return Factor(kind, int(tok[1:]))


def _arity(family: str, vals: list[int], n: int | None = None, at_least: int = 1) -> None:
    if (n is not None and len(vals) != n) or len(vals) < at_least:
        want = f"{n}" if n is not None else f"at least {at_least}"
        raise UsageError(f"{family} takes {want} integer parameter(s), got {len(vals)}")


def build_graph(family: str, params: Sequence[str]) -> Graph:
    if family == "product":
        if not params:
            raise UsageError("product needs factor tokens such as P3 C5")
        return product_of([_factor_token(t) for t in params])
    vals = _ints(params, family)
    if family == "path":
        _arity(family, vals, 1)
        return path_graph(vals[0])
    if family == "cycle":
        _arity(family, vals, 1)
        return cycle_graph(vals[0])
    if family == "grid":
        _arity(family, vals, at_least=1)
        return grid_graph(vals)
    if family == "hypercube":
        _arity(family, vals, 1)
        return hypercube(vals[0])
    if family in ("torus", "cycle-cycle"):
        _arity(family, vals, 2 if family == "cycle-cycle" else None, at_least=1)
        return toroidal_graph(vals)
    if family == "path-cycle":
        _arity(family, vals, 2)
        return path_cycle_graph(*vals)
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _best_factor_coloring(f: Factor) -> EdgeColoring:
    if f.kind == "path":
        if f.length < 2:
            return EdgeColoring.of(path_graph(f.length), [], 0)
        return C.path_star_coloring(f.length)
    return C.cycle_star_coloring(f.length)


def color_graph(g: Graph) -> EdgeColoring:
    """Pick the construction matching the factor structure of ``g``."""
    if g.label is None:
        raise UsageError("coloring needs a product-labeled graph (JSON with 'factors')")
    fs = g.label.factors
    kinds = {f.kind for f in fs}
    sizes = [f.length for f in fs]
    if len(fs) == 1:
        return _best_factor_coloring(fs[0])
    if kinds == {"path"} and all(s >= 2 for s in sizes):
        if len(fs) >= 3 and all(s == 2 for s in sizes):
            return C.hypercube_star_coloring(len(fs))
        return C.grid_d_star_coloring(sizes)
    if kinds == {"cycle"}:
        return C.toroidal_star_coloring(sizes)
    if len(fs) == 2 and [f.kind for f in fs] == ["path", "cycle"] and sizes[0] >= 2:
        return C.path_cycle_star_coloring(*sizes)
    if len(fs) == 2 and [f.kind for f in fs] == ["cycle", "path"] and sizes[1] >= 2:
        src = path_cycle_graph(sizes[1], sizes[0])
        return C.transfer(src, C.path_cycle_star_coloring(sizes[1], sizes[0]), g, perm=[1, 0])
    # generic: fold the factors left to right with the product rule
    cur_g = product_of([fs[0]])
    cur = _best_factor_coloring(fs[0])
    for f in fs[1:]:
        h = product_of([f])
        cur = C.product_star_coloring(cur_g, cur, h, _best_factor_coloring(f))
        cur_g = product_of(list(cur_g.label.factors) + [f])
    return cur


# -- output helpers -----------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _limits(args: argparse.Namespace) -> SearchLimits:
    return SearchLimits(max_colors=args.max_colors, node_budget=args.budget_nodes,
                        time_budget=args.budget_seconds, thread_hint=args.threads)


def _graph_from_args(args: argparse.Namespace) -> Graph:
    if args.graph:
        return graph_from_dict(_read_json(args.graph))
    if not args.family:
        raise UsageError("give a family and parameters, or --graph FILE")
    return build_graph(args.family, args.params)


def _render(g: Graph, c: EdgeColoring, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g, c)
    if fmt == "csv":
        return to_csv(g, c)
    return dumps(coloring_to_dict(c))


# -- subcommands --------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    g = build_graph(args.family, args.params)
    _emit(to_dot(g) if args.format == "dot" else dumps(graph_to_dict(g)), args.out)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = _graph_from_args(args)
    c = color_graph(g)
    log.info("%r colored with %d colors", g, c.palette_size)
    _emit(_render(g, c, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = graph_from_dict(_read_json(args.graph_file))
    data = _read_json(args.coloring_file)
    if "colorings" in data:
        fam = CompatibleFamily(tuple(EdgeColoring.of(g, c, int(data["k"])) for c in data["colorings"]),
                               int(data["k"]))
        rep = verify_compatible_family(g, fam)
    else:
        rep = verify_star(g, coloring_from_dict(g, data))
    if rep.ok:
        _emit(dumps({"ok": True}), args.out)
        return EXIT_OK
    print(json.dumps({"ok": False, "failure_kind": rep.failure_kind, "witness": rep.witness},
                     default=list), file=sys.stderr)
    return EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    g = _graph_from_args(args)
    limits = _limits(args)
    if args.k is not None:
        res = star_colorable_with_k(g, args.k, limits)
    else:
        res = star_chromatic_index_exact(g, limits)
    log.info("%r: %s after %d nodes in %.2fs", g, res.status, res.nodes_explored, res.elapsed)
    if args.format == "json":
        body = {"status": res.status, "value": res.value, "nodes": res.nodes_explored,
                "trail": [list(x) for x in res.trail]}
        if res.witness is not None:
            body["coloring"] = coloring_to_dict(res.witness)
        _emit(dumps(body), args.out)
    else:
        _emit(f"{res.value if res.status == EXACT else res.status}\n", args.out)
    return EXIT_BUDGET if res.status == EXHAUSTED else EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if args.kind not in ("path", "cycle"):
        raise UsageError("family kind must be path or cycle")
    g = path_graph(args.n) if args.kind == "path" else cycle_graph(args.n)
    if args.k is not None:
        if args.t is None:
            raise UsageError("--k needs --t")
        res = find_compatible_family(g, args.k, args.t, _limits(args))
        body = {"status": res.status, "k": args.k, "t": args.t, "nodes": res.nodes_explored}
        if res.witness is not None:
            body["colorings"] = [list(c.colors) for c in res.witness.colorings]
            body["verified"] = verify_compatible_family(g, res.witness).ok
        _emit(dumps(body), args.out)
        return EXIT_BUDGET if res.status == EXHAUSTED else EXIT_OK
    r = args.r if args.r is not None else args.t
    if r is None:
        raise UsageError("give --r (construction) or --k/--t (search)")
    fam = C.path_family(args.n, r) if args.kind == "path" else C.cycle_family(args.n, r)
    body = family_to_dict(fam)
    body["verified"] = verify_compatible_family(g, fam).ok
    _emit(dumps(body), args.out)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = graph_from_dict(_read_json(args.graph_file))
    c = coloring_from_dict(g, _read_json(args.coloring_file)) if args.coloring_file else None
    if c is None:
        text = to_dot(g) if args.format == "dot" else dumps(graph_to_dict(g))
    else:
        text = _render(g, c, args.format)
    _emit(text, args.out)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["instance", "paper_value_or_bound", "constructed_palette", "solver_value",
                "agreement"])
    for row in table_rows(_limits(args), solve=not args.no_solver):
        w.writerow(row.as_csv())
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, fmt_default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "dot", "csv"), default=fmt_default)
    p.add_argument("--out", help="write output here instead of stdout")


def _add_limits(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-colors", type=int, default=64)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--threads", type=int)
    p.add_argument("--seed", type=int, help="reserved; every algorithm is deterministic")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="starlit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="emit a graph as JSON or DOT")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="+")
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="build a star edge coloring by construction")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--graph", help="graph JSON (with factors) instead of a family spec")
    _add_common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring (or family) against a graph")
    p.add_argument("graph_file")
    p.add_argument("coloring_file")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact star chromatic index by search")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--graph")
    p.add_argument("--k", type=int, help="decide a single k instead")
    _add_common(p, fmt_default="csv")
    _add_limits(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("family", help="construct or search for a compatible family")
    p.add_argument("kind", choices=("path", "cycle"))
    p.add_argument("n", type=int)
    p.add_argument("--r", type=int, help="family size for the construction")
    p.add_argument("--k", type=int, help="palette size for the search")
    p.add_argument("--t", type=int, help="family size for the search")
    _add_common(p)
    _add_limits(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tables", help="exact-value tables as CSV")
    p.add_argument("--no-solver", action="store_true", help="skip the exhaustive searches")
    _add_common(p, fmt_default="csv")
    _add_limits(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("export", help="convert graph/coloring JSON to DOT or CSV")
    p.add_argument("graph_file")
    p.add_argument("coloring_file", nargs="?")
    _add_common(p, fmt_default="dot")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get("STARLIT_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, C.PreconditionError, ValueError) as exc:
        print(f"starlit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
