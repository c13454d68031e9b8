"""Regenerate src/starlit/construct/_tables.py from the exact solver.

Run from the repository root: ``python scripts/make_tables.py``.
"""

from pathlib import Path

from starlit.graph import cycle_graph, grid_graph, hypercube, path_cycle_graph, toroidal_graph
from starlit.solve import find_compatible_family, star_colorable_with_k

TARGET = Path(__file__).resolve().parents[1] / "src" / "starlit" / "construct" / "_tables.py"

COLORINGS = [
    ("C5_STAR", "C_5, 4 colors", cycle_graph(5), 4),
    ("P3P3", "P_3□P_3, 5 colors", grid_graph([3, 3]), 5),
    ("P4P3", "P_4□P_3, 5 colors", grid_graph([4, 3]), 5),
    ("P2C4", "P_2□C_4, 4 colors", path_cycle_graph(2, 4), 4),
    ("P2C5", "P_2□C_5, 5 colors", path_cycle_graph(2, 5), 5),
    ("Q3", "Q_3, 4 colors", hypercube(3), 4),
    ("C3C3", "C_3□C_3, 6 colors", toroidal_graph([3, 3]), 6),
    ("C5C5", "C_5□C_5, 7 colors", toroidal_graph([5, 5]), 7),
]


def main() -> None:
    lines = [
        '"""Fixed colorings found by the exact solver (regenerate with scripts/make_tables.py).',
        "",
        "Each table lists colors in the canonical edge order of the named graph.",
        '"""',
        "",
    ]
    for name, doc, g, k in COLORINGS:
        res = star_colorable_with_k(g, k)
        assert res.status == "feasible", (name, res.status)
        lines.append(f"# {doc}")
        lines.append(f"{name} = {tuple(res.witness.colors)!r}")
        lines.append("")
    fam = find_compatible_family(cycle_graph(5), 8, 3)
    assert fam.status == "feasible"
    lines.append("# three pairwise star compatible colorings of C_5 over 8 colors")
    lines.append(f"C5_FAMILY_8_3 = {[list(c.colors) for c in fam.witness.colorings]!r}")
    lines.append("")
    block = find_compatible_family(toroidal_graph([5, 5]), 14, 3)
    assert block.status == "feasible"
    lines.append("# three pairwise star compatible colorings of C_5□C_5 over 14 colors")
    lines.append(f"C5C5_FAMILY_14_3 = {[list(c.colors) for c in block.witness.colorings]!r}")
    lines.append("")
    refuted = find_compatible_family(cycle_graph(5), 7, 3)
    assert refuted.status in ("feasible", "infeasible")
    lines.append("# outcome of the exhaustive search for three compatible colorings of C_5 over 7 colors")
    lines.append(f"C5_FAMILY_7_3_EXISTS = {refuted.status == 'feasible'}")
    lines.append("")
    TARGET.write_text("\n".join(lines))
    print(f"wrote {TARGET}")


if __name__ == "__main__":
    main()
