"""Star edge colorings of Cartesian products of paths and cycles."""

from .graph import (Factor, Graph, GraphError, ProductLabel, cartesian_product, cycle_graph,
                    grid_graph, hypercube, path_cycle_graph, path_graph, product_of,
                    toroidal_graph)
from .solve import (SearchLimits, SolveResult, bipartite_perfect_matching, find_compatible_family,
                    star_chromatic_index_exact, star_colorable_with_k)
from .verify import (CompatibleFamily, EdgeColoring, VerificationReport, incident_colors,
                     replay_witness, verify_compatible_family, verify_proper, verify_star)

__version__ = "0.1.0"

__all__ = [
    "Factor", "Graph", "GraphError", "ProductLabel", "cartesian_product", "cycle_graph",
    "grid_graph", "hypercube", "path_cycle_graph", "path_graph", "product_of", "toroidal_graph",
    "SearchLimits", "SolveResult", "bipartite_perfect_matching", "find_compatible_family",
    "star_chromatic_index_exact", "star_colorable_with_k",
    "CompatibleFamily", "EdgeColoring", "VerificationReport", "incident_colors",
    "replay_witness", "verify_compatible_family", "verify_proper", "verify_star",
]
