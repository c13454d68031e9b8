from .common import (ConstructionError, PreconditionError, VertexColoring, from_rule, power_graph,
                     proper_vertex_coloring, rule_of, transfer, transposed)
from .families import (CycleFamilyTrace, a_value, cycle_family, cycle_family_palette,
                       cycle_star_coloring, odd_cycle_trace, path_family, path_star_coloring,
                       tuple_entry)
from .grids import (DISCREPANCY_C5, compose_with_cycle, compose_with_path, cycle_cycle_bound,
                    cycle_cycle_star_coloring, grid2_star_coloring, grid2_value,
                    grid_d_star_coloring, hypercube_bound, hypercube_star_coloring,
                    path_cycle_star_coloring, path_cycle_value, toroidal_bound,
                    toroidal_star_coloring)
from .products import (chain_family, compose_with_family, power_family, product_family,
                       product_star_coloring)

__all__ = [
    "ConstructionError", "PreconditionError", "VertexColoring", "from_rule", "power_graph",
    "proper_vertex_coloring", "rule_of", "transfer", "transposed",
    "CycleFamilyTrace", "a_value", "cycle_family", "cycle_family_palette", "cycle_star_coloring",
    "odd_cycle_trace", "path_family", "path_star_coloring", "tuple_entry",
    "DISCREPANCY_C5", "compose_with_cycle", "compose_with_path", "cycle_cycle_bound",
    "cycle_cycle_star_coloring", "grid2_star_coloring", "grid2_value", "grid_d_star_coloring",
    "hypercube_bound", "hypercube_star_coloring", "path_cycle_star_coloring", "path_cycle_value",
    "toroidal_bound", "toroidal_star_coloring",
    "chain_family", "compose_with_family", "power_family", "product_family",
    "product_star_coloring",
]
