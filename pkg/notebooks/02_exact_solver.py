# %% [markdown]
# # Exact star chromatic index
#
# The solver tries k = lower bound, k+1, ... and records each answer in a trail.

# %%
from starlit import SearchLimits, grid_graph, hypercube, path_cycle_graph, star_chromatic_index_exact
from starlit.solve import star_colorable_with_k

for name, g in [("P3xP3", grid_graph([3, 3])), ("Q3", hypercube(3)), ("P2xC5", path_cycle_graph(2, 5))]:
    res = star_chromatic_index_exact(g)
    print(f"{name}: {res.value} trail={res.trail} nodes={res.nodes_explored}")

# %% [markdown]
# Lower-bound proofs are exhaustive searches that come back infeasible.

# %%
res = star_colorable_with_k(grid_graph([4, 4]), 5, SearchLimits(time_budget=120))
print("P4xP4 with 5 colors:", res.status, res.nodes_explored, "nodes")

# %% [markdown]
# Budgets stop a search early with an explicit status.

# %%
print(star_colorable_with_k(hypercube(4), 5, SearchLimits(node_budget=10)).status)

# %% [markdown]
# Two rows around an 8-cycle need only four colors: the graph covers the
# two rows around a 4-cycle, and lifting a star coloring along a covering keeps
# it star.

# %%
print("P2xC8:", star_chromatic_index_exact(path_cycle_graph(2, 8)).value)
