# %% [markdown]
# # Products: grids, tori and hypercubes
#
# Each construction returns a verified coloring with its palette size.

# %%
from starlit import grid_graph, hypercube, toroidal_graph, verify_star
from starlit.construct import (cycle_cycle_star_coloring, grid2_star_coloring, grid_d_star_coloring,
                               hypercube_star_coloring, path_cycle_star_coloring, toroidal_bound,
                               toroidal_star_coloring)

print("P7xP6:", grid2_star_coloring(7, 6).palette_size)
print("P5xC9:", path_cycle_star_coloring(5, 9).palette_size)
print("C6xC8:", cycle_cycle_star_coloring(6, 8).palette_size)

# %%
for d in range(1, 7):
    c = hypercube_star_coloring(d)
    print(f"Q{d}: {c.palette_size}", bool(verify_star(hypercube(d), c)))

# %%
dims = [3, 4, 5]
c = grid_d_star_coloring(dims)
print("grid", dims, c.palette_size, "<=", 4 * len(dims) - 2, bool(verify_star(grid_graph(dims), c)))
for dims in ([4, 6, 8], [7, 9, 11], [5, 7, 9]):
    c = toroidal_star_coloring(dims)
    print("torus", dims, c.palette_size, "bound", toroidal_bound(dims), c.meta.get("note", ""))
    assert verify_star(toroidal_graph(dims), c)
