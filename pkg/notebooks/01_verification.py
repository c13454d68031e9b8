# %% [markdown]
# # Checking star edge colorings
#
# A proper edge coloring is a star coloring when no path or cycle on four
# edges uses only two colors. `verify_star` either accepts or returns the
# offending walk.

# %%
from starlit import EdgeColoring, cycle_graph, path_graph, verify_star
from starlit.verify import replay_witness

p5 = path_graph(5)
bad = EdgeColoring.of(p5, [0, 1, 0, 1])
report = verify_star(p5, bad)
print(report.describe())
print("witness replays:", replay_witness(p5, bad, report))

# %%
good = EdgeColoring.of(p5, [0, 1, 2, 0])
print("0120 on P5:", bool(verify_star(p5, good)))

# %% [markdown]
# Closed four-cycles are caught too.

# %%
c4 = cycle_graph(4)
print(verify_star(c4, EdgeColoring.of(c4, [0, 1, 0, 1])).failure_kind)
