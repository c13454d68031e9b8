# %% [markdown]
# # Compatible families on paths and cycles
#
# A (k, t) family is t star colorings of one graph, all drawn from k colors, such
# that at every vertex the incident color sets of different members are disjoint.

# %%
from starlit import cycle_graph, path_graph, verify_compatible_family
from starlit.construct import cycle_family, path_family
from starlit.solve import find_compatible_family

fam = path_family(6, 3)
print("path (k,t):", fam.k, fam.t, bool(verify_compatible_family(path_graph(6), fam)))
for n in (6, 9, 11, 15):
    f = cycle_family(n, 3)
    print(f"C{n} (k,t)=({f.k},{f.t})", bool(verify_compatible_family(cycle_graph(n), f)))

# %% [markdown]
# Odd cycles use color tuples and a bipartite matching; the parameters are kept.

# %%
tr = cycle_family(15, 3).meta["trace"]
print("b, p, u =", tr.b, tr.p, tr.u)
for row in tr.tuples:
    print(row)

# %% [markdown]
# The five-cycle is the awkward case. Exhaustive search rules out (7, 3)
# and finds (8, 3).

# %%
print("(7,3):", find_compatible_family(cycle_graph(5), 7, 3).status)
print("(8,3):", find_compatible_family(cycle_graph(5), 8, 3).status)
