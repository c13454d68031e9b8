# %% [markdown]
# # Command line and tables
#
# Everything above is available through the `starlit` command. This script
# drives it in-process.

# %%
import tempfile
from pathlib import Path

from starlit.cli import main

tmp = Path(tempfile.mkdtemp())
main(["gen", "torus", "4", "6", "--out", str(tmp / "g.json")])
main(["color", "--graph", str(tmp / "g.json"), "--out", str(tmp / "c.json")])
main(["verify", str(tmp / "g.json"), str(tmp / "c.json")])
main(["export", str(tmp / "g.json"), str(tmp / "c.json"), "--format", "csv", "--out", str(tmp / "c.csv")])
print((tmp / "c.csv").read_text().splitlines()[:4])

# %% [markdown]
# The comparison table. Construction-only mode skips the solver column.

# %%
main(["tables", "--no-solver"])
