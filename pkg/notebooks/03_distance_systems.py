# %% [markdown]
# # Steinerberger curvature beyond trees
#
# Node curvature solves `D k = n 1` with the hop-distance matrix `D`.  The
# minimum-norm least-squares answer is always returned together with its
# residual; a nonzero residual means the system has no exact solution.

# %%
import numpy as np

from curvkit import build_graph, steinerberger_solve
from curvkit.generators import complete_graph, cycle_graph

for name, g in [("K5", complete_graph(5)), ("C6", cycle_graph(6)), ("C7", cycle_graph(7))]:
    res = steinerberger_solve(g, "exact")
    print(name, [str(v) for v in res.values], "residual", res.residual)

# %% [markdown]
# Seven nodes already suffice for an inconsistent system: a triangle whose
# three corners are each joined to all of four pairwise non-adjacent nodes.

# %%
edges = [(a, h) for a in (0, 1, 2, 6) for h in (3, 4, 5)] + [(3, 4), (3, 5), (4, 5)]
g = build_graph(edges)
res = steinerberger_solve(g, "exact")
print("solvable:", res.solvable, "residual:", res.residual)

D = np.asarray(g.hops, dtype=float)
print("rank D =", np.linalg.matrix_rank(D), " rank [D | n1] =", np.linalg.matrix_rank(np.column_stack([D, np.full(7, 7.0)])))

# %% [markdown]
# Float mode uses an SVD least-squares solve and declares the system solvable
# when the largest residual is at most `1e-9 * n`.

# %%
print(steinerberger_solve(g, "float").solvable, steinerberger_solve(cycle_graph(40), "float").solvable)
