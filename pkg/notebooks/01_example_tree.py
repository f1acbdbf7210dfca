# %% [markdown]
# # Curvature of a small tree
#
# A ten-node combinatorial tree is small enough to check every number by hand.
# We compute Ollivier-Ricci curvature at idleness 1/2, the Lin-Lu-Yau limit and
# the Steinerberger node curvature, all as exact rationals.

# %%
from fractions import Fraction

from curvkit import (
    example_tree,
    lly_tree_closed,
    orc_definitional,
    orc_tree_closed,
    steinerberger_solve,
    steinerberger_tree_closed,
)

g = example_tree()
print(g, "degrees:", g.degrees)

# %% [markdown]
# On trees every edge curvature has a closed form.  The transport definition
# gives the same rational, which is the point of keeping both.

# %%
half = Fraction(1, 2)
for u, v, _ in g.edges:
    closed = orc_tree_closed(g, u, v, half).orc
    transport = orc_definitional(g, u, v, half).orc
    lly = lly_tree_closed(g, u, v).lly
    print(f"({u},{v})  orc={closed!s:>5}  via transport={transport!s:>5}  lly={lly}")

# %% [markdown]
# Leaves carry positive Steinerberger curvature, degree-3 nodes negative, and
# degree-2 nodes zero.  The pseudoinverse solve of the distance system agrees.

# %%
ks = steinerberger_tree_closed(g)
print([str(v) for v in ks.values])
print("solve agrees:", steinerberger_solve(g, "exact").values == ks.values)

# %% [markdown]
# Pairs need not be adjacent: the curvature between nodes 0 and 4 follows the
# geodesic 0-7-1-4.

# %%
print(orc_tree_closed(g, 0, 4, half).orc, orc_definitional(g, 0, 4, half).orc)
