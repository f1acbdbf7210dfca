# %% [markdown]
# # Machine-checked identities and bounds
#
# The verification suites draw seeded random trees and graphs and check each
# identity or inequality in exact arithmetic.  Reports are plain tab-separated
# lines, so the same stream drives the command line and this walkthrough.

# %%
from fractions import Fraction

from curvkit import comparison_check, degree_diameter_check, example_tree
from curvkit.generators import path_graph, star_graph
from curvkit.verify import VerifyConfig, run

g = example_tree()
for rep in comparison_check(g, 4, 5, Fraction(1, 2)):
    print(rep.line())

# %% [markdown]
# Paths and stars sit at opposite ends of the degree-diameter bound.

# %%
for n in (5, 10, 20):
    print(degree_diameter_check(path_graph(n)).line())
    print(degree_diameter_check(star_graph(n)).line())

# %% [markdown]
# A full suite run; the summary line counts passes, failures, strictness ties
# and checks whose hypotheses did not apply.

# %%
result = run(VerifyConfig(suite="all", n_range=(2, 30), count=10, seed=7, workers=4))
print(result.summary())
