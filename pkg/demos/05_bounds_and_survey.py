# Bounds, the depth-4 test and an exhaustive survey
#
# Depth sits between a component count bound and n - connectivity + 2, and
# equals 4 exactly when two non-adjacent vertices are joined to everything
# else.  A survey runs every check on every labeled graph.

# %%
from binedge import bounds_report, complete_bipartite, depth
from binedge.harness import field_comparison, survey_n
from binedge import all_labeled_graphs

g = complete_bipartite(2, 5)
print("K2,5 depth", depth(g))
print(bounds_report(g).render())

# %%
s = survey_n(4)
print(s.render())

# %%
# Depth over QQ, GF(2) and GF(3); differences would be flagged, not hidden.
print(field_comparison(all_labeled_graphs(4)).render())
