# Depth from the poset
#
# H^i_m(S/J_G) is a sum of copies of H^{d_q}_m(S/q), one batch per poset
# element q, with multiplicity the reduced homology of the interval (q, 1)
# in degree i - d_q - 1.  Depth is the first i that shows up.

# %%
from binedge import complete_graph, cycle_graph, lc_table, path_graph

for name, g in [("path P5", path_graph(5)), ("cycle C4", cycle_graph(4)),
                ("cycle C6", cycle_graph(6)), ("K4", complete_graph(4))]:
    print(name)
    print(lc_table(g).render())
    print()

# %%
# Per-element detail for C4: minimal primes have an empty interval (the
# b~_{-1} = 1 convention), the maximal ideal has a contractible one.
from binedge import multiplicities
from binedge.ideals import render

for q, b in multiplicities(cycle_graph(4)).items():
    print(f"d={q.dim}  {render(q):40s} {b.nonzero()}")
