# Cut sets and the minimal primes of a binomial edge ideal
#
# J_G is the intersection of the primes P_T(G), one for every vertex set T
# with the cut point property.  Everything here is combinatorial: a prime is
# just a killed set plus a partition of the surviving vertices.

# %%
from binedge import complete_graph, cut_sets, cycle_graph, minimal_primes_of_graph, path_graph
from binedge.ideals import render

g = path_graph(5)
print("cut sets of the path 1-2-3-4-5:", [sorted(t) for t in cut_sets(g)])

# %%
# Each cut set gives one prime.  Height is n - (number of blocks) + |T| and
# the quotient has dimension 2n - height.
for q in minimal_primes_of_graph(g):
    print(f"  height {q.height:2d}  dim {q.dim}  {render(q)}")

# %%
# Subsets are enumerated without pruning.  The 4-cycle is the reason:
# {1,3} qualifies although {1} does not.
print("C4:", [sorted(t) for t in cut_sets(cycle_graph(4))])
print("K5:", [sorted(t) for t in cut_sets(complete_graph(5))])
