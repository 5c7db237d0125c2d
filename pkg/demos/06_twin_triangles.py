# Two triangles hanging off a path: where the two posets meet
#
# Vertices 2,3,4 and 7,8,9 form triangles, with pendant vertices 1,5 and
# 6,10 and the edge 2-7 joining them.  The cut sets are all subsets of
# {2,4,7,9}.  We trace how the prime with killed set {2,3,4,7,8,9} and one
# block {1,5,6,10} enters the posets.

# %%
from binedge import A, Q, Graph, PosetLimits, PrimeIdeal, build_poset, cut_sets
from binedge import ideal_sum, minimal_primes, minimal_primes_of_graph, add_p_empty
from binedge.ideals import render

g = Graph(10, [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (2, 7),
               (6, 7), (7, 8), (7, 9), (8, 9), (9, 10)])
print(len(cut_sets(g)), "cut sets:", [sorted(t) for t in cut_sets(g)])
prime = {q.killed_set: q for q in minimal_primes_of_graph(g)}
target = PrimeIdeal.from_sets(10, {2, 3, 4, 7, 8, 9}, [{1, 5, 6, 10}])

# %%
# Route 1: P_{2,9} + P_{4,7} leaves two paths, 1-3-5 and 6-8-10.  Its
# components include the prime killing 3 and 8 as well, with four
# singletons; adding P_empty(G) to that merges 1,5,6,10.
s = ideal_sum(prime[frozenset({2, 9})], prime[frozenset({4, 7})])
print(render(s))
for q in minimal_primes(s):
    print("   ", render(q), "  + P_empty ->", render(add_p_empty(q, g)))

# %%
# Route 2, with no P_empty at all: P_{2,7} + P_{4,9}, decompose, add two of
# the pieces, decompose again.
s1 = ideal_sum(prime[frozenset({2, 7})], prime[frozenset({4, 9})])
lvl1 = minimal_primes(s1)
a = next(q for q in lvl1 if q.killed_set == {2, 3, 4, 7, 9})
b = next(q for q in lvl1 if q.killed_set == {2, 4, 7, 8, 9})
s2 = ideal_sum(a, b)
print(render(s2))
print("target among its components:", target in minimal_primes(s2))

# %%
limits = PosetLimits(max_vertices=10)
pq, pa = build_poset(g, Q, limits), build_poset(g, A, limits)
print(f"|Q_G| = {len(pq)}, |A_G| = {len(pa)}; target in Q: {target in pq}, in A: {target in pa}")
