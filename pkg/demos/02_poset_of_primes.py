# Building the poset of primes Q_G
#
# Start from the minimal primes, add up every nonempty subset of them, keep
# the sums that are prime, and decompose the ones that are not.  The Q
# variant also throws in q + P_empty(G) for each new component q.

# %%
from binedge import A, Q, build_poset, ideal_sum, is_prime, minimal_primes, path_graph
from binedge.ideals import render
from binedge.poset import hasse_edges, to_dot

g = path_graph(5)
pq = build_poset(g, Q)
pa = build_poset(g, A)
print(f"|Q_G| = {len(pq)}, |A_G| = {len(pa)}, same elements: {set(pq) == set(pa)}")

# %%
# The only non-prime sum for the path: killing 2 and 4 leaves the edges 1-3
# and 3-5, a path again, which splits into two primes.
mins = {q.killed_set: q for q in pq.maximal_elements()}
s = ideal_sum(mins[frozenset({2})], mins[frozenset({4})])
print(render(s), "prime?", is_prime(s))
for q in minimal_primes(s):
    print("   ->", render(q))

# %%
# Elements are sorted by height; the Hasse diagram goes from larger ideals
# to the smaller ones they contain.
for i, q in enumerate(pq.elements):
    print(f"[{i:2d}] d={q.dim}  {render(q)}")
print(len(hasse_edges(pq)), "covering pairs")

# %%
# Graphviz users can render the diagram directly.
print(to_dot(pq)[:200], "...")
