# Exact reduced homology of order complexes
#
# Ranks are computed with integer row reduction (no floats) or modulo a
# prime.  The six-vertex projective plane shows why the field matters.

# %%
from binedge import FieldSpec, FinitePoset, order_complex, rank_exact, reduced_betti
from binedge.homology import SimplicialComplexOfChains

cx = SimplicialComplexOfChains.from_facets
print("empty complex      ", reduced_betti(cx([()])).nonzero())
print("two points         ", reduced_betti(cx([(1,), (2,)])).nonzero())
print("hollow triangle    ", reduced_betti(cx([(1, 2), (2, 3), (1, 3)])).nonzero())

# %%
rp2 = cx([(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
          (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)])
for c in (0, 2, 3):
    print(f"projective plane over {FieldSpec(c)}:", reduced_betti(rp2, FieldSpec(c)).nonzero())

# %%
print("rank of [[2]] over QQ:", rank_exact([[2]]), " over GF(2):", rank_exact([[2]], 2))

# %%
# Order complexes: the crown (two minima below two maxima) is a circle.
crown = FinitePoset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
print("crown:", order_complex(crown).facets, reduced_betti(order_complex(crown)).nonzero())
