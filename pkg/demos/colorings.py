"""
Fox colorings of a few small links
==================================

A k-coloring labels every arc with a residue mod k so that at each crossing
the two under-arcs add up to twice the over-arc.  The count is a link
invariant; the trivial link with n components has k^n of them.
"""

from knotmoves import library, tri, col_count, coloring_space
from knotmoves.coloring import brute_force_colorings

for n in range(1, 6):
    print(f"tri(U_{n}) = {tri(library.trivial_link(n))}")

# the trefoil has 3 constant colorings and 6 that use all three colors
t = library.trefoil()
print("tri(trefoil) =", tri(t))
print("by brute force:", len(brute_force_colorings(t, 3)))

# the figure-eight only has the constant 3-colorings, but 25 five-colorings
f = library.figure_eight()
print("tri(4_1) =", tri(f), " col_5(4_1) =", col_count(f, 5))

# over composite moduli the coloring group need not be a power of Z_k
for k in (4, 8, 9):
    sp = coloring_space(library.borromean(), k)
    group = " x ".join(f"Z{o}" for o in sp.invariant_factors)
    print(f"Borromean rings mod {k}: {sp.count} colorings, group {group}")
