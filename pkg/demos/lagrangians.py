"""
Boundary colorings are Lagrangian
=================================

Restricting the p-colorings of an n-tangle to its 2n endpoints gives an
n-dimensional subspace.  Modulo the constant colorings it is a Lagrangian
of a (2n-2)-dimensional symplectic space over Z_p, and there are only
prod (p^i + 1) of those.  Here we count them, and check how many are
realized by small algebraic tangles.
"""

from knotmoves import enumerate_lagrangians, lagrangian_count, census_boundary_subspaces
from knotmoves.algebraic import crossing_tangle, infinity_tangle, zero_tangle
from knotmoves.symplectic import tangle_lagrangian

for p, n in ((3, 2), (5, 2), (2, 3), (3, 3)):
    print(f"p={p} n={n}: formula {lagrangian_count(p, n)}, "
          f"enumerated {len(enumerate_lagrangians(p, n))}")

# the four basic 2-tangles hit the four Lagrangians mod 3
for name, t in (("0", zero_tangle()), ("inf", infinity_tangle()),
                ("+1", crossing_tangle(1)), ("-1", crossing_tangle(-1))):
    print(f"  {name:>3}: {tangle_lagrangian(t, 3).vectors}")

for n, p in ((2, 3), (2, 5), (2, 7), (3, 3)):
    r = census_boundary_subspaces(n, p, max_crossings=6)
    print(f"realized by algebraic {n}-tangles mod {p}: {r.found} of {r.total}")
