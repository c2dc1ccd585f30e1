"""
Rational tangles and rational moves
===================================

A rational tangle is determined by its slope, a continued fraction of its
Conway vector.  Substituting the p/q tangle for two parallel strands is a
p/q-move; it keeps the p-colorings.  A (m,q)-move is the rational move with
slope (mq+1)/q.
"""

import random

from knotmoves import (build_tangle, col_count, conway_from_slope, enumerate_sites,
                       MoveSpec, RationalMove, PQMove, apply_move, slope, mq_to_slope)
from knotmoves.randgen import random_link

print("slope of T(2,2):", slope((2, 2)))
print("Conway vector of 13/5:", conway_from_slope((13, 5)))
print("the (2,2)-move has slope", mq_to_slope(2, 2), "and the (2,3)-move", mq_to_slope(2, 3))

t = build_tangle((2, 1, 1, 2))
print(f"{t.name} has {t.n_crossings} crossings")

# col_13 survives 13/5-moves, col_5 survives (2,2)-moves
rng = random.Random(0)
move = RationalMove.from_slope(13, 5)
for _ in range(5):
    d = random_link(rng, 6)
    sites = enumerate_sites(d)
    if not sites:
        continue
    e = apply_move(d, MoveSpec(move, rng.choice(sites)))
    f = apply_move(d, MoveSpec(PQMove(2, 2), rng.choice(sites)))
    print(f"{d.n_crossings} -> {e.n_crossings} crossings: col_13 {col_count(d, 13)} "
          f"-> {col_count(e, 13)};  col_5 {col_count(d, 5)} -> {col_count(f, 5)}")
