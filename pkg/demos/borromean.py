"""
The Borromean rings under (2,3)-moves
=====================================

The (2,3)-family allows (2,3), (3,2), (-2,-3) and (-3,-2)-moves, all of
which keep the 7-colorings.  The Borromean rings have 7 of them, so the only
trivial link they can reach is the unknot.  Best-first search (fewest
crossings first) finds a reduction in a few tens of thousands of states.
"""

import time

from knotmoves import library, Budget, MoveFamily, reduce, col_count

d = library.borromean()
print("col_7 =", col_count(d, 7))
t0 = time.monotonic()
r = reduce(d, MoveFamily.pq_move(2, 3), Budget(max_nodes=10 ** 6, max_depth=8),
           strategy="best")
print(f"{r.classification} after {r.n_moves} moves ({r.nodes} states, "
      f"{time.monotonic() - t0:.0f}s)")
for line in r.report()["path"]:
    print("   ", line)
print("replays:", r.replays(d))
