"""
Reducing knots with 3-moves and 4-moves
=======================================

A 3-move replaces two parallel strands by three half-twists.  It keeps the
number of 3-colorings, so a trefoil (9 of them) can only reach U_2 and a
figure-eight (3 of them) can only reach U_1.  The search finds those
reductions and prints a trace that can be replayed.
"""

from knotmoves import library, Budget, MoveFamily, reduce, tri

for d, n in ((library.trefoil(), 3), (library.figure_eight(), 3),
             (library.trefoil(), 4), (library.figure_eight(), 4)):
    r = reduce(d, MoveFamily.n_move(n), Budget(max_depth=4))
    print(f"{d.name}, {n}-moves: {r.classification} after {r.n_moves} move(s), "
          f"{r.nodes} states looked at")
    for line in r.report()["path"]:
        print("   ", line)
    assert r.replays(d)

# tri is preserved along the way
r = reduce(library.trefoil(), MoveFamily.n_move(3), Budget(max_depth=4))
print("tri before and after:", tri(library.trefoil()), tri(r.end))
