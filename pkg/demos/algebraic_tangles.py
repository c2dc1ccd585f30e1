"""
Algebraic 2-tangles reduce to four basic ones
=============================================

2-algebraic tangles are built from tangles with at most one crossing by
rotations and stacking.  Up to 3-moves each one should reduce to 0, inf,
+1 or -1, plus possibly some loose loops.  The Lagrangian mod 3 tells us
in advance which of the four is the only possible answer.
"""

from collections import Counter

from knotmoves import generate_2_algebraic, classify_tangle, MoveFamily, Budget

tangles = generate_2_algebraic(3, max_loops=0, reduced=True)
print(len(tangles), "simplified 2-algebraic tangles with at most 3 crossings")

names = ["0", "inf", "+1", "-1"]
hits = Counter()
for t in tangles:
    idx, loops, path = classify_tangle(t, MoveFamily.n_move(3), budget=Budget(max_depth=4),
                                       strategy="best")
    hits[names[idx]] += 1
print("reached:", dict(hits))

t = tangles[-1]
idx, loops, path = classify_tangle(t, MoveFamily.n_move(3), strategy="best")
print(f"e.g. a {t.n_crossings}-crossing tangle -> {names[idx]} with {loops} loops:")
for line in path.report()["path"]:
    print("   ", line)
