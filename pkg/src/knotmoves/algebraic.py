"""Tangle algebra: rotation, composition, closure and algebraic generation.

Conventions (endpoints counterclockwise from the bottom-left corner):

* ``zero_tangle()`` has strands 1-4 and 2-3 and slope 0;
* ``infinity_tangle()`` has strands 1-2 and 3-4 and slope 1/0;
* ``crossing_tangle(+1)`` is the one-crossing tangle of slope +1;
* ``compose(a, b)`` stacks ``b`` on top of ``a`` (endpoints ``n+1..2n`` of
  ``a`` meet ``n..1`` of ``b``), which adds slopes of 2-tangles;
* ``rotate(t, 1)`` turns the disk by one endpoint counterclockwise, sending
  a slope ``s`` to ``-1/s``.

The numerator closure caps 1-4 and 2-3, the denominator closure caps 1-2 and
3-4; the numerator closure of a slope ``p/q`` tangle has determinant ``|p|``.
"""

from itertools import combinations

from .diagram import Diagram, DiagramError, PortGraph, canonical_code

__all__ = [
    "zero_tangle", "infinity_tangle", "crossing_tangle", "trivial_tangles",
    "one_crossing_tangles", "rotate", "compose", "mirror", "close",
    "TangleExpr", "generate_algebraic", "generate_2_algebraic", "GenerationBudgetExceeded",
]


class GenerationBudgetExceeded(RuntimeError):
    pass


def zero_tangle():
    return Diagram([], 0, (1, 2, 2, 1), "0")


def infinity_tangle():
    return Diagram([], 0, (1, 1, 2, 2), "inf")


def crossing_tangle(sign=1):
    t = Diagram([(1, 2, 3, 4)], 0, (1, 2, 3, 4), "+1")
    if sign < 0:
        t = t.mirror()
        t.name = "-1"
    return t


def mirror(t):
    return t.mirror()


def rotate(t, steps=1):
    """Turn a tangle by ``steps`` endpoints counterclockwise."""
    m = len(t.boundary)
    if not m:
        raise DiagramError("rotation needs a tangle")
    b = [None] * m
    for i, e in enumerate(t.boundary):
        b[(i + steps) % m] = e
    return Diagram(t.crossings, t.loops, b, t.name, check=False)


def compose(a, b):
    """Stack ``b`` on ``a``: the algebraic sum of tangles."""
    if len(a.boundary) != len(b.boundary) or not a.boundary:
        raise DiagramError("arity mismatch")
    n = len(a.boundary) // 2
    pg = PortGraph()
    pg.add(a, "a")
    pg.add(b, "b")
    for i in range(1, n + 1):
        pg.join(("a", "b", n + i), ("b", "b", n + 1 - i))
    pg.boundary = [("a", "b", i) for i in range(1, n + 1)] + \
                  [("b", "b", i) for i in range(n + 1, 2 * n + 1)]
    return pg.to_diagram()


def _check_planar_pairs(m, pairs, remaining):
    for (i, j), (k, l) in combinations(pairs, 2):
        a, b = sorted((i, j))
        inside = [a < x < b for x in (k, l)]
        if inside[0] != inside[1]:
            raise DiagramError("non-planar pairing")
    for i, j in pairs:
        a, b = sorted((i, j))
        side = {a < x < b for x in remaining}
        if len(side) > 1:
            raise DiagramError("non-planar pairing")


def close(t, pattern="numerator"):
    """Join boundary endpoints of ``t`` in pairs without new crossings.

    ``pattern`` is ``'numerator'``, ``'denominator'`` or a list of endpoint
    pairs; leftover endpoints are renumbered counterclockwise from the
    smallest one.
    """
    m = len(t.boundary)
    if pattern == "numerator":
        if m != 4:
            raise DiagramError("numerator closure needs a 2-tangle")
        pairs = [(1, 4), (2, 3)]
    elif pattern == "denominator":
        if m != 4:
            raise DiagramError("denominator closure needs a 2-tangle")
        pairs = [(1, 2), (3, 4)]
    else:
        pairs = [tuple(p) for p in pattern]
    used = [x for p in pairs for x in p]
    if len(set(used)) != len(used) or any(not 1 <= x <= m for x in used):
        raise DiagramError("pairing must use distinct endpoints")
    remaining = [i for i in range(1, m + 1) if i not in used]
    _check_planar_pairs(m, pairs, remaining)
    pg = PortGraph()
    pg.add(t, "t")
    for i, j in pairs:
        pg.join(("t", "b", i), ("t", "b", j))
    pg.boundary = [("t", "b", i) for i in remaining]
    return pg.to_diagram(t.name)


# -- leaves of the algebraic family --------------------------------------------

def _matchings(points):
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inner = points[1:k]
        outer = points[k + 1:]
        for a in _matchings(inner):
            for b in _matchings(outer):
                yield [(first, points[k])] + a + b


def _from_pairs(m, pairs):
    b = [0] * m
    for lab, (i, j) in enumerate(pairs, 1):
        b[i - 1] = b[j - 1] = lab
    return Diagram([], 0, b)


def trivial_tangles(n):
    """All crossingless n-tangles (non-crossing matchings)."""
    return [_from_pairs(2 * n, p) for p in _matchings(list(range(1, 2 * n + 1)))]


def one_crossing_tangles(n):
    """Reduced one-crossing n-tangles (no kinks), both crossing signs."""
    m = 2 * n
    out = []
    for legs in combinations(range(1, m + 1), 4):
        rest = [i for i in range(1, m + 1) if i not in legs]
        # the other endpoints must all fit in a single gap between two legs
        gaps = set()
        for r in rest:
            gaps.add(sum(1 for x in legs if x < r) % 4)
        if len(gaps) > 1:
            continue
        for pairs in _matchings(rest):
            b = [0] * m
            for k, i in enumerate(legs):
                b[i - 1] = k + 1
            for lab, (i, j) in enumerate(pairs, 5):
                b[i - 1] = b[j - 1] = lab
            x = Diagram([(1, 2, 3, 4)], 0, b)
            out.append(x)
            out.append(x.mirror())
    return out


class TangleExpr:
    """Expression tree over leaf tangles, ``r^i(A) * r^j(B)`` at nodes."""

    __slots__ = ("leaf", "left", "right", "i", "j")

    def __init__(self, leaf=None, left=None, right=None, i=0, j=0):
        self.leaf, self.left, self.right, self.i, self.j = leaf, left, right, i, j

    def evaluate(self):
        if self.leaf is not None:
            return self.leaf
        return compose(rotate(self.left.evaluate(), self.i), rotate(self.right.evaluate(), self.j))

    def __repr__(self):
        if self.leaf is not None:
            return f"Leaf({self.leaf.name or self.leaf.n_crossings})"
        return f"(r^{self.i}{self.left!r} * r^{self.j}{self.right!r})"


def _rotations(t):
    return [rotate(t, s) for s in range(len(t.boundary))]


def generate_algebraic(n, max_crossings, k=None, max_loops=1, max_tangles=200000,
                       reduced=False):
    """The n-algebraic tangles with at most ``max_crossings`` crossings.

    With ``k`` set, the right factor of every composition has at most ``k``
    crossings, giving the (n, k)-algebraic family.  Tangles with more than
    ``max_loops`` free loops are dropped.  Output is deduplicated by
    canonical code and sorted by (crossings, code).

    With ``reduced`` set, every tangle is replaced by its R1/R2 simplification
    before deduplication and surplus loops are deleted rather than the tangle
    dropped, so the output lists one diagram per simplified form.
    """
    if reduced:
        from .reidemeister import simplify
    if n == 2 and max_crossings > 8:
        raise GenerationBudgetExceeded("2-algebraic generation is limited to 8 crossings")
    pool = {}

    def add(t):
        if reduced:
            t = simplify(t)
            if t.loops > max_loops:
                t = Diagram(t.crossings, max_loops, t.boundary, t.name, check=False)
        if t.loops > max_loops or t.n_crossings > max_crossings:
            return None
        key = canonical_code(t)
        if key in pool:
            return None
        pool[key] = t
        if len(pool) > max_tangles:
            raise GenerationBudgetExceeded(f"more than {max_tangles} tangles")
        return t

    leaves = trivial_tangles(n) + (one_crossing_tangles(n) if max_crossings >= 1 else [])
    levels = {c: [] for c in range(max_crossings + 1)}

    def offer(t):
        # the family is closed under rotation, so keep every rotation
        fresh = []
        for r in _rotations(t):
            r = add(r)
            if r is not None:
                levels[r.n_crossings].append(r)
                fresh.append(r)
        return fresh

    for t in leaves:
        offer(t)
    for c in range(max_crossings + 1):
        # all products landing on level c from strictly lower levels on one
        # side; then close level c under products with crossingless tangles
        new = list(levels[c])
        for i in range(1, c):
            if k is not None and c - i > k:
                continue
            for a in levels[i]:
                for b in levels[c - i]:
                    new += offer(compose(a, b))
        todo = new
        while todo:
            nxt = []
            for t in todo:
                for z in list(levels[0]):
                    nxt += offer(compose(t, z))
                    if k is None or c <= k:
                        nxt += offer(compose(z, t))
            todo = nxt
    return sorted(pool.values(), key=lambda t: (t.n_crossings, canonical_code(t)))


def generate_2_algebraic(max_crossings, max_loops=1, reduced=False):
    """2-algebraic tangles up to ``max_crossings`` crossings."""
    return generate_algebraic(2, max_crossings, max_loops=max_loops, reduced=reduced)
