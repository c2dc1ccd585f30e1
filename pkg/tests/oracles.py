"""Slow, independent reference computations used only by the tests."""

from itertools import product


class _UF(dict):
    def find(self, x):
        while self.setdefault(x, x) != x:
            self[x] = self.setdefault(self[x], self[x])
            x = self[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self[a] = b


def _padd(p, q, scale=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def _pmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {k: v for k, v in out.items() if v}


def bracket(d):
    """Kauffman bracket of a link diagram by the full state sum, as {exp of A: coeff}.

    Invariant under R2 and R3; R1 multiplies it by -A^(+-3).
    """
    if d.boundary:
        raise ValueError("links only")
    delta = {2: -1, -2: -1}
    total = {}
    n = len(d.crossings)
    for state in product((0, 1), repeat=n):
        uf = _UF()
        for e in d.ends():
            uf.find(e)
        for (a, b, c, e), s in zip(d.crossings, state):
            if s == 0:
                uf.union(a, b)
                uf.union(c, e)
            else:
                uf.union(a, e)
                uf.union(b, c)
        loops = len({uf.find(e) for e in d.ends()}) + d.loops
        term = {state.count(0) - state.count(1): 1}
        for _ in range(loops - 1):
            term = _pmul(term, delta)
        total = _padd(total, term)
    return total


def same_up_to_kink(p, q):
    """p == (-A^3)^k q for some integer k."""
    for k in range(-12, 13):
        sign = -1 if k % 2 else 1
        if {e + 3 * k: sign * v for e, v in q.items()} == p:
            return True
    return False


def brute_col_count(d, k):
    """Fox colorings counted by trying every assignment to every arc."""
    from knotmoves.diagram import arcs
    arc_list = arcs(d)
    idx = {}
    for i, a in enumerate(arc_list):
        if a[0] != "loop":
            for e in a:
                idx[e] = i
    n = len(arc_list)
    count = 0
    for x in product(range(k), repeat=n):
        if all((x[idx[a]] + x[idx[c]] - 2 * x[idx[b]]) % k == 0 for a, b, c, _ in d.crossings):
            count += 1
    return count
