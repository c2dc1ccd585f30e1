"""Fox k-colorings of diagrams and tangles."""

from dataclasses import dataclass
from itertools import product

from .diagram import arcs
from .zk import (SubspaceBasis, ZkMatrix, is_prime, kernel, solution_count,
                 solution_group)

__all__ = ["ColoringSpace", "coloring_relations", "coloring_space", "col_count",
           "col_vector", "tri", "boundary_image", "brute_force_colorings"]


def coloring_relations(d):
    """Integer relation rows and the arc list they are indexed by.

    One variable per arc (crossing-free loops included), one row
    ``under1 + under2 - 2 over`` per crossing.
    """
    arc_list = arcs(d)
    index = {}
    for i, a in enumerate(arc_list):
        if a[0] != "loop":
            for e in a:
                index[e] = i
    rows = []
    for a, b, c, _ in d.crossings:
        row = [0] * len(arc_list)
        row[index[a]] += 1
        row[index[c]] += 1
        row[index[b]] -= 2
        rows.append(row)
    return rows, arc_list, index


@dataclass(frozen=True)
class ColoringSpace:
    modulus: int
    arcs: tuple
    edge_arc: dict
    basis: SubspaceBasis = None     # prime modulus only
    invariant_factors: tuple = ()   # cyclic orders > 1 of the group
    count: int = 0

    @property
    def dim(self):
        if self.basis is None:
            raise ValueError("dimension is only defined for prime modulus")
        return self.basis.dim

    def contains(self, colors):
        """``colors`` indexed by arc position."""
        if self.basis is not None:
            return self.basis.contains(colors)
        raise ValueError("membership needs a prime modulus")


def coloring_space(d, k):
    if k < 2:
        raise ValueError("modulus must be at least 2")
    rows, arc_list, index = coloring_relations(d)
    n = len(arc_list)
    basis = None
    if is_prime(k):
        m = ZkMatrix.from_rows(rows, k, n) if rows else ZkMatrix.zeros(0, n, k)
        basis = kernel(m)
        count = k ** basis.dim
        factors = (k,) * basis.dim
    else:
        count = solution_count(rows, n, k)
        factors = tuple(solution_group(rows, n, k))
    return ColoringSpace(k, tuple(arc_list), index, basis, factors, count)


def col_count(d, k):
    if k < 2:
        raise ValueError("modulus must be at least 2")
    rows, arc_list, _ = coloring_relations(d)
    return solution_count(rows, len(arc_list), k)


def col_vector(d, moduli=range(2, 14)):
    return tuple(col_count(d, k) for k in moduli)


def tri(d):
    return col_count(d, 3)


def boundary_image(t, p):
    """Image of the boundary map Col_p(t) -> Z_p^(2n), as a canonical subspace."""
    if not t.boundary:
        raise ValueError("boundary image needs a tangle")
    if not is_prime(p):
        raise ValueError("prime required")
    sp = coloring_space(t, p)
    vecs = [[v[sp.edge_arc[e]] for e in t.boundary] for v in sp.basis.vectors]
    return SubspaceBasis.span(vecs, len(t.boundary), p)


def brute_force_colorings(d, k):
    """All colorings by exhaustive search, each a tuple indexed by arc.

    Exponential; meant as a test oracle on small diagrams.
    """
    rows, arc_list, _ = coloring_relations(d)
    out = []
    for x in product(range(k), repeat=len(arc_list)):
        if all(sum(a * b for a, b in zip(r, x)) % k == 0 for r in rows):
            out.append(x)
    return out
