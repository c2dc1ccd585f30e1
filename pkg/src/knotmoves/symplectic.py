"""The symplectic space of boundary colorings.

Boundary colorings of an n-tangle live in the alternating subspace of
Z_p^(2n).  It has basis f_k = e_k + e_(k+1), k = 1..2n-1, and the form
phi(f_i, f_(i+1)) = 1 = -phi(f_(i+1), f_i).  The all-ones vector
f_1 + f_3 + ... spans the radical; the quotient by it is a nondegenerate
symplectic space of dimension 2n - 2 in which tangles give Lagrangians.

Quotient coordinates: subtract the last f-coordinate times the radical
(whose last coordinate is 1), then drop that coordinate.
"""

from dataclasses import dataclass
from itertools import product
from math import prod

from .coloring import boundary_image
from .zk import SubspaceBasis, is_prime

__all__ = ["SymplecticSpace", "EnumerationBudgetExceeded", "alternating_check", "to_f_coords",
           "from_f_coords", "form_eval", "radical_vector", "quotient_vector", "quotient_reduce",
           "is_isotropic", "is_lagrangian", "lagrangian_count", "odd_product_count",
           "enumerate_lagrangians", "tangle_lagrangian"]


class EnumerationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SymplecticSpace:
    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("prime required")
        if self.n < 2:
            raise ValueError("need n >= 2")

    @property
    def dim(self):
        return 2 * self.n - 2


def alternating_check(v, p):
    return sum((-1) ** i * x for i, x in enumerate(v, 1)) % p == 0


def to_f_coords(v, p):
    v = [x % p for x in v]
    if not alternating_check(v, p):
        raise ValueError("vector is not alternating")
    c = [v[0]]
    for x in v[1:-1]:
        c.append((x - c[-1]) % p)
    return tuple(c)


def from_f_coords(c, p):
    m = len(c) + 1
    v = [0] * m
    for k, x in enumerate(c):
        v[k] += x
        v[k + 1] += x
    return tuple(x % p for x in v)


def form_eval(u, v, p):
    """phi(u, v) for vectors in f-coordinates (any length)."""
    s = 0
    for i in range(len(u) - 1):
        s += u[i] * v[i + 1] - u[i + 1] * v[i]
    return s % p


def radical_vector(n):
    """f_1 + f_3 + ... + f_(2n-1) in f-coordinates."""
    return tuple(1 if k % 2 == 0 else 0 for k in range(2 * n - 1))


def quotient_vector(c, p):
    """f-coordinates (length 2n-1) -> quotient coordinates (length 2n-2)."""
    t = c[-1]
    n = (len(c) + 1) // 2
    r = radical_vector(n)
    return tuple((x - t * y) % p for x, y in zip(c[:-1], r[:-1]))


def quotient_reduce(s):
    """Image in Z_p^(2n-2) of a subspace of Z_p^(2n) containing the all-ones vector."""
    p = s.modulus
    m = s.ambient_dim
    if not s.contains((1,) * m):
        raise ValueError("trivial colorings missing")
    vecs = [quotient_vector(to_f_coords(v, p), p) for v in s.vectors]
    q = SubspaceBasis.span(vecs, m - 2, p)
    assert q.dim == s.dim - 1
    return q


def is_isotropic(s):
    p = s.modulus
    return all(form_eval(u, v, p) == 0 for u in s.vectors for v in s.vectors)


def is_lagrangian(s):
    if s.ambient_dim % 2:
        return False
    return s.dim == s.ambient_dim // 2 and is_isotropic(s)


def lagrangian_count(p, n):
    return prod(p ** i + 1 for i in range(1, n))


def odd_product_count(n):
    """prod_{i=1}^{n-1} (2i + 1), the odd-factor reading of the p = 2 count."""
    return prod(2 * i + 1 for i in range(1, n))


def enumerate_lagrangians(p, n, max_states=2_000_000):
    """All Lagrangians of Z_p^(2n-2), as sorted canonical bases.

    Isotropic subspaces are grown one dimension at a time; each layer is
    deduplicated by its reduced row-echelon basis.
    """
    if not is_prime(p):
        raise ValueError("prime required")
    m = 2 * n - 2
    if m == 0:
        return [SubspaceBasis(0, p, ())]
    if p ** m > 10 ** 7:
        raise EnumerationBudgetExceeded(f"p^(2n-2) = {p ** m} vectors is too many")
    # projective representatives: first nonzero entry equal to 1
    reps = []
    for v in product(range(p), repeat=m):
        nz = next((x for x in v if x), 0)
        if nz == 1:
            reps.append(v)
    layer = {SubspaceBasis(m, p, ())}
    work = 0
    for _ in range(m // 2):
        nxt = set()
        for s in layer:
            for v in reps:
                work += 1
                if work > max_states:
                    raise EnumerationBudgetExceeded(f"more than {max_states} extension steps")
                if any(form_eval(v, b, p) for b in s.vectors) or s.contains(v):
                    continue
                nxt.add(SubspaceBasis.span(list(s.vectors) + [v], m, p))
        layer = nxt
    return sorted(layer, key=lambda s: s.vectors)


def tangle_lagrangian(t, p):
    s = quotient_reduce(boundary_image(t, p))
    assert is_lagrangian(s), "boundary image is not Lagrangian"
    return s
