"""Exact linear algebra over Z/k.

Matrices are small (one row per crossing, one column per arc), so everything
here works on plain Python integers; nothing overflows and nothing is
approximate.
"""

from dataclasses import dataclass
from math import gcd


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ZkMatrix:
    """Row-major matrix with entries reduced modulo ``modulus``."""

    rows: int
    cols: int
    modulus: int
    entries: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        reduced = tuple(int(e) % self.modulus for e in self.entries)
        object.__setattr__(self, "entries", reduced)

    @classmethod
    def from_rows(cls, rows, modulus, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = [x for r in rows for x in r]
        return cls(len(rows), cols, modulus, tuple(flat))

    @classmethod
    def identity(cls, n, modulus):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], modulus, n)

    @classmethod
    def zeros(cls, rows, cols, modulus):
        return cls(rows, cols, modulus, (0,) * (rows * cols))

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, vector):
        """Matrix-vector product mod k."""
        k = self.modulus
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) % k
                     for i in range(self.rows))


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of (Z/p)^ambient_dim stored by its reduced row-echelon basis.

    The RREF is canonical, so two bases describe the same subspace exactly
    when they compare equal.
    """

    ambient_dim: int
    modulus: int
    vectors: tuple

    @classmethod
    def span(cls, vectors, ambient_dim, modulus):
        vectors = [tuple(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise ValueError("vector length does not match ambient dimension")
        if not vectors:
            return cls(ambient_dim, modulus, ())
        m = ZkMatrix.from_rows(vectors, modulus, ambient_dim)
        reduced, rank = rref(m)
        return cls(ambient_dim, modulus, tuple(tuple(r) for r in reduced.to_rows()[:rank]))

    @property
    def dim(self):
        return len(self.vectors)

    def contains(self, v):
        v = tuple(x % self.modulus for x in v)
        rest = _reduce_against(list(v), self.vectors, self.modulus)
        return not any(rest)

    def elements(self):
        """Every vector of the subspace (p**dim of them)."""
        p = self.modulus
        out = [(0,) * self.ambient_dim]
        for b in self.vectors:
            out = [tuple((x + c * y) % p for x, y in zip(v, b)) for v in out for c in range(p)]
        return out


def _pivot(row):
    for j, x in enumerate(row):
        if x:
            return j
    return None


def _reduce_against(v, basis, p):
    for b in basis:
        j = _pivot(b)
        c = v[j]
        if c:
            v = [(x - c * y) % p for x, y in zip(v, b)]
    return v


def rref(m):
    """Reduced row-echelon form over a prime field.

    Returns ``(rref_matrix, rank)``; pivots are normalized to 1 and the zero
    rows sit at the bottom.
    """
    p = m.modulus
    if not is_prime(p):
        raise ValueError("prime required")
    a = m.to_rows()
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == m.rows:
            break
    return ZkMatrix.from_rows(a, p, m.cols), r


def rank(m):
    return rref(m)[1]


def kernel(m):
    """Basis of {x : m x = 0} over Z/p."""
    p = m.modulus
    red, r = rref(m)
    rows = red.to_rows()[:r]
    pivots = [_pivot(row) for row in rows]
    free = [j for j in range(m.cols) if j not in pivots]
    vecs = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = (-row[f]) % p
        vecs.append(v)
    return SubspaceBasis.span(vecs, m.cols, p)


def subspace_equal(a, b):
    if a.ambient_dim != b.ambient_dim or a.modulus != b.modulus:
        raise ValueError("subspaces live in different spaces")
    return a.vectors == b.vectors


def smith_normal_form(rows):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    The result has ``min(nrows, ncols)`` entries; rank deficiency shows up as
    trailing zeros.
    """
    a = [list(map(int, r)) for r in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    n = min(nr, nc)
    for t in range(n):
        # bring the smallest nonzero entry of the trailing block to (t, t)
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return [abs(a[i][i]) for i in range(t)] + [0] * (n - t)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            # divisibility: fold any entry not divisible by the pivot into row t
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % piv), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
    return [abs(a[i][i]) for i in range(n)]


def solution_count(rows, ncols, k):
    """Number of x in (Z/k)^ncols with A x = 0, from the Smith form of A."""
    factors = smith_normal_form(rows) if rows else []
    factors = list(factors) + [0] * (ncols - len(factors))
    count = 1
    for d in factors[:ncols]:
        count *= gcd(d, k)
    return count


def solution_group(rows, ncols, k):
    """Cyclic orders of the solution group of A x = 0 over Z/k (orders > 1)."""
    factors = smith_normal_form(rows) if rows else []
    factors = list(factors) + [0] * (ncols - len(factors))
    orders = [gcd(d, k) for d in factors[:ncols]]
    return sorted(o for o in orders if o > 1)
