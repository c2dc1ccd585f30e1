"""Non-isotopy moves: n-moves, (p,q)-moves and rational p/q-moves.

Every move replaces a pair of parallel strands (the 0-tangle) inside a
disk by a rational tangle.  The disk is located by a ``MoveSite``: two edges
on a common face, or two edges on split pieces of the diagram.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import DiagramError, components, faces, splice_tangle, vertex_components
from .rational import RationalTangleSpec, Slope, build_tangle, mq_to_slope, twist

__all__ = ["NMove", "PQMove", "RationalMove", "MoveSite", "MoveSpec", "enumerate_sites",
           "apply_move", "apply_move_traced", "move_inverse", "loop_label",
           "format_move", "parse_move", "resolve_site"]


@dataclass(frozen=True)
class NMove:
    """|n| half-twists of sign n."""

    n: int

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("n = 0 is not a move")

    def tangle(self):
        return twist(self.n)

    @property
    def modulus(self):
        return abs(self.n)

    def inverse(self):
        return NMove(-self.n)

    def params(self):
        return str(self.n)


@dataclass(frozen=True)
class PQMove:
    """p twists in one direction, then q in the perpendicular one."""

    p: int
    q: int

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q = 0: an (m, 0) configuration is just an m-move")

    def tangle(self):
        return build_tangle((self.q, self.p))

    @property
    def slope(self):
        return mq_to_slope(self.p, self.q)

    @property
    def modulus(self):
        return abs(self.p * self.q + 1)

    def inverse(self):
        return PQMove(-self.p, -self.q)

    def params(self):
        return f"{self.p},{self.q}"


@dataclass(frozen=True)
class RationalMove:
    spec: RationalTangleSpec

    def __post_init__(self):
        if not isinstance(self.spec, RationalTangleSpec):
            if isinstance(self.spec, Slope):
                spec = RationalTangleSpec.from_slope(self.spec)
            else:
                spec = RationalTangleSpec(self.spec)
            object.__setattr__(self, "spec", spec)
        if self.spec.slope.num == 0:
            raise ValueError("slope 0 is the identity substitution")

    @classmethod
    def from_slope(cls, num, den):
        return cls(RationalTangleSpec.from_slope((num, den)))

    def tangle(self):
        return build_tangle(self.spec)

    @property
    def slope(self):
        return self.spec.slope

    @property
    def modulus(self):
        return abs(self.spec.slope.num)

    def inverse(self):
        return RationalMove(RationalTangleSpec(tuple(-a for a in self.spec.conway)))

    def params(self):
        return ",".join(map(str, self.spec.conway))


KIND_NAMES = {NMove: "n", PQMove: "pq", RationalMove: "rational"}


@lru_cache(maxsize=256)
def _tangle_of(kind):
    return kind.tangle()


@dataclass(frozen=True)
class MoveSite:
    """Two edges bounding a common face (``face`` is its index in
    ``faces(d)``), or lying on split pieces (``face is None``).

    The darts both have the disk of the move on their left.
    """

    face: object
    edge_a: int
    edge_b: int
    dart_a: tuple = field(compare=False)
    dart_b: tuple = field(compare=False)

    def __str__(self):
        f = "*" if self.face is None else str(self.face)
        return f"{f},{self.edge_a},{self.edge_b}"


@dataclass(frozen=True)
class MoveSpec:
    kind: object
    site: MoveSite = None

    def __str__(self):
        return format_move(self)


def loop_label(d, k):
    """Edge label used for crossing-free loop ``k`` (after the largest label)."""
    return max(d.ends(), default=0) + k + 1


def _edge_of(d, dart):
    if dart[0] == "l":
        return loop_label(d, dart[1])
    return d.edge_at(dart)


def _component_darts(d):
    """One dart per strand component of each vertex piece, plus a loop."""
    pieces = []
    for g in vertex_components(d):
        darts = []
        seen = set()
        starts = ([("b", i) for i in range(1, len(d.boundary) + 1)] if "B" in g else []) + \
            [("x", c, s) for c in sorted(x for x in g if x != "B") for s in range(4)]
        for p in starts:
            if p in seen:
                continue
            darts.append(p)
            # walk the strand through crossings in both directions
            for q0 in (p, d.other_end(p)):
                q = q0
                while q not in seen:
                    seen.add(q)
                    r = d.other_end(q)
                    seen.add(r)
                    if r[0] != "x":
                        break
                    q = ("x", r[1], (r[2] + 2) % 4)
        pieces.append(darts)
    return pieces


def enumerate_sites(d):
    """All move sites of ``d``, deterministic order.

    Pairs of distinct edges on each face walk (first occurrence of each
    edge), then one site per pair of strand components lying on different
    split pieces (loops are interchangeable, so one loop stands for all).
    """
    out = []
    for f, walk in enumerate(faces(d)):
        if walk[0][0] == "l":
            continue
        first = {}
        for p in walk:
            e = d.edge_at(p)
            if e not in first:
                first[e] = p
        items = list(first.items())
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                (ea, da), (eb, db) = items[i], items[j]
                out.append(MoveSite(f, ea, eb, da, db))
    pieces = _component_darts(d)
    if d.loops:
        pieces.append([("l", 0)])
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            for da in pieces[i]:
                for db in pieces[j]:
                    out.append(MoveSite(None, _edge_of(d, da), _edge_of(d, db), da, db))
    if d.loops >= 2:
        out.append(MoveSite(None, loop_label(d, 0), loop_label(d, 1), ("l", 0), ("l", 1)))
    return out


def resolve_site(d, face, edge_a, edge_b):
    """Rebuild a MoveSite of ``d`` from its serialized form."""
    top = max(d.ends(), default=0)

    def loop_dart(e):
        k = e - top - 1
        if 0 <= k < d.loops:
            return ("l", k)
        return None

    if face is None:
        darts = []
        for e in (edge_a, edge_b):
            if e in d.ends():
                darts.append(d.ends()[e][0])
            elif loop_dart(e) is not None:
                darts.append(loop_dart(e))
            else:
                raise DiagramError(f"invalid site: no edge {e}")
        return MoveSite(None, edge_a, edge_b, darts[0], darts[1])
    fs = faces(d)
    if not 0 <= face < len(fs) or fs[face][0][0] == "l":
        raise DiagramError(f"invalid site: no face {face}")
    first = {}
    for p in fs[face]:
        first.setdefault(d.edge_at(p), p)
    if edge_a not in first or edge_b not in first or edge_a == edge_b:
        raise DiagramError("invalid site: edges do not share the face")
    return MoveSite(face, edge_a, edge_b, first[edge_a], first[edge_b])


def _check_site(d, site):
    for dart in (site.dart_a, site.dart_b):
        if dart[0] == "l":
            if not 0 <= dart[1] < d.loops:
                raise DiagramError("invalid site: no such loop")
        else:
            try:
                d.edge_at(dart)
            except (IndexError, DiagramError):
                raise DiagramError("invalid site: no such dart") from None
    if site.face is not None:
        fs = faces(d)
        if not 0 <= site.face < len(fs) or site.dart_a not in fs[site.face] or \
                site.dart_b not in fs[site.face]:
            raise DiagramError("invalid site: darts do not bound the face")
    if site.dart_a == site.dart_b:
        raise DiagramError("invalid site: needs two different strands")


def apply_move_traced(d, m):
    """Apply ``m``; return (diagram, inverse move located in the result).

    The inverse sits on the two edges leaving the top of the inserted block,
    so for n-moves the two blocks cancel by R2 moves.
    """
    if m.site is None:
        raise DiagramError("move has no site")
    _check_site(d, m.site)
    t = _tangle_of(m.kind)
    out = splice_tangle(d, m.site.dart_a, m.site.dart_b, t, d.name)
    off = len(d.crossings)

    def block_port(i):
        u, v = t.ends()[t.boundary[i - 1]]
        q = v if u == ("b", i) else u
        if q[0] == "b":
            return None
        return ("x", off + q[1], q[2])

    p4, p3 = block_port(4), block_port(3)
    inv = None
    if p4 is not None and p3 is not None:
        da = out.other_end(p4)
        db = p3
        fs = faces(out)
        f = next(i for i, w in enumerate(fs) if da in w)
        ea, eb = out.edge_at(da), out.edge_at(db)
        if ea != eb:
            inv = MoveSpec(m.kind.inverse(), MoveSite(f, ea, eb, da, db))
    return out, inv


def apply_move(d, m, check=True):
    if m.site is None:
        raise DiagramError("move has no site")
    if check:
        _check_site(d, m.site)
    return splice_tangle(d, m.site.dart_a, m.site.dart_b, _tangle_of(m.kind), d.name)


def move_inverse(m):
    if isinstance(m, MoveSpec):
        return MoveSpec(m.kind.inverse(), m.site)
    return m.inverse()


# -- traces ------------------------------------------------------------------

def format_move(m):
    return f"M {KIND_NAMES[type(m.kind)]} {m.kind.params()} @ {m.site}"


def parse_kind(name, params):
    vals = [int(x) for x in params.split(",")]
    if name == "n":
        return NMove(*vals)
    if name == "pq":
        return PQMove(*vals)
    if name == "rational":
        return RationalMove(RationalTangleSpec(vals))
    raise ValueError(f"unknown move kind {name!r}")


def parse_move(line, d):
    """Parse one trace line against the diagram it applies to."""
    toks = line.split()
    if len(toks) != 5 or toks[0] != "M" or toks[3] != "@":
        raise ValueError(f"bad move line {line!r}")
    kind = parse_kind(toks[1], toks[2])
    f, ea, eb = toks[4].split(",")
    face = None if f == "*" else int(f)
    return MoveSpec(kind, resolve_site(d, face, int(ea), int(eb)))
