"""Reidemeister moves, site finders and greedy simplification."""

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, PortGraph, faces, splice_tangle

__all__ = ["ReidemeisterMove", "r1_sites", "r2_sites", "r3_sites", "apply_reidemeister",
           "simplify", "simplify_traced", "compact"]

KINDS = ("R1-", "R1+", "R2-", "R2+", "R3")


@dataclass(frozen=True)
class ReidemeisterMove:
    """A Reidemeister move and where it applies.

    Sites by kind:

    * ``R1-``: ``(c,)``, a crossing with a monogon;
    * ``R1+``: ``(dart, sign)``, a kink pushed into the face left of ``dart``;
    * ``R2-``: ``(c1, c2)``, two crossings bounding a bigon with one over-arc;
    * ``R2+``: ``(dart_a, dart_b, sign)``, push the strand of ``dart_a`` over
      (``sign=+1``) or under the strand of ``dart_b`` across their common face;
    * ``R3``: ``(dart,)``, the first dart of a triangular face walk.
    """

    kind: str
    site: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown Reidemeister move {self.kind!r}")

    def __str__(self):
        return f"{self.kind} {self.site!r}"


def compact(d):
    """Relabel edges to 1..E in order of first appearance."""
    m = {}
    for e in d.edge_occurrences():
        if e not in m:
            m[e] = len(m) + 1
    return d.relabel(m)


def is_r1_site(d, c):
    x = d.crossings[c]
    return any(x[s] == x[(s + 1) % 4] for s in range(4))


def r1_sites(d):
    return [(c,) for c in range(len(d.crossings)) if is_r1_site(d, c)]


def r2_sites(d):
    out = []
    mate = d.mate()
    for c1 in range(len(d.crossings)):
        for s1 in range(4):
            q = mate[("x", c1, s1)]
            if q[0] != "x" or q[1] == c1 or q[2] % 2 != s1 % 2:
                continue
            c2, t1 = q[1], q[2]
            if mate[("x", c2, (t1 - 1) % 4)] == ("x", c1, (s1 + 1) % 4):
                b = (min(c1, c2), max(c1, c2))
                if b not in out:
                    out.append(b)
    return out


def _triangle(d, walk):
    """Return the R3 data of a triangular face walk, or None."""
    if len(walk) != 3 or any(p[0] != "x" for p in walk):
        return None
    xs = [p[1] for p in walk]
    if len(set(xs)) != 3:
        return None
    (_, x, sx), (_, y, uy), (_, z, uz) = walk
    ty = (uy + 1) % 4
    tz = (uz + 1) % 4
    tx = (sx + 1) % 4
    a_over = (sx % 2, ty % 2)
    b_over = (uy % 2, tz % 2)
    c_over = (uz % 2, tx % 2)
    if not (a_over == (1, 1) or b_over == (1, 1) or c_over == (1, 1)):
        return None
    return x, y, z, sx, tx, ty, uy, tz, uz


def r3_sites(d):
    out = []
    for w in faces(d):
        if len(w) == 3:
            w = min(w[i:] + w[:i] for i in range(3))
            if _triangle(d, w) is not None and (w[0],) not in out:
                out.append((w[0],))
    return out


def _walk_from(d, dart):
    w = [dart]
    q = d.next_dart(dart)
    while q != dart and len(w) < 4:
        w.append(q)
        q = d.next_dart(q)
    return tuple(w)


def _rot(t, yes):
    return (t[1], t[2], t[3], t[0]) if yes else t


def _apply_r3(d, dart):
    tri = _triangle(d, _walk_from(d, dart)) if dart[0] == "x" else None
    if tri is None:
        raise DiagramError("site does not match move kind")
    x, y, z, sx, tx, ty, uy, tz, uz = tri
    X = d.crossings
    A_x, A_y = X[x][(sx + 2) % 4], X[y][(ty + 2) % 4]
    B_y, B_z = X[y][(uy + 2) % 4], X[z][(tz + 2) % 4]
    C_z, C_x = X[z][(uz + 2) % 4], X[x][(tx + 2) % 4]
    top = max(d.ends())
    a, b, c = top + 1, top + 2, top + 3
    # the triangle is pushed through: each line now meets the other two in
    # the opposite order, with the same line on top at each pair
    nx = _rot((a, c, A_y, C_z), sx % 2 == 1)
    ny = _rot((B_z, A_x, b, a), uy % 2 == 1)
    nz = _rot((b, C_x, B_y, c), tz % 2 == 1)
    new = {x: nx, y: ny, z: nz}
    crossings = [new.get(i, X[i]) for i in range(len(X))]
    return compact(Diagram(crossings, d.loops, d.boundary, d.name))


def _kink(d, dart, sign):
    pg = PortGraph()
    pg.add(d, "d")
    pg.boundary = [("d", "b", i) for i in range(1, len(d.boundary) + 1)]
    src, tgt = pg.cut("d", dart)
    n = [("k", "x", 0, s) for s in range(4)]
    pg.connect(n[0], src)
    pg.connect(n[1], tgt)
    pg.connect(n[2], n[3])
    pg.crossings.append(tuple(n) if sign > 0 else (n[1], n[2], n[3], n[0]))
    return pg.to_diagram(d.name)


def _remove(d, cs):
    pg = PortGraph()
    pg.add(d, "d")
    pg.boundary = [("d", "b", i) for i in range(1, len(d.boundary) + 1)]
    for c in cs:
        pg.remove_crossing(c)
    return pg.to_diagram(d.name)


def _valid_dart(d, dart):
    if dart[0] == "l":
        return 0 <= dart[1] < d.loops
    try:
        d.edge_at(dart)
    except (IndexError, DiagramError):
        return False
    return True


def apply_reidemeister(d, m):
    k, s = m.kind, m.site
    if k == "R1-":
        if len(s) != 1 or not 0 <= s[0] < len(d.crossings) or not is_r1_site(d, s[0]):
            raise DiagramError("site does not match move kind")
        return _remove(d, [s[0]])
    if k == "R2-":
        if len(s) != 2 or tuple(sorted(s)) not in r2_sites(d):
            raise DiagramError("site does not match move kind")
        return _remove(d, list(s))
    if k == "R3":
        if len(s) != 1:
            raise DiagramError("site does not match move kind")
        return _apply_r3(d, s[0])
    if k == "R1+":
        if len(s) != 2 or not _valid_dart(d, s[0]):
            raise DiagramError("site does not match move kind")
        return _kink(d, s[0], s[1])
    if k == "R2+":
        if len(s) != 3 or not (_valid_dart(d, s[0]) and _valid_dart(d, s[1])):
            raise DiagramError("site does not match move kind")
        from .algebraic import compose, crossing_tangle
        if s[0] == s[1]:
            raise DiagramError("site does not match move kind")
        pair = compose(crossing_tangle(1), crossing_tangle(-1)) if s[2] > 0 else \
            compose(crossing_tangle(-1), crossing_tangle(1))
        return splice_tangle(d, s[0], s[1], pair)
    raise DiagramError("site does not match move kind")


def simplify_traced(d):
    """Greedy R1-/R2- reduction; returns (diagram, list of moves)."""
    moves = []
    while True:
        r1 = next((c for c in range(len(d.crossings)) if is_r1_site(d, c)), None)
        if r1 is not None:
            m = ReidemeisterMove("R1-", (r1,))
        else:
            r2 = r2_sites(d)
            if not r2:
                return d, moves
            m = ReidemeisterMove("R2-", r2[0])
        d = apply_reidemeister(d, m)
        moves.append(m)


def simplify(d):
    return simplify_traced(d)[0]
