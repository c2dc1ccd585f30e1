"""Combinatorial link and tangle diagrams.

A diagram is a list of crossings, each a 4-tuple of edge labels listed
counterclockwise.  Slots 0 and 2 hold the under-strand, slots 1 and 3 the
over-strand.  Crossing-free loops are kept as a bare count.  A tangle has
``2n`` boundary endpoints numbered counterclockwise from the bottom-left
corner; ``boundary[i - 1]`` is the edge at endpoint ``i``.

Edge ends are addressed by *ports*: ``('x', c, s)`` is slot ``s`` of crossing
``c`` and ``('b', i)`` is boundary endpoint ``i``.  A *dart* is an edge
traversed away from a port; the face on its left is found by turning to the
previous slot at the far crossing.
"""

from itertools import count

__all__ = [
    "Diagram", "DiagramError", "DiagramParseError", "PortGraph",
    "parse", "parse_many", "emit", "arcs", "components", "faces",
    "vertex_components", "euler_ok", "canonical_code",
]


class DiagramError(ValueError):
    pass


class DiagramParseError(DiagramError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.message = message


def _normal_crossing(x):
    a, b, c, d = x
    if (c, d) < (a, b):
        return (c, d, a, b)
    return (a, b, c, d)


class Diagram:
    """Immutable link/tangle diagram."""

    __slots__ = ("crossings", "loops", "boundary", "name", "_ends", "_hash", "_mate")

    def __init__(self, crossings=(), loops=0, boundary=(), name="", check=True):
        self.crossings = tuple(_normal_crossing(tuple(int(e) for e in x)) for x in crossings)
        self.loops = int(loops)
        self.boundary = tuple(int(e) for e in boundary)
        self.name = name
        self._ends = None
        self._hash = None
        self._mate = None
        if check:
            self._validate()

    def _validate(self):
        if any(len(x) != 4 for x in self.crossings):
            raise DiagramError("a crossing needs exactly four slots")
        if len(self.boundary) % 2:
            raise DiagramError("ill-formed boundary")
        if self.loops < 0:
            raise DiagramError("negative loop count")
        counts = {}
        for e in self.edge_occurrences():
            counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(f"ill-formed edge {bad[0]}")

    def edge_occurrences(self):
        for x in self.crossings:
            yield from x
        yield from self.boundary

    # -- basic structure -------------------------------------------------

    @property
    def n_crossings(self):
        return len(self.crossings)

    @property
    def arity(self):
        """Number of strands n of an n-tangle (0 for links)."""
        return len(self.boundary) // 2

    @property
    def is_tangle(self):
        return bool(self.boundary)

    def ends(self):
        """Mapping edge label -> (port, port)."""
        if self._ends is None:
            ends = {}
            for c, x in enumerate(self.crossings):
                for s, e in enumerate(x):
                    ends.setdefault(e, []).append(("x", c, s))
            for i, e in enumerate(self.boundary, 1):
                ends.setdefault(e, []).append(("b", i))
            self._ends = {e: tuple(v) for e, v in ends.items()}
        return self._ends

    def edge_at(self, port):
        if port[0] == "x":
            return self.crossings[port[1]][port[2]]
        if port[0] == "b":
            return self.boundary[port[1] - 1]
        raise DiagramError(f"no edge at port {port!r}")

    def mate(self):
        """Mapping port -> port at the other end of its edge."""
        if self._mate is None:
            m = {}
            for u, v in self.ends().values():
                m[u] = v
                m[v] = u
            self._mate = m
        return self._mate

    def other_end(self, port):
        try:
            return self.mate()[port]
        except KeyError:
            raise DiagramError(f"no edge at port {port!r}") from None

    def next_dart(self, port):
        """Next dart along the face on the left of the given dart."""
        q = self.mate()[port]
        if q[0] == "x":
            return ("x", q[1], (q[2] - 1) % 4)
        return ("b", q[1] % len(self.boundary) + 1)

    def ports(self):
        for c in range(len(self.crossings)):
            for s in range(4):
                yield ("x", c, s)
        for i in range(1, len(self.boundary) + 1):
            yield ("b", i)

    def edges(self):
        return sorted(self.ends())

    # -- equality --------------------------------------------------------

    def _key(self):
        return (self.crossings, self.loops, self.boundary)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        kind = f"tangle {len(self.boundary)}" if self.boundary else "link"
        return f"<Diagram {kind} {self.name!r} c={len(self.crossings)} loops={self.loops}>"

    def replace(self, **kw):
        args = dict(crossings=self.crossings, loops=self.loops,
                    boundary=self.boundary, name=self.name)
        args.update(kw)
        return Diagram(**args)

    def relabel(self, mapping):
        """Rename edges through ``mapping`` (a dict or callable)."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return Diagram([tuple(f(e) for e in x) for x in self.crossings], self.loops,
                       [f(e) for e in self.boundary], self.name)

    def mirror(self):
        """Swap over and under at every crossing."""
        return Diagram([(b, c, d, a) for a, b, c, d in self.crossings], self.loops,
                       self.boundary, self.name)


# -- port graphs: the common rewriting engine --------------------------------

_loop_ids = count()


class PortGraph:
    """Scratch structure for rewriting diagrams.

    Ports are joined by *wires* (pieces of edge) and, at removed crossings or
    glued boundary points, by *through* links.  ``to_diagram`` walks wires and
    through links to recover edges; cycles without a terminal port become
    loops.
    """

    def __init__(self):
        self.wire = {}
        self.through = {}
        self.crossings = []
        self.boundary = []
        self.loops = 0

    def connect(self, p, q):
        self.wire[p] = q
        self.wire[q] = p

    def join(self, p, q):
        self.through[p] = q
        self.through[q] = p

    def add(self, d, tag, loops=True):
        """Copy diagram ``d`` in, its ports prefixed by ``tag``."""
        for c in range(len(d.crossings)):
            self.crossings.append(tuple((tag, "x", c, s) for s in range(4)))
        for e, (u, v) in d.ends().items():
            self.connect((tag,) + u, (tag,) + v)
        if loops:
            self.loops += d.loops

    def cut(self, tag, dart):
        """Cut the edge of ``dart``; return (source side, target side) ports."""
        if dart[0] == "l":
            k = next(_loop_ids)
            s, t = (tag, "l", k, 0), (tag, "l", k, 1)
            self.loops -= 1
            self.join(s, t)
            return s, t
        u = (tag,) + dart
        v = self.wire.pop(u)
        del self.wire[v]
        return u, v

    def remove_crossing(self, index):
        """Delete a crossing, letting both strands pass straight through."""
        ports = self.crossings[index]
        self.crossings[index] = None
        self.join(ports[0], ports[2])
        self.join(ports[1], ports[3])

    def to_diagram(self, name=""):
        crossings = [x for x in self.crossings if x is not None]
        terminal = set()
        for x in crossings:
            terminal.update(x)
        terminal.update(self.boundary)
        label = {}
        seen = set()
        nxt = 1

        def follow(p):
            q = self.wire[p]
            while q not in terminal:
                seen.add(q)
                r = self.through[q]
                seen.add(r)
                q = self.wire[r]
            return q

        order = [p for x in crossings for p in x] + list(self.boundary)
        for p in order:
            if p in label:
                continue
            q = follow(p)
            label[p] = label[q] = nxt
            nxt += 1
        loops = self.loops
        for p in self.through:
            if p in seen:
                continue
            q = p
            while True:
                seen.add(q)
                r = self.through[q]
                seen.add(r)
                q = self.wire[r]
                if q == p:
                    break
            loops += 1
        return Diagram([tuple(label[p] for p in x) for x in crossings], loops,
                       [label[p] for p in self.boundary], name, check=False)


def splice_tangle(d, dart_a, dart_b, t, name=""):
    """Replace two parallel strands of ``d`` by the 2-tangle ``t``.

    The strands are the edges of ``dart_a`` and ``dart_b``, which must have a
    common face on their left.  In the local picture ``dart_a`` runs down the
    left side and ``dart_b`` up the right side, so the untouched pair is the
    tangle with strands 1-4 and 2-3.
    """
    if len(t.boundary) != 4:
        raise DiagramError("only 2-tangles can be spliced in")
    pg = PortGraph()
    pg.add(d, "d")
    pg.boundary = [("d", "b", i) for i in range(1, len(d.boundary) + 1)]
    a_src, a_tgt = pg.cut("d", dart_a)
    b_src, b_tgt = pg.cut("d", dart_b)
    pg.add(t, "t")
    for i in range(1, 5):
        pg.join(("t", "b", i), ("t", "o", i))
    pg.connect(("t", "o", 4), a_src)
    pg.connect(("t", "o", 1), a_tgt)
    pg.connect(("t", "o", 2), b_src)
    pg.connect(("t", "o", 3), b_tgt)
    return pg.to_diagram(name or d.name)


# -- text format -----------------------------------------------------------

def parse_many(text):
    """Parse every record of a diagram file."""
    records = []
    cur = None

    def finish():
        if cur is not None:
            records.append(_finish_record(cur))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace("/", " / ").split()
        # allow one-line records separated by '/'
        chunks, chunk = [], []
        for tok in parts:
            if tok == "/":
                if chunk:
                    chunks.append(chunk)
                chunk = []
            else:
                chunk.append(tok)
        if chunk:
            chunks.append(chunk)
        for toks in chunks:
            head = toks[0]
            if head in ("link", "tangle"):
                finish()
                cur = {"kind": head, "line": lineno, "X": [], "O": [], "B": []}
                if head == "link":
                    cur["name"] = toks[1] if len(toks) > 1 else ""
                    cur["size"] = 0
                else:
                    if len(toks) < 3:
                        raise DiagramParseError("tangle header needs a name and 2n", lineno, 1)
                    cur["name"] = toks[1]
                    cur["size"] = _int(toks[2], lineno, raw, toks[2])
                continue
            if cur is None:
                raise DiagramParseError("record must start with 'link' or 'tangle'", lineno, 1)
            nums = [_int(t, lineno, raw, t) for t in toks[1:]]
            if head == "X":
                if len(nums) != 4:
                    raise DiagramParseError("crossing needs four edge labels", lineno, 1)
                cur["X"].append((nums, lineno))
            elif head == "O":
                if len(nums) != 1:
                    raise DiagramParseError("loop needs one edge label", lineno, 1)
                cur["O"].append((nums[0], lineno))
            elif head == "B":
                if len(nums) != 2:
                    raise DiagramParseError("boundary entry needs an index and an edge", lineno, 1)
                cur["B"].append((nums, lineno))
            else:
                raise DiagramParseError(f"unknown record type {head!r}", lineno,
                                        raw.find(head) + 1)
    finish()
    return records


def _int(tok, lineno, raw, orig):
    try:
        v = int(tok)
    except ValueError:
        raise DiagramParseError(f"expected an integer, got {tok!r}", lineno,
                                raw.find(orig) + 1) from None
    return v


def _finish_record(rec):
    size = rec["size"]
    if rec["kind"] == "tangle" and (size < 2 or size % 2):
        raise DiagramParseError("ill-formed boundary", rec["line"])
    bnd = [None] * size
    for (i, e), lineno in rec["B"]:
        if not 1 <= i <= size or bnd[i - 1] is not None:
            raise DiagramParseError("ill-formed boundary", lineno)
        bnd[i - 1] = e
    if rec["kind"] == "link" and rec["B"]:
        raise DiagramParseError("ill-formed boundary", rec["B"][0][1])
    if any(b is None for b in bnd):
        raise DiagramParseError("ill-formed boundary", rec["line"])
    counts = {}
    for nums, lineno in rec["X"]:
        for e in nums:
            counts.setdefault(e, []).append(lineno)
    for e in bnd:
        counts.setdefault(e, []).append(rec["line"])
    loop_labels = set()
    for e, lineno in rec["O"]:
        if e in counts or e in loop_labels:
            raise DiagramParseError(f"ill-formed edge {e}", lineno)
        loop_labels.add(e)
    for e, where in sorted(counts.items()):
        if len(where) != 2:
            raise DiagramParseError(f"ill-formed edge {e}", where[-1])
    d = Diagram([x for x, _ in rec["X"]], len(rec["O"]), bnd, rec["name"], check=False)
    if not euler_ok(d):
        raise DiagramParseError("diagram is not planar (Euler characteristic check failed)",
                                rec["line"])
    return d


def parse(text):
    """Parse a single diagram record."""
    recs = parse_many(text)
    if len(recs) != 1:
        raise DiagramParseError(f"expected one record, found {len(recs)}")
    return recs[0]


def emit(d, name=None):
    name = d.name if name is None else name
    name = name or "unnamed"
    lines = []
    if d.boundary:
        lines.append(f"tangle {name} {len(d.boundary)}")
    else:
        lines.append(f"link {name}")
    for x in d.crossings:
        lines.append("X " + " ".join(map(str, x)))
    top = max(d.ends(), default=0)
    for k in range(d.loops):
        lines.append(f"O {top + k + 1}")
    for i, e in enumerate(d.boundary, 1):
        lines.append(f"B {i} {e}")
    return "\n".join(lines) + "\n"


# -- structure extraction ----------------------------------------------------

class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != x:
            gp = self.parent.setdefault(p, p)
            self.parent[x] = gp
            x, p = p, gp
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def arcs(d):
    """Partition of edge labels into arcs (maximal overpasses).

    Returns a list of sorted edge-label tuples, then one ``('loop', k)`` entry
    per crossing-free loop.
    """
    uf = _UF()
    for e in d.ends():
        uf.find(e)
    for x in d.crossings:
        uf.union(x[1], x[3])
    groups = {}
    for e in d.ends():
        groups.setdefault(uf.find(e), []).append(e)
    out = sorted(tuple(sorted(g)) for g in groups.values())
    out += [("loop", k) for k in range(d.loops)]
    return out


def components(d):
    """Strand components: ``(closed_count, open_strands)``.

    ``open_strands`` lists the boundary endpoint pairs joined by each strand
    of a tangle.  Crossing-free loops count as closed components.
    """
    seen = set()
    open_strands = []
    closed = d.loops
    for i in range(1, len(d.boundary) + 1):
        if ("b", i) in seen:
            continue
        p = ("b", i)
        seen.add(p)
        while True:
            q = d.other_end(p)
            seen.add(q)
            if q[0] == "b":
                open_strands.append((i, q[1]))
                break
            p = ("x", q[1], (q[2] + 2) % 4)
            seen.add(p)
    for c in range(len(d.crossings)):
        for s in range(4):
            if ("x", c, s) in seen:
                continue
            closed += 1
            p = ("x", c, s)
            while p not in seen:
                seen.add(p)
                q = d.other_end(p)
                seen.add(q)
                p = ("x", q[1], (q[2] + 2) % 4)
    return closed, sorted(open_strands)


def vertex_components(d):
    """Connected pieces of the underlying 4-valent graph.

    Returns a list of sets of crossing indices; the piece attached to the
    boundary (if any) comes first and also contains the marker ``'B'``.
    """
    uf = _UF()
    for c in range(len(d.crossings)):
        uf.find(c)
    if d.boundary:
        uf.find(-1)
    for u, v in d.ends().values():
        uf.union(u[1] if u[0] == "x" else -1, v[1] if v[0] == "x" else -1)
    groups = {}
    for v in list(uf.parent):
        groups.setdefault(uf.find(v), set()).add(v)
    out = []
    for root in sorted(groups):
        g = groups[root]
        if -1 in g:
            g.discard(-1)
            g.add("B")
            out.insert(0, g)
        else:
            out.append(g)
    return out


def faces(d):
    """Face walks, each a tuple of darts with the face on their left.

    Crossing-free loops contribute two one-dart faces ``(('l', k),)`` each.
    """
    seen = set()
    out = []
    mate = d.mate()
    m = len(d.boundary)
    for p in d.ports():
        if p in seen:
            continue
        walk = []
        q = p
        while q not in seen:
            seen.add(q)
            walk.append(q)
            r = mate[q]
            q = ("x", r[1], (r[2] - 1) % 4) if r[0] == "x" else ("b", r[1] % m + 1)
        out.append(tuple(walk))
    for k in range(d.loops):
        out.append((("l", k),))
        out.append((("l", k),))
    return out


def euler_ok(d):
    """V - E + F = 2 on every connected piece (loops excluded)."""
    walks = [w for w in faces(d) if w[0][0] != "l"]
    comp_of = {}
    for i, g in enumerate(vertex_components(d)):
        for v in g:
            comp_of[v] = i
    V, E, F = {}, {}, {}
    for v, i in comp_of.items():
        V[i] = V.get(i, 0) + 1
    for e, (u, _) in d.ends().items():
        i = comp_of[u[1] if u[0] == "x" else "B"]
        E[i] = E.get(i, 0) + 1
    for w in walks:
        u = w[0]
        i = comp_of[u[1] if u[0] == "x" else "B"]
        F[i] = F.get(i, 0) + 1
    for i in V:
        if V[i] - E.get(i, 0) + F.get(i, 0) != 2:
            return False
    return True


# -- canonical codes -----------------------------------------------------------

def _traverse(crossings, ends, start, bnd_len, bound=None):
    """Relabeling-invariant code of one connected piece.

    ``start`` is ``('B',)`` for the boundary piece or ``(c, s)`` for a
    closed piece entered at slot ``s`` of crossing ``c``.  With ``bound`` set,
    returns None as soon as the code is known to exceed it.
    """
    tight = bound is not None
    vid = {}
    entry = {}
    order = []
    if start[0] == "B":
        vid["B"] = 0
        order.append("B")
    else:
        vid[start[0]] = 0
        entry[start[0]] = start[1]
        order.append(start[0])
    elabel = {}
    code = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        if v == "B":
            slots = [("b", k) for k in range(1, bnd_len + 1)]
            code.append(-1)
        else:
            j = entry[v]
            slots = [("x", v, (j + t) % 4) for t in range(4)]
            code.append(j % 2)
        for port in slots:
            e = crossings[port[1]][port[2]] if port[0] == "x" else None
            if e is None:
                e = ends["__bnd__"][port[1] - 1]
            if e not in elabel:
                elabel[e] = len(elabel) + 1
                u, w = ends[e]
                q = w if u == port else u
                if q[0] == "x":
                    if q[1] not in vid:
                        vid[q[1]] = len(order)
                        entry[q[1]] = q[2]
                        order.append(q[1])
            code.append(elabel[e])
        if tight:
            n = len(code)
            head = tuple(code)
            if head > bound[:n]:
                return None
            if head < bound[:n]:
                tight = False
    return tuple(code)


def canonical_code(d, reflect=True):
    """Byte string equal for diagrams that agree up to edge relabeling.

    Closed pieces are minimized over every starting crossing and slot and,
    when ``reflect`` is set, over the planar reflection composed with a
    crossing change (a rotation of space, so the link type is kept).
    Tangle pieces are read from boundary endpoint 1 and are never reflected.
    """
    ends = dict(d.ends())
    ends["__bnd__"] = d.boundary
    comps = vertex_components(d)
    variants = [(d.crossings, ends)]
    if reflect:
        rc = tuple((b, a, d_, c) for a, b, c, d_ in d.crossings)
        rends = {}
        for ci, x in enumerate(rc):
            for s, e in enumerate(x):
                rends.setdefault(e, []).append(("x", ci, s))
        for i, e in enumerate(d.boundary, 1):
            rends.setdefault(e, []).append(("b", i))
        rends = {e: tuple(v) for e, v in rends.items()}
        rends["__bnd__"] = d.boundary
        variants.append((rc, rends))
    bcode = ()
    closed = []
    for g in comps:
        if "B" in g:
            bcode = _traverse(d.crossings, ends, ("B",), len(d.boundary))
            continue
        best = None
        for cr, en in variants:
            for c in g:
                # the code opens with the parity of the entry slot
                for s in (0, 2):
                    t = _traverse(cr, en, (c, s), 0, best)
                    if t is not None and (best is None or t < best):
                        best = t
        closed.append(best)
    closed.sort()
    return repr((len(d.boundary), bcode, tuple(closed), d.loops)).encode()

