"""Bounded search for move-equivalence reductions.

States are diagrams normalized by R1-/R2- simplification (plus optional R3
passes that enable further simplification) and keyed by canonical code.
Every successful search returns a path that replays exactly.
"""

import heapq
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .algebraic import compose, crossing_tangle, infinity_tangle, rotate, zero_tangle
from .coloring import col_count
from .diagram import Diagram, canonical_code
from .moves import (MoveSpec, NMove, PQMove, RationalMove, apply_move, enumerate_sites,
                    format_move, parse_move)
from .rational import RationalTangleSpec, parse_slope
from .reidemeister import (ReidemeisterMove, apply_reidemeister, r3_sites, simplify,
                           simplify_traced)
from .symplectic import lagrangian_count, tangle_lagrangian
from .zk import is_prime

__all__ = ["MoveFamily", "Budget", "ReductionPath", "Exhausted", "normalize", "reduce",
           "classify_tangle", "basic_2_tangles", "census_boundary_subspaces", "CensusResult",
           "format_step", "parse_step", "replay"]


@dataclass(frozen=True)
class MoveFamily:
    """A finite set of move kinds, closed under inverses."""

    name: str
    kinds: tuple

    def __post_init__(self):
        kinds = tuple(self.kinds)
        for k in list(kinds):
            if k.inverse() not in kinds:
                kinds = kinds + (k.inverse(),)
        object.__setattr__(self, "kinds", kinds)

    @classmethod
    def n_move(cls, n):
        return cls(f"n-move:{abs(n)}", (NMove(abs(n)), NMove(-abs(n))))

    @classmethod
    def pq_move(cls, p, q, symmetric=True):
        """(p,q) and (-p,-q), plus (q,p) and (-q,-p) when ``symmetric``."""
        kinds = [PQMove(p, q), PQMove(-p, -q)]
        if symmetric and (q, p) != (p, q):
            kinds += [PQMove(q, p), PQMove(-q, -p)]
        return cls(f"pq-move:{p},{q}", tuple(kinds))

    @classmethod
    def rational(cls, num, den):
        k = RationalMove(RationalTangleSpec.from_slope((num, den)))
        return cls(f"rational:{num}/{den}", (k, k.inverse()))

    @classmethod
    def parse(cls, text):
        """``n-move:3``, ``pq-move:2,3`` or ``rational:13/5``."""
        kind, _, arg = text.partition(":")
        if kind in ("n-move", "n"):
            return cls.n_move(int(arg))
        if kind in ("pq-move", "pq"):
            p, q = (int(x) for x in arg.split(","))
            return cls.pq_move(p, q)
        if kind in ("rational", "r"):
            s = parse_slope(arg)
            return cls.rational(s.num, s.den)
        raise ValueError(f"unknown move family {text!r}")

    @property
    def modulus(self):
        """The coloring modulus every move of the family preserves."""
        m = 0
        for k in self.kinds:
            m = gcd(m, k.modulus)
        return m


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 200_000
    max_depth: int = 6
    max_crossings: int = None     # default: start + 6
    wall_clock: float = None      # seconds
    r3_sweeps: int = 1

    def __post_init__(self):
        for name in ("max_nodes", "max_depth"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_crossings is not None and self.max_crossings <= 0:
            raise ValueError("max_crossings must be positive")
        if self.wall_clock is not None and self.wall_clock <= 0:
            raise ValueError("wall_clock must be positive")


# -- steps and replay --------------------------------------------------------

def format_step(s):
    if isinstance(s, MoveSpec):
        return format_move(s)
    return f"R {s.kind} {s.site!r}"


def parse_step(line, d):
    import ast
    line = line.strip()
    if line.startswith("M "):
        return parse_move(line, d)
    if line.startswith("R "):
        _, kind, rest = line.split(" ", 2)
        return ReidemeisterMove(kind, ast.literal_eval(rest))
    raise ValueError(f"bad step {line!r}")


def apply_step(d, s):
    if isinstance(s, MoveSpec):
        return apply_move(d, s)
    return apply_reidemeister(d, s)


def replay(d, steps):
    for s in steps:
        d = apply_step(d, s)
    return d


@dataclass
class ReductionPath:
    start_code: bytes
    steps: list
    end: Diagram
    classification: str
    family: str = ""
    nodes: int = 0
    elapsed: float = 0.0
    basis_index: int = None
    loops: int = 0

    @property
    def n_moves(self):
        return sum(1 for s in self.steps if isinstance(s, MoveSpec))

    def replays(self, start):
        if canonical_code(start) != self.start_code:
            return False
        return canonical_code(replay(start, self.steps)) == canonical_code(self.end)

    def report(self):
        return {
            "outcome": "reduced",
            "start": self.start_code.decode(),
            "family": self.family,
            "classification": self.classification,
            "moves": self.n_moves,
            "path": [format_step(s) for s in self.steps],
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class Exhausted:
    """Search gave up; this is never a proof that no reduction exists."""

    reason: str
    nodes: int
    depth: int
    visited: int
    frontier: list = field(repr=False, default_factory=list)
    frontier_crossings: dict = field(default_factory=dict)
    start_code: bytes = b""
    family: str = ""
    elapsed: float = 0.0
    state: dict = field(repr=False, default=None)

    def report(self):
        return {
            "outcome": "exhausted",
            "reason": self.reason,
            "start": self.start_code.decode(),
            "family": self.family,
            "nodes": self.nodes,
            "depth": self.depth,
            "visited": self.visited,
            "frontier_size": len(self.frontier),
            "frontier_crossings": {str(k): v for k, v in sorted(self.frontier_crossings.items())},
            "elapsed": round(self.elapsed, 3),
        }


def to_json(result, budget=None):
    rep = result.report()
    if budget is not None:
        rep["budget"] = {"max_nodes": budget.max_nodes, "max_depth": budget.max_depth,
                         "max_crossings": budget.max_crossings,
                         "wall_clock": budget.wall_clock, "r3_sweeps": budget.r3_sweeps}
    return json.dumps(rep, sort_keys=True)


# -- normalization -----------------------------------------------------------

def normalize(d, r3_sweeps=1):
    """Simplify, then use up to ``r3_sweeps`` R3 moves that unlock more
    simplification.  Returns (diagram, steps)."""
    d, steps = simplify_traced(d)
    for _ in range(r3_sweeps):
        best = None
        for s in r3_sites(d):
            m = ReidemeisterMove("R3", s)
            e, more = simplify_traced(apply_reidemeister(d, m))
            if e.n_crossings < d.n_crossings:
                best = (e, [m] + more)
                break
        if best is None:
            break
        d = best[0]
        steps += best[1]
    return d, steps


def _expand(args):
    d, kinds, cap, r3 = args
    out = []
    for site in enumerate_sites(d):
        for k in kinds:
            m = MoveSpec(k, site)
            child = apply_move(d, m, check=False)
            norm, steps = normalize(child, r3)
            if cap is not None and norm.n_crossings > cap:
                out.append(None)
                continue
            out.append((canonical_code(norm), norm, [m] + steps))
    return out


def _search(d, fam, budget, goal, strategy, workers, prune=None):
    t0 = time.monotonic()
    cap = budget.max_crossings
    if cap is None:
        cap = d.n_crossings + 6
    start_code = canonical_code(d)
    norm, steps = normalize(d, budget.r3_sweeps)
    key = canonical_code(norm)
    # code -> (diagram, parent code, steps from parent, depth)
    seen = {key: (norm, None, steps, 0)}
    nodes = 1

    def path_to(k):
        out = []
        while k is not None:
            diag, parent, st, _ = seen[k]
            out = st + out
            k = parent
        return out

    hit = goal(norm)
    if hit is not None:
        return start_code, path_to(key), norm, hit, nodes, t0
    kinds = fam.kinds
    workers = max(1, int(workers or 1))
    pool = ProcessPoolExecutor(workers) if workers > 1 and strategy == "bfs" else None
    try:
        if strategy == "bfs":
            frontier = [key]
            depth = 0
            while frontier:
                if depth >= budget.max_depth:
                    return _exhausted("depth", nodes, depth, seen, frontier, start_code,
                                      fam, t0)
                depth += 1
                frontier.sort()
                batch = [(seen[k][0], kinds, cap, budget.r3_sweeps) for k in frontier]
                results = pool.map(_expand, batch, chunksize=4) if pool else map(_expand, batch)
                nxt = []
                for parent, children in zip(frontier, results):
                    for c in children:
                        nodes += 1
                        if nodes > budget.max_nodes:
                            return _exhausted("nodes", nodes, depth, seen, frontier + nxt,
                                              start_code, fam, t0)
                        if budget.wall_clock and time.monotonic() - t0 > budget.wall_clock:
                            return _exhausted("time", nodes, depth, seen, frontier + nxt,
                                              start_code, fam, t0)
                        if c is None:
                            continue
                        ck, cd, st = c
                        if ck in seen or (prune and prune(cd)):
                            continue
                        seen[ck] = (cd, parent, st, depth)
                        hit = goal(cd)
                        if hit is not None:
                            return start_code, path_to(ck), cd, hit, nodes, t0
                        nxt.append(ck)
                frontier = nxt
            return _exhausted("closed", nodes, depth, seen, [], start_code, fam, t0)
        # best first: fewest crossings, then shallowest, then code
        heap = [(norm.n_crossings, 0, key)]
        while heap:
            _, depth, k = heapq.heappop(heap)
            if depth >= budget.max_depth:
                continue
            for c in _expand((seen[k][0], kinds, cap, budget.r3_sweeps)):
                nodes += 1
                if nodes > budget.max_nodes:
                    return _exhausted("nodes", nodes, depth, seen, [x[2] for x in heap],
                                      start_code, fam, t0)
                if budget.wall_clock and time.monotonic() - t0 > budget.wall_clock:
                    return _exhausted("time", nodes, depth, seen, [x[2] for x in heap],
                                      start_code, fam, t0)
                if c is None:
                    continue
                ck, cd, st = c
                if ck in seen or (prune and prune(cd)):
                    continue
                seen[ck] = (cd, k, st, depth + 1)
                hit = goal(cd)
                if hit is not None:
                    return start_code, path_to(ck), cd, hit, nodes, t0
                heapq.heappush(heap, (cd.n_crossings, depth + 1, ck))
        return _exhausted("closed", nodes, budget.max_depth, seen, [], start_code, fam, t0)
    finally:
        if pool:
            pool.shutdown()


def _exhausted(reason, nodes, depth, seen, frontier, start_code, fam, t0):
    fc = {}
    for k in frontier:
        c = seen[k][0].n_crossings
        fc[c] = fc.get(c, 0) + 1
    return Exhausted(reason, nodes, depth, len(seen), [seen[k][0] for k in frontier], fc,
                     start_code, fam.name, time.monotonic() - t0,
                     state={"frontier": list(frontier)})


def reduce(d, fam, budget=None, strategy="bfs", workers=None, prune=True):
    """Search for a sequence of moves of ``fam`` taking ``d`` to a trivial link.

    The family preserves Fox colorings modulo ``fam.modulus``, so the only
    possible target is U_c with modulus**c = col(d); when no such c exists
    the search stops immediately.  ``prune=False`` skips that check and
    ``prune="verify"`` also recounts colorings at every state.
    """
    budget = budget or Budget()
    if workers is None:
        workers = int(os.environ.get("KNOTMOVES_WORKERS", "1"))
    m = fam.modulus
    target = None
    if m >= 2 and prune:
        col = col_count(d, m)
        c, x = 0, 1
        while x < col:
            x *= m
            c += 1
        if x != col:
            return Exhausted("no trivial link has the coloring count of the start", 0, 0, 0,
                             start_code=canonical_code(d), family=fam.name)
        target = c
        # every state keeps this count; the check guards against encoding bugs
        check = (lambda e: col_count(e, m) != col) if prune == "verify" else None
    else:
        check = None

    def goal(e):
        if e.n_crossings == 0 and not e.boundary:
            return e.loops
        return None

    r = _search(d, fam, budget, goal, strategy, workers, check)
    if isinstance(r, Exhausted):
        return r
    start_code, steps, end, loops, nodes, t0 = r
    if target is not None:
        assert loops == target, "trivial target contradicts the coloring count"
    return ReductionPath(start_code, steps, end, f"U_{loops}", fam.name, nodes,
                         time.monotonic() - t0, loops=loops)


def basic_2_tangles():
    """0, infinity, +1 and -1, in that order."""
    return [zero_tangle(), infinity_tangle(), crossing_tangle(1), crossing_tangle(-1)]


def _loopless_code(t):
    return canonical_code(Diagram(t.crossings, 0, t.boundary, check=False))


def classify_tangle(t, fam, basis=None, budget=None, strategy="bfs", workers=None):
    """Reduce a tangle by moves of ``fam`` to one of ``basis`` (plus loops).

    Returns ``(basis index, loop count, ReductionPath)`` or ``Exhausted``.
    For a prime family modulus only basis tangles with the same Lagrangian
    as ``t`` are possible targets.
    """
    basis = basis or basic_2_tangles()
    budget = budget or Budget()
    if any(len(b.boundary) != len(t.boundary) for b in basis):
        raise ValueError("basis tangles must share the arity of the tangle")
    m = fam.modulus
    allowed = list(range(len(basis)))
    if is_prime(m):
        lt = tangle_lagrangian(t, m)
        allowed = [i for i in allowed if tangle_lagrangian(basis[i], m) == lt]
        if not allowed:
            return Exhausted("no basis tangle has the Lagrangian of the start", 0, 0, 0,
                             start_code=canonical_code(t), family=fam.name)
    codes = {_loopless_code(basis[i]): i for i in allowed}

    def goal(e):
        return codes.get(_loopless_code(e))

    r = _search(t, fam, budget, goal, strategy, workers)
    if isinstance(r, Exhausted):
        return r
    start_code, steps, end, idx, nodes, t0 = r
    loops = end.loops - basis[idx].loops
    path = ReductionPath(start_code, steps, end, f"basis {idx} + {loops} loops", fam.name,
                         nodes, time.monotonic() - t0, basis_index=idx, loops=loops)
    return idx, loops, path


# -- census of realized Lagrangians ---------------------------------------------

@dataclass
class CensusResult:
    n: int
    p: int
    max_crossings: int
    found: int
    total: int
    representatives: dict = field(repr=False, default_factory=dict)

    @property
    def coverage(self):
        return self.found / self.total


def census_boundary_subspaces(n, p, max_crossings=6, max_rounds=None):
    """Distinct Lagrangians realized by n-algebraic tangles.

    Since the Lagrangian of ``A * B`` depends only on those of ``A`` and
    ``B``, generation keeps one lowest-crossing tangle per Lagrangian, which
    makes the search exact for the algebraic family.
    """
    from .algebraic import one_crossing_tangles, trivial_tangles
    reps = {}

    for t in trivial_tangles(n) + (one_crossing_tangles(n) if max_crossings >= 1 else []):
        for s in range(2 * n):
            r = rotate(t, s)
            lag = tangle_lagrangian(r, p)
            if lag not in reps or r.n_crossings < reps[lag].n_crossings:
                reps[lag] = r
    rounds = 0
    total = lagrangian_count(p, n)
    while True:
        rounds += 1
        snapshot = sorted(reps.items(), key=lambda kv: kv[0].vectors)
        fresh = False
        for la, a in snapshot:
            for lb, b in snapshot:
                if a.n_crossings + b.n_crossings > max_crossings:
                    continue
                c = compose(a, b)
                c = Diagram(c.crossings, 0, c.boundary, check=False)
                lag = tangle_lagrangian(c, p)
                if lag not in reps or c.n_crossings < reps[lag].n_crossings:
                    reps[lag] = c
                    fresh = True
        if not fresh or len(reps) == total or (max_rounds and rounds >= max_rounds):
            break
    return CensusResult(n, p, max_crossings, len(reps), total, reps)
