"""Command-line front end: ``knotmoves <subcommand> ...``.

Exit status is 0 on success, 2 when a search is exhausted and 1 on input
errors.  Every subcommand accepts ``--json``.
"""

import argparse
import json
import os
import random
import sys

from . import library
from .algebraic import generate_algebraic
from .coloring import boundary_image, coloring_space
from .diagram import DiagramError, DiagramParseError, canonical_code, emit, parse_many
from .moves import MoveSpec, apply_move_traced, enumerate_sites, parse_kind, resolve_site
from .rational import mq_to_slope, parse_conway, slope
from .search import (Budget, Exhausted, MoveFamily, basic_2_tangles, census_boundary_subspaces,
                     classify_tangle, format_step, reduce)
from .symplectic import enumerate_lagrangians, is_lagrangian, lagrangian_count, quotient_reduce

NAMED = {
    "trefoil": library.trefoil,
    "3_1": library.trefoil,
    "figure-eight": library.figure_eight,
    "4_1": library.figure_eight,
    "borromean": library.borromean,
    "8_18": library.knot_8_18,
    "hopf": library.hopf,
    "kink": library.kink_unknot,
}


class InputError(Exception):
    pass


def load(source, name=None):
    """A diagram from a file, ``-`` (stdin), or a built-in name such as ``trefoil``."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"{source}: {e.strerror}") from None
    elif source in NAMED:
        return NAMED[source]()
    elif source.startswith("U_") and source[2:].isdigit():
        return library.trivial_link(int(source[2:]))
    else:
        raise InputError(f"{source}: no such file or built-in diagram")
    try:
        recs = parse_many(text)
    except DiagramParseError as e:
        raise InputError(f"{source}: {e}") from None
    if not recs:
        raise InputError(f"{source}: no diagram records")
    if name is None:
        return recs[0]
    for r in recs:
        if r.name == name:
            return r
    raise InputError(f"{source}: no record named {name!r}")


def _budget(a):
    return Budget(max_nodes=a.nodes, max_depth=a.depth, max_crossings=a.max_crossings,
                  wall_clock=a.time, r3_sweeps=a.r3_sweeps)


def _factors(fs):
    return " x ".join(f"Z{f}" for f in fs) if fs else "0"


def cmd_color(a, out):
    d = load(a.input, a.name)
    sp = coloring_space(d, a.k)
    rep = {"k": a.k, "count": sp.count, "invariant_factors": list(sp.invariant_factors)}
    if a.json:
        return rep
    label = "tri" if a.k == 3 else f"col_{a.k}"
    out(f"{label} = {sp.count}")
    out(f"group = {_factors(sp.invariant_factors)}")
    return rep


def cmd_boundary(a, out):
    t = load(a.input, a.name)
    if not t.boundary:
        raise InputError("boundary needs a tangle")
    im = boundary_image(t, a.p)
    q = quotient_reduce(im)
    rep = {"p": a.p, "image": [list(v) for v in im.vectors], "dim": im.dim,
           "quotient": [list(v) for v in q.vectors], "lagrangian": is_lagrangian(q)}
    if not a.json:
        out(f"image dim = {im.dim}")
        for v in im.vectors:
            out("  " + " ".join(map(str, v)))
        out(f"quotient = {[list(v) for v in q.vectors]}")
        out(f"lagrangian = {str(rep['lagrangian']).lower()}")
    return rep


def cmd_lagrangians(a, out):
    if a.count:
        c = lagrangian_count(a.p, a.n)
        if not a.json:
            out(str(c))
        return {"p": a.p, "n": a.n, "count": c}
    subs = enumerate_lagrangians(a.p, a.n)
    rep = {"p": a.p, "n": a.n, "count": len(subs), "subspaces": [[list(v) for v in s.vectors]
                                                                 for s in subs]}
    if not a.json:
        out(str(len(subs)))
        for s in subs:
            out("  " + " | ".join(" ".join(map(str, v)) for v in s.vectors))
    return rep


def cmd_slope(a, out):
    if a.mq:
        m, q = (int(x) for x in a.mq.split(","))
        s = mq_to_slope(m, q)
    else:
        if not a.conway:
            raise InputError("give a Conway vector or --mq")
        s = slope(parse_conway(a.conway))
    if not a.json:
        out(str(s))
    return {"num": s.num, "den": s.den}


def cmd_move(a, out):
    d = load(a.input, a.name)
    if a.list_sites:
        sites = enumerate_sites(d)
        if not a.json:
            for s in sites:
                out(str(s))
        return {"sites": [str(s) for s in sites]}
    if not a.kind or not a.site:
        raise InputError("move needs --kind and --site (or --list-sites)")
    kname, _, params = a.kind.partition(":")
    try:
        kind = parse_kind(kname, params)
        f, ea, eb = a.site.split(",")
        site = resolve_site(d, None if f == "*" else int(f), int(ea), int(eb))
    except (ValueError, DiagramError) as e:
        raise InputError(str(e)) from None
    e, inv = apply_move_traced(d, MoveSpec(kind, site))
    text = emit(e, a.out_name or (d.name + "_moved" if d.name else "moved"))
    if not a.json:
        out(text.rstrip("\n"))
        if inv is not None:
            out(f"# inverse: {format_step(inv)}")
    return {"diagram": text, "crossings": e.n_crossings,
            "inverse": format_step(inv) if inv is not None else None}


def _search_report(r, a, out):
    if isinstance(r, Exhausted):
        rep = r.report()
        if not a.json:
            out(f"exhausted ({r.reason}) after {r.nodes} nodes, depth {r.depth}, "
                f"frontier {len(r.frontier)}")
        return rep, 2
    rep = r.report()
    if not a.json:
        for line in rep["path"]:
            out(line)
        out(r.classification)
    return rep, 0


def cmd_reduce(a, out):
    d = load(a.input, a.name)
    fam = MoveFamily.parse(a.family)
    r = reduce(d, fam, _budget(a), strategy=a.strategy, workers=a.workers)
    return _search_report(r, a, out)


def cmd_classify(a, out):
    t = load(a.input, a.name)
    if len(t.boundary) != 4 and not a.basis:
        raise InputError("the default basis is for 2-tangles; give --basis")
    basis = basic_2_tangles()
    if a.basis:
        try:
            with open(a.basis, encoding="utf-8") as fh:
                basis = parse_many(fh.read())
        except (OSError, DiagramParseError) as e:
            raise InputError(str(e)) from None
    fam = MoveFamily.parse(a.family)
    r = classify_tangle(t, fam, basis, _budget(a), strategy=a.strategy, workers=a.workers)
    if isinstance(r, Exhausted):
        return _search_report(r, a, out)
    idx, loops, path = r
    rep, code = _search_report(path, a, out)
    rep["basis_index"] = idx
    rep["loops"] = loops
    return rep, code


def cmd_census(a, out):
    r = census_boundary_subspaces(a.n, a.p, a.max_crossings)
    rep = {"n": a.n, "p": a.p, "max_crossings": a.max_crossings, "found": r.found,
           "total": r.total, "coverage": r.coverage}
    if not a.json:
        out(f"{r.found} of {r.total} (coverage {r.coverage:.3f})")
    return rep


def cmd_generate(a, out):
    ts = generate_algebraic(a.n, a.max_crossings, k=a.k, max_loops=a.max_loops,
                            reduced=a.reduced)
    texts = [emit(t, f"alg{i}") for i, t in enumerate(ts)]
    if not a.json:
        out("".join(texts).rstrip("\n"))
    return {"count": len(ts), "records": texts}


def cmd_validate(a, out):
    try:
        with open(a.input, encoding="utf-8") as fh:
            recs = parse_many(fh.read())
    except OSError as e:
        raise InputError(f"{a.input}: {e.strerror}") from None
    except DiagramParseError as e:
        raise InputError(f"{a.input}: {e}") from None
    if not a.json:
        out(f"ok: {len(recs)} records")
        for r in recs:
            kind = f"tangle {len(r.boundary)}" if r.boundary else "link"
            out(f"  {r.name} ({kind}, {r.n_crossings} crossings, {r.loops} loops)")
    return {"records": [{"name": r.name, "crossings": r.n_crossings, "loops": r.loops,
                         "boundary": len(r.boundary),
                         "code": canonical_code(r).decode()} for r in recs]}


def build_parser():
    p = argparse.ArgumentParser(prog="knotmoves",
                                description="Fox colorings, tangles and move-equivalence search.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int,
                        default=int(os.environ.get("KNOTMOVES_WORKERS", "1")))
    sub = p.add_subparsers(dest="command", required=True)

    def diagram_cmd(name, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("input", help="diagram file, '-' for stdin, or a built-in name")
        sp.add_argument("--name", help="record to use when the file holds several")
        return sp

    sp = diagram_cmd("color", "coloring count and group")
    sp.add_argument("--k", type=int, default=3)
    sp.set_defaults(func=cmd_color)

    sp = diagram_cmd("boundary", "boundary coloring image of a tangle")
    sp.add_argument("--p", type=int, default=3)
    sp.set_defaults(func=cmd_boundary)

    sp = sub.add_parser("lagrangians", parents=[common], help="count or list Lagrangians")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", action="store_true", help="closed-form count only")
    sp.set_defaults(func=cmd_lagrangians)

    sp = sub.add_parser("slope", parents=[common], help="slope of a rational tangle")
    sp.add_argument("conway", nargs="?", help="comma-separated Conway vector, e.g. 2,2")
    sp.add_argument("--mq", help="slope of the (m,q)-move, e.g. 2,3")
    sp.set_defaults(func=cmd_slope)

    sp = diagram_cmd("move", "apply an n-, pq- or rational move")
    sp.add_argument("--kind", help="n:3, pq:2,2 or rational:2,1,1,2")
    sp.add_argument("--site", help="face,edge_a,edge_b (face '*' for split pieces)")
    sp.add_argument("--list-sites", action="store_true")
    sp.add_argument("--out-name")
    sp.set_defaults(func=cmd_move)

    for name, func, help in (("reduce", cmd_reduce, "search for a trivial link"),
                             ("classify", cmd_classify, "reduce a tangle to a basis")):
        sp = diagram_cmd(name, help)
        sp.add_argument("--family", default="n-move:3",
                        help="n-move:N, pq-move:P,Q or rational:P/Q")
        sp.add_argument("--depth", type=int, default=6)
        sp.add_argument("--nodes", type=int, default=200_000)
        sp.add_argument("--max-crossings", type=int)
        sp.add_argument("--time", type=float, help="wall-clock cap in seconds")
        sp.add_argument("--r3-sweeps", type=int, default=1)
        sp.add_argument("--strategy", choices=("bfs", "best"), default="bfs")
        if name == "classify":
            sp.add_argument("--basis", help="file of basis tangles")
        sp.set_defaults(func=func)

    sp = sub.add_parser("census", parents=[common], help="realized Lagrangians of tangles")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--max-crossings", type=int, default=6)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("generate", parents=[common], help="algebraic tangles")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--max-crossings", type=int, default=2)
    sp.add_argument("--k", type=int, help="right factors have at most k crossings")
    sp.add_argument("--max-loops", type=int, default=1)
    sp.add_argument("--reduced", action="store_true", help="deduplicate simplified forms")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("validate", parents=[common], help="check a diagram file")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    a = parser.parse_args(argv)
    random.seed(a.seed)

    def out(line):
        print(line, file=stdout)

    try:
        r = a.func(a, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, DiagramError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    rep, code = r if isinstance(r, tuple) else (r, 0)
    if a.json:
        out(json.dumps(rep, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
