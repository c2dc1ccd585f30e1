import json
import random

import pytest

from knotmoves import library
from knotmoves.coloring import col_count, tri
from knotmoves.diagram import canonical_code
from knotmoves.moves import MoveSpec, NMove, PQMove, apply_move, enumerate_sites
from knotmoves.randgen import random_link
from knotmoves.rational import build_tangle
from knotmoves.search import (Budget, Exhausted, MoveFamily, ReductionPath, basic_2_tangles,
                              census_boundary_subspaces, classify_tangle, format_step,
                              parse_step, reduce, replay, to_json)


def test_family_closure_and_modulus():
    f = MoveFamily.parse("n-move:3")
    assert set(f.kinds) == {NMove(3), NMove(-3)}
    assert f.modulus == 3
    g = MoveFamily.parse("pq-move:2,3")
    assert set(g.kinds) == {PQMove(2, 3), PQMove(-2, -3), PQMove(3, 2), PQMove(-3, -2)}
    assert g.modulus == 7
    assert MoveFamily.parse("rational:13/5").modulus == 13
    assert len(MoveFamily("x", (NMove(4),)).kinds) == 2
    with pytest.raises(ValueError):
        MoveFamily.parse("twist:3")


def test_budget_positive():
    with pytest.raises(ValueError):
        Budget(max_nodes=0)
    with pytest.raises(ValueError):
        Budget(wall_clock=-1)


def test_trefoil_three_moves():
    d = library.trefoil()
    r = reduce(d, MoveFamily.n_move(3), Budget(max_depth=4))
    assert isinstance(r, ReductionPath)
    assert r.classification == "U_2"
    assert r.replays(d)
    assert tri(r.end) == tri(d)
    assert r.report()["path"][-1].startswith("R ") or r.n_moves == len(r.steps)


def test_search_is_deterministic():
    d = library.figure_eight()
    fam = MoveFamily.n_move(4)
    a = reduce(d, fam, Budget(max_depth=4))
    b = reduce(d, fam, Budget(max_depth=4))
    assert a.report()["path"] == b.report()["path"]
    assert a.nodes == b.nodes


def test_strategies_agree_on_target():
    d = library.trefoil()
    for strategy in ("bfs", "best"):
        r = reduce(d, MoveFamily.n_move(4), Budget(max_depth=4), strategy=strategy)
        assert r.classification == "U_1" and r.replays(d)


def test_workers_do_not_change_result():
    d = library.figure_eight()
    fam = MoveFamily.n_move(3)
    a = reduce(d, fam, Budget(max_depth=4), workers=1)
    b = reduce(d, fam, Budget(max_depth=4), workers=2)
    assert a.report()["path"] == b.report()["path"]


def test_prune_equivalence_small():
    for d in (library.trefoil(), library.figure_eight(), library.hopf()):
        fam = MoveFamily.n_move(3)
        a = reduce(d, fam, Budget(max_depth=3))
        b = reduce(d, fam, Budget(max_depth=3), prune=False)
        c = reduce(d, fam, Budget(max_depth=3), prune="verify")
        assert a.report()["path"] == b.report()["path"] == c.report()["path"]


def test_impossible_target_stops_at_once():
    # 18 colorings mod 6 is no power of 6
    r = reduce(library.trefoil(), MoveFamily.n_move(6))
    assert isinstance(r, Exhausted)
    assert r.nodes == 0
    assert "coloring" in r.reason


def test_exhausted_has_resumable_frontier():
    d = library.center_5_braid_square()
    r = reduce(d, MoveFamily.pq_move(2, 2), Budget(max_nodes=100, max_depth=2, r3_sweeps=0),
               strategy="best")
    assert isinstance(r, Exhausted)
    assert r.reason in ("nodes", "depth", "closed")
    assert r.frontier and sum(r.frontier_crossings.values()) == len(r.frontier)
    rep = json.loads(to_json(r, Budget(max_nodes=100, max_depth=2)))
    assert rep["outcome"] == "exhausted"
    assert rep["budget"]["max_nodes"] == 100
    # resuming from a frontier state is just another search
    again = reduce(r.frontier[0], MoveFamily.pq_move(2, 2), Budget(max_nodes=50, max_depth=1))
    assert isinstance(again, (Exhausted, ReductionPath))


def test_wall_clock():
    r = reduce(library.knot_8_18(), MoveFamily.pq_move(2, 2),
               Budget(max_nodes=10 ** 6, wall_clock=0.5))
    assert isinstance(r, Exhausted) and r.reason == "time"


def test_steps_roundtrip():
    d = library.figure_eight()
    r = reduce(d, MoveFamily.n_move(4), Budget(max_depth=4))
    e = d
    for s in r.steps:
        back = parse_step(format_step(s), e)
        assert format_step(back) == format_step(s)
        e = replay(e, [back])
    assert canonical_code(e) == canonical_code(r.end)


def test_pruning_soundness():
    # parent and child keep the family's coloring count
    rng = random.Random(99)
    fams = [MoveFamily.n_move(3), MoveFamily.pq_move(2, 2), MoveFamily.pq_move(2, 3)]
    trials = 0
    while trials < 1000:
        d = random_link(rng, 8)
        sites = enumerate_sites(d)
        if not sites:
            continue
        fam = rng.choice(fams)
        e = apply_move(d, MoveSpec(rng.choice(fam.kinds), rng.choice(sites)))
        assert col_count(e, fam.modulus) == col_count(d, fam.modulus)
        trials += 1


def test_classify_basic():
    plus = basic_2_tangles()[2]
    r = classify_tangle(plus, MoveFamily.n_move(3))
    idx, loops, path = r
    assert (idx, loops, path.steps) == (2, 0, [])


def test_classify_t4():
    t = build_tangle((4,))
    idx, loops, path = classify_tangle(t, MoveFamily.n_move(3), budget=Budget(max_depth=3))
    assert idx == 2 and loops == 0
    assert path.n_moves == 1
    assert path.replays(t)


def test_classify_lagrangian_prune():
    # +1 and 0 have different Lagrangians mod 3, so a basis of only 0 is unreachable
    r = classify_tangle(basic_2_tangles()[2], MoveFamily.n_move(3), [basic_2_tangles()[0]])
    assert isinstance(r, Exhausted) and r.nodes == 0
    with pytest.raises(ValueError):
        classify_tangle(basic_2_tangles()[2], MoveFamily.n_move(3),
                        [library.trivial_link(1)])


@pytest.mark.parametrize("n, p, expected", [(2, 3, 4), (2, 5, 6), (2, 7, 8)])
def test_census_two_tangles(n, p, expected):
    r = census_boundary_subspaces(n, p, max_crossings=6)
    assert r.found == r.total == expected
    assert r.coverage == 1.0
