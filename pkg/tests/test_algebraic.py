import pytest

from knotmoves.algebraic import (GenerationBudgetExceeded, TangleExpr, close, compose,
                                 crossing_tangle, generate_2_algebraic, generate_algebraic,
                                 infinity_tangle, one_crossing_tangles, rotate, trivial_tangles,
                                 zero_tangle)
from knotmoves.coloring import boundary_image
from knotmoves.diagram import DiagramError, canonical_code, components, euler_ok
from knotmoves.symplectic import is_lagrangian, quotient_reduce


def naive_closure(n, max_crossings, max_loops):
    """Fixpoint of rotations and products, recomputing every pair each round."""
    pool = {}
    todo = trivial_tangles(n) + one_crossing_tangles(n)
    while todo:
        for t in todo:
            for s in range(2 * n):
                r = rotate(t, s)
                pool.setdefault(canonical_code(r), r)
        todo = []
        items = list(pool.values())
        for a in items:
            for b in items:
                if a.n_crossings + b.n_crossings > max_crossings:
                    continue
                c = compose(a, b)
                if c.loops <= max_loops and canonical_code(c) not in pool:
                    todo.append(c)
    return set(pool)


def test_catalan_leaves():
    assert [len(trivial_tangles(n)) for n in (1, 2, 3, 4)] == [1, 2, 5, 14]
    assert len(one_crossing_tangles(2)) == 2
    for t in one_crossing_tangles(3):
        assert euler_ok(t) and t.n_crossings == 1


def test_compose_identity_and_loops():
    x = crossing_tangle(1)
    assert canonical_code(compose(zero_tangle(), x)) == canonical_code(x)
    assert canonical_code(compose(x, zero_tangle())) == canonical_code(x)
    ii = compose(infinity_tangle(), infinity_tangle())
    assert ii.loops == 1 and ii.n_crossings == 0
    with pytest.raises(DiagramError):
        compose(zero_tangle(), trivial_tangles(3)[0])


def test_rotation_order():
    t = compose(crossing_tangle(1), rotate(crossing_tangle(1), 1))
    assert rotate(rotate(t, 3), 1) == t
    assert rotate(t, 4) == t


def test_closures():
    assert components(close(zero_tangle(), "numerator"))[0] == 2
    assert components(close(zero_tangle(), "denominator"))[0] == 1
    with pytest.raises(DiagramError):
        close(zero_tangle(), [(1, 3)])
    partial = close(trivial_tangles(3)[0], [(1, 2)])
    assert len(partial.boundary) == 4


def test_expression_tree():
    e = TangleExpr(left=TangleExpr(leaf=crossing_tangle(1)),
                   right=TangleExpr(leaf=crossing_tangle(1)), i=1, j=0)
    t = e.evaluate()
    assert t.n_crossings == 2
    assert "r^1" in repr(e)


@pytest.mark.parametrize("max_loops", [0, 1])
def test_generation_matches_naive_closure(max_loops):
    got = {canonical_code(t) for t in generate_2_algebraic(2, max_loops=max_loops)}
    assert got == naive_closure(2, 2, max_loops)


def test_generation_levels():
    # frozen from the naive closure above
    by_level = {}
    for t in generate_2_algebraic(2, max_loops=1):
        by_level[t.n_crossings] = by_level.get(t.n_crossings, 0) + 1
    assert by_level == {0: 4, 1: 44, 2: 548}


def test_reduced_generation():
    red = generate_2_algebraic(3, max_loops=0, reduced=True)
    counts = {}
    for t in red:
        counts[t.n_crossings] = counts.get(t.n_crossings, 0) + 1
        assert t.loops == 0
    assert counts == {0: 2, 1: 2, 2: 14, 3: 90}


def test_three_algebraic_are_lagrangian():
    for t in generate_algebraic(3, 2, reduced=True):
        for p in (3, 5):
            im = boundary_image(t, p)
            assert im.dim == 3
            assert is_lagrangian(quotient_reduce(im))


def test_budget_guard():
    with pytest.raises(GenerationBudgetExceeded):
        generate_2_algebraic(9)
    with pytest.raises(GenerationBudgetExceeded):
        generate_algebraic(2, 3, max_tangles=100)
