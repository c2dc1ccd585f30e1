import random

import pytest
from hypothesis import given, settings, strategies as st

from knotmoves import library
from knotmoves.algebraic import crossing_tangle, zero_tangle
from knotmoves.diagram import (Diagram, DiagramError, DiagramParseError, arcs, canonical_code,
                               components, emit, euler_ok, faces, parse, parse_many,
                               vertex_components)
from knotmoves.randgen import random_link, random_tangle

TREFOIL_TEXT = """\
# right trefoil
link trefoil
X 1 4 2 5
X 3 6 4 1
X 5 2 6 3
"""


def test_parse_trefoil():
    d = parse(TREFOIL_TEXT)
    assert d.name == "trefoil"
    assert d.n_crossings == 3
    assert d.loops == 0
    assert d == library.trefoil()


def test_one_line_records():
    recs = parse_many("link a / X 1 2 2 1 / link b / O 1 / O 2")
    assert [r.name for r in recs] == ["a", "b"]
    assert recs[1].loops == 2


def test_emit_parse_roundtrip_library():
    for d in (library.trefoil(), library.figure_eight(), library.borromean(),
              library.trivial_link(3), crossing_tangle(1), zero_tangle()):
        e = parse(emit(d))
        assert e == d
        assert canonical_code(e) == canonical_code(d)


@pytest.mark.parametrize("text, line, column", [
    ("link a\nX 1 2 3\n", 2, 1),
    ("link a\nX 1 2 x 4\n", 2, 7),
    ("X 1 2 3 4\n", 1, 1),
    ("link a\nQ 1\n", 2, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(DiagramParseError) as ei:
        parse(text)
    assert ei.value.line == line
    assert ei.value.column == column


@pytest.mark.parametrize("text", [
    "link a\nX 1 2 3 4\n",              # every edge used once
    "link a\nX 1 1 1 1\n",              # edge used four times
    "tangle t 3\nX 1 2 3 4\n",         # odd boundary
    "tangle t 4\nX 1 2 3 4\nB 1 1\nB 2 2\nB 3 3\n",
    "link a\nX 1 2 2 3\nO 1\n",
])
def test_parse_rejects_ill_formed(text):
    with pytest.raises(DiagramParseError):
        parse(text)


def test_parse_rejects_nonplanar():
    # two crossings glued so the 4-valent graph has the wrong face count
    with pytest.raises(DiagramParseError, match="planar"):
        parse("link bad\nX 1 2 3 4\nX 1 3 2 4\n")


def test_constructor_rejects_bad_edges():
    with pytest.raises(DiagramError):
        Diagram([(1, 2, 3, 4)])


def test_arcs_and_components():
    t = library.trefoil()
    assert len(arcs(t)) == 3
    assert components(t) == (1, [])
    assert components(library.borromean())[0] == 3
    assert components(library.hopf())[0] == 2
    assert components(library.trivial_link(4)) == (4, [])
    assert components(zero_tangle())[1] == [(1, 4), (2, 3)]


def test_faces_of_trefoil():
    fs = faces(library.trefoil())
    assert sorted(len(f) for f in fs) == [2, 2, 2, 3, 3]
    assert euler_ok(library.trefoil())


def test_vertex_components_split_link():
    d = parse("link s\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\nX 7 8 8 7\n")
    assert len(vertex_components(d)) == 2


def _relabeled(d, rng):
    labels = sorted(d.ends())
    new = rng.sample(range(1, 10 * len(labels) + 10), len(labels))
    return d.relabel(dict(zip(labels, new)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_canonical_code_ignores_labels_and_order(seed):
    rng = random.Random(seed)
    d = random_link(rng, 7)
    e = _relabeled(d, rng)
    xs = list(e.crossings)
    rng.shuffle(xs)
    # rotating a crossing tuple by two slots describes the same crossing
    xs = [x[2:] + x[:2] if rng.random() < 0.5 else x for x in xs]
    e = Diagram(xs, e.loops, e.boundary)
    assert canonical_code(e) == canonical_code(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_tangle_code_ignores_labels(seed):
    rng = random.Random(seed)
    t = random_tangle(rng, rng.choice([2, 3]), 6)
    assert canonical_code(_relabeled(t, rng)) == canonical_code(t)


def test_canonical_code_separates():
    codes = {canonical_code(d) for d in (library.trefoil(), library.trefoil().mirror(),
                                         library.figure_eight(), library.hopf(),
                                         library.trivial_link(1), library.trivial_link(2))}
    assert len(codes) == 6


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_diagrams_are_planar_and_roundtrip(seed):
    rng = random.Random(seed)
    d = random_link(rng, 8) if rng.random() < 0.5 else random_tangle(rng, 2, 8)
    assert euler_ok(d)
    # each edge bounds faces on both sides: total walk length is twice the edges
    walks = [w for w in faces(d) if w[0][0] != "l"]
    assert sum(len(w) for w in walks) == 2 * len(d.ends())
    assert canonical_code(parse(emit(d))) == canonical_code(d)
