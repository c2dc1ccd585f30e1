import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_col_count
from knotmoves import library
from knotmoves.algebraic import crossing_tangle, infinity_tangle, zero_tangle
from knotmoves.coloring import (boundary_image, brute_force_colorings, col_count, col_vector,
                                coloring_space, tri)
from knotmoves.randgen import random_link, random_tangle


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_links(n):
    assert tri(library.trivial_link(n)) == 3 ** n
    assert col_count(library.trivial_link(n), 6) == 6 ** n


def test_known_counts():
    assert tri(library.trefoil()) == 9
    assert tri(library.figure_eight()) == 3
    assert col_count(library.figure_eight(), 5) == 25
    assert col_count(library.hopf(), 2) == 4
    b = coloring_space(library.borromean(), 4)
    assert b.invariant_factors == (4, 4, 4)
    assert b.count == brute_col_count(library.borromean(), 4) == 64


def test_space_for_prime():
    sp = coloring_space(library.trefoil(), 3)
    assert sp.dim == 2
    assert sp.invariant_factors == (3, 3)
    for x in brute_force_colorings(library.trefoil(), 3):
        assert sp.contains(x)
    assert not sp.contains((0, 1, 0))


def test_composite_has_no_dimension():
    sp = coloring_space(library.trefoil(), 9)
    assert sp.count == 27 and sp.invariant_factors == (3, 9)
    with pytest.raises(ValueError):
        sp.dim
    with pytest.raises(ValueError):
        coloring_space(library.trefoil(), 1)


def test_boundary_images_of_basic_tangles():
    assert boundary_image(zero_tangle(), 3).vectors == ((1, 0, 0, 1), (0, 1, 1, 0))
    assert boundary_image(infinity_tangle(), 3).vectors == ((1, 1, 0, 0), (0, 0, 1, 1))
    assert boundary_image(crossing_tangle(1), 3).dim == 2
    with pytest.raises(ValueError):
        boundary_image(library.trefoil(), 3)
    with pytest.raises(ValueError, match="prime"):
        boundary_image(zero_tangle(), 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 4, 5, 6]))
def test_matches_brute_force(seed, k):
    rng = random.Random(seed)
    d = random_link(rng, 5)
    if len(d.ends()) > 9:
        return
    assert col_count(d, k) == brute_col_count(d, k)
    assert col_count(d, k) == len(brute_force_colorings(d, k))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_crt(seed):
    # Z_6 colorings are pairs of Z_2 and Z_3 colorings
    d = random_link(random.Random(seed), 8)
    assert col_count(d, 6) == col_count(d, 2) * col_count(d, 3)
    assert col_count(d, 15) == col_count(d, 3) * col_count(d, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_constant_colorings_and_mirror(seed):
    d = random_link(random.Random(seed), 8)
    k = 5
    n_comp = col_count(d, k)
    # every diagram has the k constant colorings; counts are powers of k for prime k
    assert n_comp >= k
    c = 0
    while k ** c < n_comp:
        c += 1
    assert k ** c == n_comp
    assert col_vector(d.mirror()) == col_vector(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([3, 5, 7]))
def test_tangle_boundary_dimension(seed, p):
    rng = random.Random(seed)
    t = random_tangle(rng, rng.choice([2, 3]), 8)
    assert boundary_image(t, p).dim == t.arity
