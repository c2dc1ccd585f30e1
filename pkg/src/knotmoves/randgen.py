"""Random diagrams and tangles for property tests and sampling."""

import random

from .algebraic import trivial_tangles
from .library import braid_closure, trivial_link
from .moves import MoveSpec, NMove, RationalMove, apply_move, enumerate_sites
from .rational import RationalTangleSpec
from .reidemeister import ReidemeisterMove, apply_reidemeister, r3_sites, simplify

__all__ = ["random_braid_closure", "random_link", "random_tangle", "random_move_kind",
           "scramble"]


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_move_kind(rng, max_crossings=3):
    """A random n-move or rational move with at most ``max_crossings`` crossings."""
    rng = _rng(rng)
    if rng.random() < 0.5:
        n = rng.randint(1, max_crossings)
        return NMove(n if rng.random() < 0.5 else -n)
    while True:
        length = rng.randint(1, 3)
        conway = [rng.choice([-2, -1, 1, 2]) for _ in range(length)]
        spec = RationalTangleSpec(conway)
        if spec.crossings <= max_crossings and spec.slope.num != 0:
            return RationalMove(spec)


def scramble(d, rng, max_crossings=8, steps=6, r3=True):
    """Apply random moves, keeping at most ``max_crossings`` crossings."""
    rng = _rng(rng)
    for _ in range(steps):
        room = max_crossings - d.n_crossings
        if r3 and rng.random() < 0.3:
            sites = r3_sites(d)
            if sites:
                d = apply_reidemeister(d, ReidemeisterMove("R3", rng.choice(sites)))
                continue
        if room <= 0:
            break
        sites = enumerate_sites(d)
        if not sites:
            break
        kind = random_move_kind(rng, min(room, 3))
        d = apply_move(d, MoveSpec(kind, rng.choice(sites)))
    return d


def random_braid_closure(rng, strands=3, length=6):
    rng = _rng(rng)
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
    return braid_closure(word, strands)


def random_link(rng, max_crossings=8):
    """A random link diagram with at most ``max_crossings`` crossings."""
    rng = _rng(rng)
    r = rng.random()
    if r < 0.4:
        d = random_braid_closure(rng, rng.choice([2, 3, 4]), rng.randint(1, max_crossings))
        d = scramble(d, rng, max_crossings, steps=2)
    else:
        d = scramble(trivial_link(rng.randint(1, 2)), rng, max_crossings,
                     steps=rng.randint(1, 5))
    if rng.random() < 0.3:
        d = simplify(d)
    return d


def random_tangle(rng, n=2, max_crossings=8):
    """A random n-tangle diagram with at most ``max_crossings`` crossings."""
    rng = _rng(rng)
    t = rng.choice(trivial_tangles(n))
    return scramble(t, rng, max_crossings, steps=rng.randint(1, 6))
