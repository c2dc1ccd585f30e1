"""Conway's rational tangles: continued fractions, slopes and diagrams.

A slope is kept as a reduced pair ``(num, den)`` with ``den >= 0``; the
infinity tangle has slope ``1/0``.  ``T(a1, ..., an)`` has slope
``an + 1/(a(n-1) + ... + 1/a1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .algebraic import compose, crossing_tangle, rotate, zero_tangle
from .coloring import boundary_image
from .zk import is_prime

__all__ = ["Slope", "RationalTangleSpec", "slope", "conway_from_slope", "twist",
           "flip", "build_tangle", "mq_to_slope", "slope_relation_check",
           "parse_conway", "parse_slope"]


class Slope(NamedTuple):
    num: int
    den: int

    @classmethod
    def of(cls, num, den=1):
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        return cls(num, den)

    @property
    def is_infinite(self):
        return self.den == 0

    def fraction(self):
        if self.den == 0:
            raise ZeroDivisionError("infinite slope")
        return Fraction(self.num, self.den)

    def __neg__(self):
        return Slope.of(-self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"


def slope(conway):
    """Exact slope of T(a1, ..., an), with 1/0 for the infinity tangle."""
    conway = list(conway)
    if not conway:
        raise ValueError("Conway notation needs at least one entry")
    p, q = conway[0], 1
    for a in conway[1:]:
        p, q = a * p + q, p
    return Slope.of(p, q)


def conway_from_slope(s):
    """A Conway vector with the given slope (floor continued fraction)."""
    s = Slope.of(*s)
    if s.is_infinite:
        return (0, 0)
    p, q = s
    terms = []
    while q:
        a = p // q
        terms.append(a)
        p, q = q, p - a * q
    return tuple(reversed(terms))


@dataclass(frozen=True)
class RationalTangleSpec:
    conway: tuple

    def __post_init__(self):
        object.__setattr__(self, "conway", tuple(int(a) for a in self.conway))
        if not self.conway:
            raise ValueError("Conway notation needs at least one entry")

    @classmethod
    def from_slope(cls, s):
        return cls(conway_from_slope(s))

    @property
    def slope(self):
        return slope(self.conway)

    @property
    def crossings(self):
        return sum(abs(a) for a in self.conway)


def twist(a):
    """The integer tangle [a]: |a| stacked crossings of sign a."""
    t = zero_tangle()
    x = crossing_tangle(1 if a > 0 else -1)
    for _ in range(abs(a)):
        t = compose(t, x)
    return t


def flip(t):
    """Slope s -> 1/s (rotation, then crossing change)."""
    return rotate(t, 1).mirror()


def build_tangle(spec):
    if not isinstance(spec, RationalTangleSpec):
        spec = RationalTangleSpec(spec)
    a = spec.conway
    t = twist(a[0])
    for x in a[1:]:
        t = compose(flip(t), twist(x))
    r = t.replace(name="T(" + ",".join(map(str, a)) + ")")
    return r


def mq_to_slope(m, q):
    """The (m, q)-move as a rational move: slope (mq + 1)/q."""
    if q == 0:
        raise ValueError("q = 0: an (m, 0) configuration is just an m-move")
    return Slope.of(m * q + 1, q)


def slope_relation_check(spec, r):
    """Do all Z_r colorings of the built tangle obey the boundary relations?

    With corners x1..x4: q (x4 - x1) = p (x2 - x1) and x3 = x2 + x4 - x1.
    Both relations are linear, so the basis of the boundary image suffices.
    """
    if not is_prime(r):
        raise ValueError("prime required")
    if not isinstance(spec, RationalTangleSpec):
        spec = RationalTangleSpec(spec)
    p, q = spec.slope
    t = build_tangle(spec)
    for x1, x2, x3, x4 in boundary_image(t, r).vectors:
        if (q * (x4 - x1) - p * (x2 - x1)) % r:
            return False
        if (x3 - x2 - x4 + x1) % r:
            return False
    return True


def parse_conway(text):
    return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x != "")


def parse_slope(text):
    text = str(text).strip()
    if "/" in text:
        a, b = text.split("/", 1)
        return Slope.of(int(a), int(b))
    return Slope.of(int(text), 1)
