"""A few standard diagrams, and closures of braids."""

from .diagram import Diagram

__all__ = ["unknot", "trivial_link", "kink_unknot", "trefoil", "figure_eight",
           "braid_closure", "borromean", "knot_8_18", "center_5_braid_square", "hopf"]


def trivial_link(n=1):
    return Diagram([], n, (), f"U_{n}")


def unknot():
    return trivial_link(1)


def kink_unknot():
    return Diagram([(1, 1, 2, 2)], name="kink")


def trefoil():
    return Diagram([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)], name="3_1")


def figure_eight():
    return Diagram([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)], name="4_1")


def hopf():
    return Diagram([(1, 3, 2, 4), (3, 1, 4, 2)], name="hopf")


def braid_closure(word, strands=None, name=""):
    """Closure of a braid word: ``k`` means sigma_k, ``-k`` its inverse.

    Strands run upward; the top of each strand is joined to its bottom
    around the right-hand side.
    """
    word = [int(g) for g in word]
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    if any(g == 0 or abs(g) >= strands for g in word):
        raise ValueError("generator out of range")
    nxt = iter(range(1, 10 ** 9))
    bottom = [next(nxt) for _ in range(strands)]
    cur = list(bottom)
    crossings = []
    for g in word:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]
        c, d = next(nxt), next(nxt)
        # slots counterclockwise from the lower left: a, b, d, c
        crossings.append((a, b, d, c) if g > 0 else (b, d, c, a))
        cur[i], cur[i + 1] = c, d
    # identify top labels with bottom labels
    ren = {t: b for t, b in zip(cur, bottom)}
    loops = sum(1 for t, b in zip(cur, bottom) if t == b)
    crossings = [tuple(ren.get(e, e) for e in x) for x in crossings]
    return Diagram(crossings, loops, (), name)


def borromean():
    return braid_closure([1, -2] * 3, 3, "borromean")


def knot_8_18():
    return braid_closure([1, -2] * 4, 3, "8_18")


def center_5_braid_square():
    """(s1 s2 s3 s4)^10, the 40-crossing 5-braid family representative."""
    return braid_closure([1, 2, 3, 4] * 10, 5, "delta^4_5")
