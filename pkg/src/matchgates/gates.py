"""Small explicit gate constructors shared by realization and transform.

Every constructor places input ``j`` opposite output ``n+1-j`` so that the
untouched pairs contribute an identity factor.
"""

from fractions import Fraction

from .algebra import scalar
from .matchgate import make_gate


def _pairs(k, internal, skip=()):
    n = 2 * k + internal
    return {(j, n + 1 - j): Fraction(1) for j in range(1, k + 1) if j not in skip}


def flip_gate(k, p):
    """Bit-``p`` flip: pair ``p`` becomes a unit 2-path through unomittable node ``k+1``."""
    if not 1 <= p <= k:
        raise ValueError("bit out of range")
    n = 2 * k + 1
    edges = _pairs(k, 1, skip=(p,))
    edges[(p, k + 1)] = Fraction(1)
    edges[(k + 1, n + 1 - p)] = Fraction(1)
    return make_gate(k, k, 1, edges)


def scale_gate(k, c):
    """``c`` times the identity: unit pairs plus an omittable pair of weight ``c-1``."""
    c = scalar(c)
    edges = _pairs(k, 2)
    if c != 1:
        edges[(k + 1, k + 2)] = c - 1
    return make_gate(k, k, 2, edges, omittable=(k + 1, k + 2))


def zero_gate(k, l):
    """No edges and an isolated unomittable node, so every character vanishes."""
    return make_gate(k, l, 1, {})


def pair_weight_gate(k, p, w):
    """Identity except that pair ``p`` carries weight ``w``: diagonal, ``w`` where bit ``p`` is 0."""
    edges = _pairs(k, 0)
    n = 2 * k
    edges[(p, n + 1 - p)] = scalar(w)
    return make_gate(k, k, 0, edges)


def cross_gate(k, i, j):
    """Input ``i`` to the output of pair ``j`` and input ``j`` to the output of pair ``i``."""
    if i == j:
        raise ValueError("cross gate needs two distinct pairs")
    n = 2 * k
    edges = _pairs(k, 0, skip=(i, j))
    edges[(i, n + 1 - j)] = Fraction(1)
    edges[(j, n + 1 - i)] = Fraction(1)
    return make_gate(k, k, 0, edges)
