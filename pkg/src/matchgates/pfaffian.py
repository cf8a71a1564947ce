"""Pfaffians, Pfaffian sums and perfect-matching enumeration.

Nodes are numbered ``1..n`` throughout.  A :class:`SkewGraph` stores the
upper-triangle weights ``w(i, j)`` for ``i < j``; a weight of zero is the
same thing as an absent edge.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .algebra import scalar, zeros


@dataclass(frozen=True)
class SkewGraph:
    n: int
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), w in self.weights.items():
            if i == j:
                raise ValueError("self loops are not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            w = scalar(w)
            if i > j:
                i, j, w = j, i, -w
            if w != 0:
                clean[(i, j)] = clean.get((i, j), Fraction(0)) + w
        object.__setattr__(self, "weights", {e: w for e, w in clean.items() if w != 0})

    @classmethod
    def from_matrix(cls, m):
        n = m.shape[0]
        for i in range(n):
            if m[i, i] != 0:
                raise ValueError("diagonal must vanish")
            for j in range(i + 1, n):
                if m[i, j] != -m[j, i]:
                    raise ValueError("matrix is not skew-symmetric")
        return cls(n, {(i + 1, j + 1): m[i, j] for i in range(n) for j in range(i + 1, n) if m[i, j] != 0})

    def w(self, i, j):
        if i < j:
            return self.weights.get((i, j), Fraction(0))
        return -self.weights.get((j, i), Fraction(0))

    def matrix(self):
        m = zeros(self.n)
        for (i, j), w in self.weights.items():
            m[i - 1, j - 1] = w
            m[j - 1, i - 1] = -w
        return m

    def neighbours(self, i):
        return [j for j in range(1, self.n + 1) if j != i and self.w(i, j) != 0]

    def __eq__(self, other):
        return isinstance(other, SkewGraph) and self.n == other.n and self.weights == other.weights

    def __hash__(self):
        return hash((self.n, frozenset(self.weights.items())))


def pairing_sign(pairs):
    """(-1) raised to the number of overlapping (crossing) pairs."""
    pairs = [tuple(sorted(p)) for p in pairs]
    crossings = 0
    for (a, b), (c, d) in combinations(pairs, 2):
        if a < c < b < d or c < a < d < b:
            crossings += 1
    return Fraction(-1) ** crossings


def _perfect_pairings(nodes):
    if not nodes:
        yield []
        return
    first, rest = nodes[0], nodes[1:]
    for idx, partner in enumerate(rest):
        for tail in _perfect_pairings(rest[:idx] + rest[idx + 1:]):
            yield [(first, partner)] + tail


def pf_definition(g):
    """Pfaffian as the signed sum over all perfect pairings (exponential)."""
    if g.n % 2:
        return Fraction(0)
    total = Fraction(0)
    for pairing in _perfect_pairings(list(range(1, g.n + 1))):
        term = Fraction(1)
        for i, j in pairing:
            term *= g.w(i, j)
            if term == 0:
                break
        if term:
            total += pairing_sign(pairing) * term
    return total


def pfaffian(m):
    """Pfaffian of a skew-symmetric object array by pivoted 2x2 Schur elimination."""
    n = m.shape[0]
    if n % 2:
        return Fraction(0)
    a = [list(row) for row in m]
    result = Fraction(1)
    for k in range(0, n, 2):
        pivot = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k + 1:
            a[k + 1], a[pivot] = a[pivot], a[k + 1]
            for row in a:
                row[k + 1], row[pivot] = row[pivot], row[k + 1]
            result = -result
        p = a[k][k + 1]
        result *= p
        rk, rk1 = a[k], a[k + 1]
        for r in range(k + 2, n):
            ar = a[r]
            x, y = rk1[r], rk[r]
            if x == 0 and y == 0:
                continue
            for s in range(k + 2, n):
                ar[s] += (x * rk[s] - y * rk1[s]) / p
    return result


def pf_eliminate(g):
    return pfaffian(g.matrix())


def pf_delete(g, a):
    """Delete the nodes in ``a`` and renumber the survivors consecutively."""
    a = set(a)
    if any(not 1 <= i <= g.n for i in a):
        raise ValueError("index out of range")
    keep = [i for i in range(1, g.n + 1) if i not in a]
    pos = {old: new for new, old in enumerate(keep, start=1)}
    return SkewGraph(len(keep), {(pos[i], pos[j]): w for (i, j), w in g.weights.items() if i in pos and j in pos})


def pf_sum(g, lam):
    """Pfaffian sum with 0/1 weights, by enumerating subsets of the lambda=1 nodes."""
    if len(lam) != g.n or any(x not in (0, 1) for x in lam):
        raise ValueError("lambda must be a 0/1 vector of length n")
    free = [i + 1 for i, x in enumerate(lam) if x == 1]
    total = Fraction(0)
    for r in range(len(free) + 1):
        if (g.n - r) % 2:
            continue
        for subset in combinations(free, r):
            total += pf_eliminate(pf_delete(g, subset))
    return total


def omittable_correction(n, omittable):
    """Skew matrix adding ``(-1)**(i+j+1)`` between omittable nodes ``i < j``.

    For even ``n``, ``Pf(M + correction)`` equals the Pfaffian sum of ``M``
    with lambda = 1 exactly on ``omittable``.
    """
    c = zeros(n)
    nodes = sorted(omittable)
    for a, i in enumerate(nodes):
        for j in nodes[a + 1:]:
            v = Fraction(-1) ** (i + j + 1)
            c[i - 1, j - 1] = v
            c[j - 1, i - 1] = -v
    return c


def pf_sum_fast(g, lam):
    """Pfaffian sum through a single Pfaffian of a corrected matrix."""
    if len(lam) != g.n or any(x not in (0, 1) for x in lam):
        raise ValueError("lambda must be a 0/1 vector of length n")
    omit = [i + 1 for i, x in enumerate(lam) if x == 1]
    m = g.matrix()
    n = g.n
    if n % 2:
        # an extra isolated omittable node must be deleted in every surviving term
        big = zeros(n + 1)
        big[:n, :n] = m
        m, n, omit = big, n + 1, omit + [n + 1]
    return pfaffian(m + omittable_correction(n, omit))


def enumerate_matchings(g, required):
    """All matchings on existing edges that saturate every node in ``required``.

    Returns ``(pairs, monomial)`` tuples; pairs are sorted by first element.
    """
    required = set(required)
    if any(not 1 <= i <= g.n for i in required):
        raise ValueError("index out of range")
    edges = sorted(g.weights)
    out = []

    def extend(start, used, chosen):
        if required <= used:
            mono = Fraction(1)
            for e in chosen:
                mono *= g.weights[e]
            out.append((sorted(chosen), mono))
        for idx in range(start, len(edges)):
            i, j = edges[idx]
            if i in used or j in used:
                continue
            extend(idx + 1, used | {i, j}, chosen + [(i, j)])

    extend(0, frozenset(), [])
    return out


class MinorPfaffians:
    """Pfaffians of many principal minors that share a fixed block of nodes.

    ``m`` is skew-symmetric over positions ``0..N-1``.  ``variable`` lists the
    positions that queries may drop; every other position is always kept.
    The kept block is eliminated once, after which each query is a Pfaffian of
    a small residual matrix.  Variable positions must all lie outside the span
    of the fixed ones, which makes the pivot signs query-independent.
    """

    def __init__(self, m, variable):
        n = m.shape[0]
        variable = sorted(set(variable))
        fixed = [p for p in range(n) if p not in set(variable)]
        if fixed:
            lo, hi = fixed[0], fixed[-1]
            if any(lo < v < hi for v in variable):
                raise ValueError("variable positions must not interleave with fixed ones")
        order = list(range(n))
        a = {(i, j): m[i, j] for i in range(n) for j in range(n) if i != j and m[i, j] != 0}
        factor = Fraction(1)
        live_fixed = list(fixed)
        while True:
            pivot = None
            for x in live_fixed:
                for y in live_fixed:
                    if y > x and a.get((x, y), 0) != 0:
                        pivot = (x, y)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            p, q = pivot
            pos_p, pos_q = order.index(p), order.index(q)
            if (pos_p + pos_q - 1) % 2:
                factor = -factor
            val = a[(p, q)]
            factor *= val
            order.remove(p)
            order.remove(q)
            live_fixed.remove(p)
            live_fixed.remove(q)
            rp = {r: a.get((p, r), 0) for r in order}
            rq = {r: a.get((q, r), 0) for r in order}
            for r in order:
                x, y = rq[r], rp[r]
                if x == 0 and y == 0:
                    continue
                for s in order:
                    if s == r:
                        continue
                    delta = (x * rp[s] - y * rq[s]) / val
                    if delta:
                        a[(r, s)] = a.get((r, s), 0) + delta
            a = {k: v for k, v in a.items() if p not in k and q not in k and v != 0}
        self.factor = factor
        self.order = order
        self.residual_fixed = live_fixed
        self._a = a

    def __call__(self, present):
        """Pfaffian of the minor keeping all fixed positions plus ``present``."""
        if self.factor == 0:
            return Fraction(0)
        keep = [p for p in self.order if p in set(present) or p in self.residual_fixed]
        if len(keep) % 2:
            return Fraction(0)
        small = np.empty((len(keep), len(keep)), dtype=object)
        for i, x in enumerate(keep):
            for j, y in enumerate(keep):
                small[i, j] = self._a.get((x, y), Fraction(0)) if i != j else Fraction(0)
        return self.factor * pfaffian(small)
