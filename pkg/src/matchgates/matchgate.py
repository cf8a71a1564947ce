"""Matchgates and their character matrices.

A gate on ``n`` nodes has inputs ``1..k``, outputs ``n-l+1..n`` and a set of
omittable nodes strictly between them.  Row label bits follow the inputs with
input 1 most significant; column label bits follow the outputs from node ``n``
downwards, so column bit ``p`` belongs to output ``n+1-p`` (the partner of
input ``p``).  A set bit means the node is matched externally, i.e. removed.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import zeros
from .pfaffian import MinorPfaffians, SkewGraph, omittable_correction, pf_delete, pf_sum


@dataclass(frozen=True)
class Matchgate:
    graph: SkewGraph
    inputs: tuple
    outputs: tuple
    omittable: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        object.__setattr__(self, "omittable", frozenset(self.omittable))
        n, k, l = self.graph.n, len(self.inputs), len(self.outputs)
        if self.inputs != tuple(range(1, k + 1)):
            raise ValueError("inputs must be 1..k")
        if self.outputs != tuple(range(n - l + 1, n + 1)):
            raise ValueError("outputs must be n-l+1..n")
        if k + l > n:
            raise ValueError("inputs and outputs overlap")
        if any(not k < t <= n - l for t in self.omittable):
            raise ValueError("omittable nodes must lie between inputs and outputs")

    @property
    def n(self):
        return self.graph.n

    @property
    def k(self):
        return len(self.inputs)

    @property
    def l(self):
        return len(self.outputs)

    @property
    def is_standard(self):
        return self.n == self.k + self.l + 1 and len(self.omittable) == 1

    def output_for_bit(self, p):
        """Output node carrying column bit ``p`` (1-based, most significant first)."""
        return self.n + 1 - p


def make_gate(k, l, internal, edges, omittable=()):
    """Gate with ``k`` inputs, ``internal`` middle nodes and ``l`` outputs.

    ``edges`` maps ``(i, j)`` to weights using the final node numbering.
    """
    n = k + internal + l
    return Matchgate(SkewGraph(n, dict(edges)), range(1, k + 1), range(n - l + 1, n + 1), omittable)


def identity_gate(k):
    """Unit-weight edges from input ``j`` to output ``2k+1-j``."""
    return make_gate(k, k, 0, {(j, 2 * k + 1 - j): 1 for j in range(1, k + 1)})


def modifier_x(k, zx):
    zx = sorted(zx)
    return Fraction(-1) ** sum(i - j for j, i in enumerate(zx, start=1))


def modifier_y(n, l, zy):
    """Output-side modifier: the input formula applied to reflected indices."""
    reflected = sorted(n + 1 - j for j in zy)
    return Fraction(-1) ** sum(i - r for r, i in enumerate(reflected, start=1))


def modifier(g, z):
    z = set(z)
    return modifier_x(g.k, z & set(g.inputs)) * modifier_y(g.n, g.l, z & set(g.outputs))


def modifier_by_overlaps(g, z, matching):
    """Diagnostic: parity of crossings between ``matching`` and the external edges of ``z``."""
    count = 0
    for a, b in matching:
        a, b = min(a, b), max(a, b)
        count += sum(1 for v in z if a < v < b)
    return Fraction(-1) ** count


def character(g, z):
    z = set(z)
    if not z <= set(g.inputs) | set(g.outputs):
        raise ValueError("z must be a subset of the external nodes")
    rest = pf_delete(g.graph, z)
    keep = [i for i in range(1, g.n + 1) if i not in z]
    lam = [1 if i in g.omittable else 0 for i in keep]
    return modifier(g, z) * pf_sum(rest, lam)


def label_to_set(g, row, col):
    z = {j for j in g.inputs if row >> (g.k - j) & 1}
    z |= {g.output_for_bit(p) for p in range(1, g.l + 1) if col >> (g.l - p) & 1}
    return z


def _evaluators(g):
    """Two Minor-Pfaffian evaluators: for an even and for an odd count of survivors."""
    n, k, l = g.n, g.k, g.l
    m = g.graph.matrix()
    external = list(range(k)) + list(range(n - l, n))
    even = MinorPfaffians(m + omittable_correction(n, g.omittable), external)
    # odd survivor counts: add an isolated omittable node right after the inputs
    big = zeros(n + 1)
    idx = list(range(k)) + list(range(k + 1, n + 1))
    big[np.ix_(idx, idx)] = m
    omit = [t + 1 if t > k else t for t in g.omittable] + [k + 1]
    ext_big = list(range(k)) + list(range(n - l + 1, n + 1))
    odd = MinorPfaffians(big + omittable_correction(n + 1, omit), ext_big)
    return even, odd, external, ext_big


def pfsum_table(g):
    """``PfS(G - Z)`` for every label pair, without the modifier."""
    k, l, n = g.k, g.l, g.n
    even, odd, ext, ext_big = _evaluators(g)
    externals = list(g.inputs) + list(g.outputs)
    out = zeros(2 ** k, 2 ** l)
    for row in range(2 ** k):
        for col in range(2 ** l):
            z = label_to_set(g, row, col)
            if (n - len(z)) % 2 == 0:
                out[row, col] = even([ext[i] for i, v in enumerate(externals) if v not in z])
            else:
                out[row, col] = odd([ext_big[i] for i, v in enumerate(externals) if v not in z])
    return out


_CACHE = {}
_CACHE_LIMIT = 4096


def remember_character(g, m):
    """Store a character matrix computed by other means (used for affine families)."""
    if len(_CACHE) >= _CACHE_LIMIT:
        _CACHE.clear()
    _CACHE[g] = m.copy()


def character_matrix(g):
    hit = _CACHE.get(g)
    if hit is not None:
        return hit.copy()
    out = _character_matrix(g)
    remember_character(g, out)
    return out


def _character_matrix(g):
    out = pfsum_table(g)
    for row in range(2 ** g.k):
        for col in range(2 ** g.l):
            if out[row, col]:
                out[row, col] *= modifier(g, label_to_set(g, row, col))
    return out


def is_edge_entry(k, l, row, col):
    missing = (k - bin(row).count("1")) + (l - bin(col).count("1"))
    return 0 < missing <= 2


def edge_entries(k, l):
    return [(r, c) for r in range(2 ** k) for c in range(2 ** l) if is_edge_entry(k, l, r, c)]


def parity_class(m):
    """'even', 'odd' or 'mixed' by the parity of the removed-set size of nonzero entries."""
    has_even = has_odd = False
    for r in range(m.shape[0]):
        for c in range(m.shape[1]):
            if m[r, c] != 0:
                if (bin(r).count("1") + bin(c).count("1")) % 2:
                    has_odd = True
                else:
                    has_even = True
    if has_even and has_odd:
        return "mixed"
    return "odd" if has_odd else "even"


def compose_serial(g1, g2):
    """Single gate whose character matrix is ``chi(g1) @ chi(g2)``.

    g2's nodes follow g1's; g1's output for bit ``j`` is joined to g2's input
    ``j`` by a weight-1 edge.
    """
    if g1.l != g2.k:
        raise ValueError(f"arity mismatch: {g1.l} outputs feed {g2.k} inputs")
    off = g1.n
    edges = dict(g1.graph.weights)
    for (i, j), w in g2.graph.weights.items():
        edges[(i + off, j + off)] = w
    for j in range(1, g2.k + 1):
        edges[(g1.output_for_bit(j), off + j)] = Fraction(1)
    n = g1.n + g2.n
    omit = set(g1.omittable) | {t + off for t in g2.omittable}
    return Matchgate(SkewGraph(n, edges), range(1, g1.k + 1), range(n - g2.l + 1, n + 1), omit)


def compose_chain(gates):
    out = gates[0]
    for g in gates[1:]:
        out = compose_serial(out, g)
    return out
