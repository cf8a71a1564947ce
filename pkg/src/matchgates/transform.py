"""Reduction of nonsingular character matrices to reducible form, and inversion.

The four phases act on the current matrix ``A`` by multiplying elementary
k-bit character matrices on the left or right:

* T1 moves a nonzero entry to the corner with bit flips and scales it to 1;
* T2 clears the edge entries of the last column, then of the last row;
* T3 brings a nonzero two-missing edge entry to ``(2^k-2, 2^k-2)`` and scales it to 1;
* T4 clears the remaining edge entries of column and row ``2^k-2``.

Elimination actions always touch rows (columns) at or below the target in
label order, which is why they are applied in decreasing label order.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import SingularMatrix, mat_det, mat_equal, mat_inverse, mat_mul, scalar
from .gates import cross_gate, flip_gate, pair_weight_gate, scale_gate
from .matchgate import Matchgate, character_matrix, is_edge_entry, make_gate, remember_character
from .pfaffian import SkewGraph
from .realization import bits_of, is_character_matrix, realize


class SingularInput(ValueError):
    pass


class NotReducible(ValueError):
    pass


class TheoremViolation(AssertionError):
    """Raised if the inverse of a nonsingular character matrix fails membership."""


def _popcount(x):
    return bin(x).count("1")


def _zeros(x, k):
    return k - _popcount(x)


def _without(k, *bits):
    """Label with every bit set except the listed (1-based) positions."""
    full = (1 << k) - 1
    for b in bits:
        full &= ~(1 << (k - b))
    return full


def _unit_pairs(k, internal):
    n = 2 * k + internal
    return {(j, n + 1 - j): Fraction(1) for j in range(1, k + 1)}


def _with_trial_weight(build, target, desired):
    """Pick the weight of ``build(w)`` so that entry ``target`` becomes ``desired``.

    ``build(w)`` adds one edge of weight ``w``; no matching uses it twice, so
    the character is affine in ``w`` and is cached for the chosen weight.
    """
    desired = scalar(desired)
    base = character_matrix(build(Fraction(0)))
    if desired == 0:
        return build(Fraction(0))
    unit = character_matrix(build(Fraction(1)))
    slope = unit - base
    if slope[target] == 0:
        raise AssertionError("elementary gate does not reach its target entry")
    w = (desired - base[target]) / slope[target]
    g = build(w)
    remember_character(g, base + w * slope)
    return g


def is_reducible(b):
    size = b.shape[0]
    k = bits_of(size)
    if b.shape != (size, size) or k < 1:
        return False
    last, nxt = size - 1, size - 2
    if b[last, last] != 1 or b[nxt, nxt] != 1:
        return False
    for r in range(size):
        for c in range(size):
            if (r, c) == (nxt, nxt) or not is_edge_entry(k, k, r, c):
                continue
            if (r in (last, nxt) or c in (last, nxt)) and b[r, c] != 0:
                return False
    return True


def gate_T1_flip(k, l):
    return flip_gate(k, l)


def gate_T2_eliminator(k, missing, b, side="column"):
    """Unit-diagonal eliminator whose entry at the target equals ``-b``.

    For ``side="column"`` the target is ``(X - missing, 2^k-1)``; for
    ``side="row"`` it is ``(2^k-1, Y - missing)`` with missing output pairs.
    """
    missing = tuple(sorted(missing))
    last = (1 << k) - 1
    lab = _without(k, *missing)
    target = (lab, last) if side == "column" else (last, lab)
    if len(missing) == 1:
        (i,) = missing
        n = 2 * k + 1
        t = k + 1

        def build(w):
            edges = _unit_pairs(k, 1)
            if w:
                edges[(i, t) if side == "column" else (t, n + 1 - i)] = w
            return make_gate(k, k, 1, edges, omittable=(t,))
    elif len(missing) == 2:
        i, j = missing
        n = 2 * k

        def build(w):
            edges = _unit_pairs(k, 0)
            if w:
                edges[(i, j) if side == "column" else (n + 1 - j, n + 1 - i)] = w
            return make_gate(k, k, 0, edges)
    else:
        raise ValueError("one or two missing nodes")
    return _with_trial_weight(build, target, -scalar(b))


def gate_T3_swap(k, i, j):
    return cross_gate(k, i, j)


def gate_T3_scale(k, w):
    return pair_weight_gate(k, k, w)


def gate_T4_eliminator(k, i, side, v):
    """Input ``i`` joined to the bottom output (column side) or the bottom input
    joined to output pair ``i`` (row side); the target entry becomes ``-v``."""
    if not 1 <= i < k:
        raise ValueError("need 1 <= i < k")
    n = 2 * k
    target = (_without(k, i), _without(k, k)) if side == "column" else (_without(k, k), _without(k, i))

    def build(w):
        edges = _unit_pairs(k, 0)
        if w:
            edges[(i, n + 1 - k) if side == "column" else (k, n + 1 - i)] = w
        return make_gate(k, k, 0, edges)

    return _with_trial_weight(build, target, -scalar(v))


@dataclass
class Step:
    phase: str
    side: str
    target: tuple
    gate: Matchgate = None
    matrix: object = None
    bits: tuple = ()


@dataclass
class ReductionTrace:
    source: object
    steps: list = field(default_factory=list)
    result: object = None

    @property
    def lefts(self):
        return [s.matrix for s in self.steps if s.side == "left" and s.matrix is not None]

    @property
    def rights(self):
        return [s.matrix for s in self.steps if s.side == "right" and s.matrix is not None]

    def replay(self, a=None):
        cur = self.source if a is None else a
        for s in self.steps:
            if s.matrix is None:
                continue
            cur = mat_mul(s.matrix, cur) if s.side == "left" else mat_mul(cur, s.matrix)
        return cur

    def phase_counts(self):
        counts = {}
        for s in self.steps:
            if s.matrix is not None:
                counts[s.phase] = counts.get(s.phase, 0) + 1
        return counts


def t2_targets(k, side):
    """Edge entries of the last column (or row), in decreasing label order."""
    last = (1 << k) - 1
    labels = sorted((x for x in range(last) if _zeros(x, k) <= 2), reverse=True)
    return [(x, last) if side == "column" else (last, x) for x in labels]


def t4_targets(k, side):
    nxt = _without(k, k)
    labels = [_without(k, i) for i in range(k - 1, 0, -1)]
    return [(x, nxt) if side == "column" else (nxt, x) for x in labels]


def missing_bits(label, k):
    return [p for p in range(1, k + 1) if not label >> (k - p) & 1]


def reduce_to_reducible(a, check_membership=True):
    size = a.shape[0]
    k = bits_of(size)
    if a.shape != (size, size) or k < 2:
        raise ValueError("reduction needs a square matrix with k >= 2")
    if mat_det(a) == 0:
        raise SingularInput("matrix is singular")
    if check_membership and not is_character_matrix(a)[0]:
        raise ValueError("input is not a character matrix")
    trace = ReductionTrace(a)
    cur = a

    def act(phase, side, target, gate, bits):
        nonlocal cur
        m = character_matrix(gate)
        cur = mat_mul(m, cur) if side == "left" else mat_mul(cur, m)
        trace.steps.append(Step(phase, side, target, gate, m, tuple(bits)))

    last = size - 1
    # T1
    r, c = next((r, c) for r in reversed(range(size)) for c in reversed(range(size)) if cur[r, c] != 0)
    for p in missing_bits(r, k):
        act("T1", "left", None, gate_T1_flip(k, p), (p,))
    for p in missing_bits(c, k):
        act("T1", "right", None, gate_T1_flip(k, p), (p,))
    if cur[last, last] != 1:
        act("T1", "left", (last, last), scale_gate(k, 1 / cur[last, last]), ())
    # T2
    for side, mside in (("column", "left"), ("row", "right")):
        for target in t2_targets(k, side):
            b = cur[target]
            if b == 0:
                trace.steps.append(Step("T2", mside, target))
                continue
            label = target[0] if side == "column" else target[1]
            miss = missing_bits(label, k)
            act("T2", mside, target, gate_T2_eliminator(k, miss, b, side), miss)
    # T3
    # an entry already at the bottom pair needs no swap
    hit = (size - 2, size - 2) if cur[size - 2, size - 2] != 0 else None
    for rr in range(size if hit is None else 0):
        for cc in range(size):
            if _zeros(rr, k) == 1 and _zeros(cc, k) == 1 and cur[rr, cc] != 0:
                hit = (rr, cc)
                break
        if hit:
            break
    if hit is None:
        raise SingularInput("no nonzero two-missing edge entry")
    (i,), (j,) = missing_bits(hit[0], k), missing_bits(hit[1], k)
    if i != k:
        act("T3", "left", None, gate_T3_swap(k, i, k), (i, k))
    if j != k:
        act("T3", "right", None, gate_T3_swap(k, j, k), (j, k))
    nxt = size - 2
    if cur[nxt, nxt] != 1:
        act("T3", "left", (nxt, nxt), gate_T3_scale(k, 1 / cur[nxt, nxt]), (k,))
    # T4
    for side, mside in (("column", "left"), ("row", "right")):
        for idx, target in enumerate(t4_targets(k, side)):
            v = cur[target]
            i = k - 1 - idx
            if v == 0:
                trace.steps.append(Step("T4", mside, target))
                continue
            act("T4", mside, target, gate_T4_eliminator(k, i, side, v), (i, k))
    trace.result = cur
    if not is_reducible(cur):
        raise AssertionError("reduction finished without a reducible matrix")
    return trace


def even_block(b):
    """Entries whose bottom input and bottom output bits are both 0."""
    half = b.shape[0] // 2
    out = b[0::2, 0::2].copy()
    assert out.shape == (half, half)
    return out


def peel(b):
    """Character matrix of the gate left after deleting the isolated bottom pair.

    The even-even block carries a ``(-1)^(popcount(r)+popcount(c))`` factor
    from the bottom edge crossing the edges that leave the middle of the gate;
    it is removed here so that ``peel(chi(extend(g))) == chi(g)``.
    """
    if not is_reducible(b):
        raise NotReducible("matrix is not reducible")
    out = even_block(b)
    for r in range(out.shape[0]):
        for c in range(out.shape[1]):
            if (_popcount(r) + _popcount(c)) % 2:
                out[r, c] = -out[r, c]
    return out


def extend(g):
    """Add a new bottom input and bottom output joined by an isolated unit edge."""
    k, l, n = g.k, g.l, g.n

    def move(v):
        if v <= k:
            return v
        return v + 1 if v <= n - l else v + 2

    edges = {(move(i), move(j)): w for (i, j), w in g.graph.weights.items()}
    big = n + 2
    edges[(k + 1, big - l)] = Fraction(1)
    return Matchgate(SkewGraph(big, edges), range(1, k + 2), range(big - l, big + 1),
                     {move(t) for t in g.omittable})


def invert(a):
    """Exact inverse together with a witness gate list; checks group closure."""
    if mat_det(a) == 0:
        raise SingularMatrix("matrix is singular")
    inv = mat_inverse(a)
    ok, witness = is_character_matrix(inv, want_witness=True)
    if not ok:
        raise TheoremViolation("inverse of a nonsingular character matrix failed membership")
    return inv, witness
