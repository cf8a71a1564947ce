"""Deciding character-matrix membership and building witness gates.

Membership is decided constructively: move a nonzero entry to the corner
with bit-flip gates, scale it to 1, rebuild the unique standard gate from the
edge entries, and compare the rebuilt character matrix with the normalized
input.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import mat_equal, mat_mul, mat_prod, scalar
from .gates import flip_gate, scale_gate, zero_gate
from .matchgate import Matchgate, character_matrix, compose_chain, is_edge_entry, modifier
from .pfaffian import SkewGraph


class NotCharacterMatrix(ValueError):
    pass


class ZeroMatrix(ValueError):
    pass


def bits_of(size):
    k = size.bit_length() - 1
    if size != 1 << k:
        raise ValueError(f"dimension {size} is not a power of two")
    return k


@dataclass
class EdgeEntrySpec:
    k: int
    l: int
    values: dict = field(default_factory=dict)
    corner: Fraction = Fraction(1)

    def __post_init__(self):
        self.values = {pos: scalar(v) for pos, v in self.values.items()}
        if scalar(self.corner) != 1:
            raise ValueError("corner entry must be 1")
        for r, c in self.values:
            if not is_edge_entry(self.k, self.l, r, c):
                raise ValueError(f"({r}, {c}) is not an edge entry")

    @classmethod
    def from_matrix(cls, a):
        k, l = bits_of(a.shape[0]), bits_of(a.shape[1])
        vals = {(r, c): a[r, c] for r in range(2 ** k) for c in range(2 ** l) if is_edge_entry(k, l, r, c)}
        return cls(k, l, vals, a[-1, -1])


def standard_gate_from_edge_entries(spec):
    """Gate on inputs 1..k, omittable node k+1 and outputs k+2..k+l+1."""
    k, l = spec.k, spec.l
    n = k + l + 1
    t = k + 1
    skeleton = Matchgate(SkewGraph(n), range(1, k + 1), range(n - l + 1, n + 1), {t})
    edges = {}
    for (r, c), value in spec.values.items():
        if value == 0:
            continue
        missing = [j for j in range(1, k + 1) if not r >> (k - j) & 1]
        missing += [skeleton.output_for_bit(p) for p in range(1, l + 1) if not c >> (l - p) & 1]
        z = set(skeleton.inputs) | set(skeleton.outputs)
        z -= set(missing)
        # the only surviving matchings use the edge among the missing nodes (with t omitted)
        # or, for a single missing node, the edge to t
        pair = tuple(sorted(missing)) if len(missing) == 2 else tuple(sorted((missing[0], t)))
        edges[pair] = modifier(skeleton, z) * value
    return Matchgate(SkewGraph(n, edges), skeleton.inputs, skeleton.outputs, {t})


@dataclass
class Normalization:
    """``normalized = L_s...L_1 @ a @ R_1...R_t`` with ``lefts = [L_1, ..., L_s]``."""
    lefts: list
    rights: list
    normalized: object


def _nonzero_position(a):
    rows, cols = a.shape
    for r in reversed(range(rows)):
        for c in reversed(range(cols)):
            if a[r, c] != 0:
                return r, c
    return None


def flip_and_scale_normalizers(a):
    k, l = bits_of(a.shape[0]), bits_of(a.shape[1])
    pos = _nonzero_position(a)
    if pos is None:
        raise ZeroMatrix("zero matrix has no normalization")
    r, c = pos
    lefts = [flip_gate(k, p) for p in range(1, k + 1) if not r >> (k - p) & 1]
    rights = [flip_gate(l, p) for p in range(1, l + 1) if not c >> (l - p) & 1]
    cur = a
    for g in lefts:
        cur = mat_mul(character_matrix(g), cur)
    for g in rights:
        cur = mat_mul(cur, character_matrix(g))
    corner = cur[-1, -1]
    if corner != 1:
        if k > 0:
            sg = scale_gate(k, 1 / corner)
            lefts.append(sg)
            cur = mat_mul(character_matrix(sg), cur)
        else:
            sg = scale_gate(l, 1 / corner)
            rights.append(sg)
            cur = mat_mul(cur, character_matrix(sg))
    return Normalization(lefts, rights, cur)


def _inverse_gates(g):
    """Gates whose chained character is the inverse of ``chi(g)`` for flip and scale gates."""
    m = character_matrix(g)
    if g.omittable and g.n == 2 * g.k + 2:
        w = g.graph.weights.get((g.k + 1, g.k + 2), Fraction(0))
        return [scale_gate(g.k, 1 / (w + 1))]
    sq = mat_mul(m, m)
    if mat_equal(sq, mat_prod([], m.shape[0])):
        return [g]
    if mat_equal(mat_mul(sq, sq), mat_prod([], m.shape[0])):
        return [g, g, g]
    raise ValueError("unexpected normalizer")


def is_character_matrix(a, want_witness=False):
    """Return ``(bool, witness)``; the witness is a gate list composing to ``a``."""
    k, l = bits_of(a.shape[0]), bits_of(a.shape[1])
    if _nonzero_position(a) is None:
        return True, ([zero_gate(k, l)] if want_witness else None)
    norm = flip_and_scale_normalizers(a)
    std = standard_gate_from_edge_entries(EdgeEntrySpec.from_matrix(norm.normalized))
    if not mat_equal(character_matrix(std), norm.normalized):
        return False, None
    if not want_witness:
        return True, None
    chain = []
    for g in norm.lefts:
        chain.extend(_inverse_gates(g))
    chain.append(std)
    for g in reversed(norm.rights):
        chain.extend(_inverse_gates(g))
    return True, chain


def realize(a):
    ok, chain = is_character_matrix(a, want_witness=True)
    if not ok:
        raise NotCharacterMatrix("matrix fails the reconstruction test")
    return chain


def realize_gate(a):
    """A single gate with character matrix ``a`` (the serial composition of the witness)."""
    return compose_chain(realize(a))
