"""Decomposition of k-bit character matrices into circuits of 1- and 2-bit gates.

A nonsingular k-bit matrix is reduced with T1-T4 to a reducible ``B``.  Every
reducible character matrix equals ``peel_raw(B) (x) I2`` with the bottom bit
least significant, so the recursion continues on bits ``1..k-1``.  Each
k-bit action is turned into level-2 placements by moving its bits next to each
other (or, for parity-mixing actions, to bit 1) with an fSWAP chain and
reading off the local gate; leftover signs are single-bit ``diag(1,-1)`` gates.
"""

from dataclasses import dataclass, field

from .algebra import diag, mat_det, is_diagonal, mat_equal, mat_inverse, mat_mul, mat_prod, matrix, scalar, zeros
from .matchcircuit import GatePlacement, Matchcircuit, circuit_matrix_product, extend_matrix
from .matchgate import Matchgate, character_matrix, parity_class
from .realization import bits_of, is_character_matrix, realize_gate
from .transform import SingularInput, even_block, reduce_to_reducible


class UnsupportedTag(ValueError):
    pass


class OddOrMixedScatteredGate(ValueError):
    pass


class InteriorParityViolation(ValueError):
    pass


class LocalizationError(AssertionError):
    """An action did not reduce to a local gate after transport (should not happen)."""


FSWAP = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])
Z1 = diag([1, -1])


def contract(tag, *params):
    """Character matrix promised by elementary gate ``tag``."""
    if tag == "a":
        return matrix([[0, 1], [1, 0]])
    if tag == "b":
        (c,) = params
        return diag([c, c])
    if tag == "c":
        return FSWAP.copy()
    if tag == "d":
        b, side = params if len(params) == 2 else (params[0], "column")
        return matrix([[1, b], [0, 1]]) if side == "column" else matrix([[1, 0], [b, 1]])
    if tag == "e":
        b, side = params if len(params) == 2 else (params[0], "column")
        m = diag([1, 1, 1, 1])
        m[(0, 3) if side == "column" else (3, 0)] = scalar(b)
        return m
    if tag == "f":
        (w,) = params
        return diag([w, 1])
    if tag == "g":
        v, side = params if len(params) == 2 else (params[0], "column")
        m = diag([1, 1, 1, 1])
        m[(1, 2) if side == "column" else (2, 1)] = scalar(v)
        return m
    if tag == "i":
        return zeros(2)
    if tag == "h":
        raise UnsupportedTag("singular gates built from type h are not supported")
    raise UnsupportedTag(f"unknown tag {tag!r}")


def elementary(tag, *params):
    return realize_gate(contract(tag, *params))


def placement(m, start):
    """Placement of a small matrix with the strictest kind it qualifies for."""
    if is_diagonal(m):
        kind = "diagonal"
    else:
        kind = parity_class(m)
        if kind == "mixed":
            kind = "prefix"
    return GatePlacement(start, kind, matrix=m)


def swap_network(perm):
    """Adjacent fSWAPs sorting ``perm`` (a sequence of 1-based bit labels) by bubble sort."""
    arr = list(perm)
    out = []
    for end in range(len(arr) - 1, 0, -1):
        for i in range(end):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                out.append(GatePlacement(i + 1, "even", matrix=FSWAP))
    return out


def network_matrix(places, bits):
    return mat_prod([extend_matrix(p.matrix, p.start, bits) for p in places], 1 << bits)


def _chain(src, dst):
    """fSWAPs carrying bit ``src`` to ``dst`` one step at a time."""
    if src > dst:
        return [GatePlacement(b, "even", matrix=FSWAP) for b in range(src - 1, dst - 1, -1)]
    return [GatePlacement(b, "even", matrix=FSWAP) for b in range(src, dst)]


def consecutivize(m, positions, total):
    """Even gate on ``min(positions)..max(positions)`` acting as ``m`` on the listed bits."""
    positions = list(positions)
    if positions != sorted(set(positions)) or positions[-1] > total or positions[0] < 1:
        raise ValueError("positions must be strictly increasing bits within range")
    if parity_class(m) != "even":
        raise OddOrMixedScatteredGate("only even gates may be placed on scattered bits")
    if bits_of(m.shape[0]) != len(positions):
        raise ValueError("matrix width does not match the number of positions")
    lo, hi = positions[0], positions[-1]
    width = hi - lo + 1
    if width == len(positions):
        return GatePlacement(lo, "diagonal" if is_diagonal(m) else "even", matrix=m)
    # local order: the gate's bits first, then the skipped ones; sort back to position order
    local = [p - lo + 1 for p in positions] + [b for b in range(1, width + 1) if b + lo - 1 not in positions]
    net = swap_network(local)
    n = network_matrix(net, width)
    inner = extend_matrix(m, 1, width)
    out = mat_prod([mat_inverse(n), inner, n])
    return GatePlacement(lo, "diagonal" if is_diagonal(out) else "even", matrix=out)


def _sub_block(m, bits, start, width):
    """Entries of ``m`` on bits ``start..start+width-1`` with every other bit 0."""
    shift = bits - (start + width - 1)
    idx = [x << shift for x in range(1 << width)]
    return m[idx][:, idx].copy()


def _sign_pattern(d, bits):
    """``(s, zbits)`` with ``d(x) = s * prod_{b in zbits} (-1)^{x_b}``, or None."""
    size = 1 << bits
    s = d[0, 0]
    if s not in (1, -1):
        return None
    zbits = [b for b in range(1, bits + 1) if d[1 << (bits - b), 1 << (bits - b)] == -s]
    for x in range(size):
        want = s
        for b in zbits:
            if x >> (bits - b) & 1:
                want = -want
        if d[x, x] != want:
            return None
    return s, zbits


def localize(l, support, bits):
    """Level-2 placements whose extended product is the ``bits``-bit action ``l``."""
    if not support:
        s = l[0, 0]
        if not mat_equal(l, diag([s] * (1 << bits))):
            raise LocalizationError("scalar action is not a multiple of the identity")
        return [] if s == 1 else [GatePlacement(1, "diagonal", matrix=diag([s, s]))]
    support = sorted(support)
    if len(support) == 1:
        width = 1
        start = 1 if parity_class(l) == "mixed" else support[0]
        chain = _chain(support[0], start)
    else:
        i, j = support
        width, start = 2, i
        chain = _chain(j, i + 1)
    c = network_matrix(chain, bits)
    loc = mat_prod([mat_inverse(c), l, c])
    g = _sub_block(loc, bits, start, width)
    d = mat_mul(loc, mat_inverse(extend_matrix(g, start, bits)))
    if not is_diagonal(d) or (pattern := _sign_pattern(d, bits)) is None:
        raise LocalizationError("transported action is not local up to signs")
    s, zbits = pattern
    middle = [GatePlacement(b, "diagonal", matrix=Z1) for b in zbits]
    if s == -1:
        middle.append(GatePlacement(1, "diagonal", matrix=diag([-1, -1])))
    middle.append(placement(g, start))
    return chain + middle + list(reversed(chain))


@dataclass
class Level2Decomposition:
    circuit: Matchcircuit
    source: object
    counts: dict = field(default_factory=dict)

    @property
    def gate_count(self):
        return len(self.circuit.placements)


def _as_matrix(a):
    return character_matrix(a) if isinstance(a, Matchgate) else a


def _decompose(a, k, tags, placements):
    if k <= 2:
        if not mat_equal(a, diag([1] * (1 << k))):
            placements.append(placement(a, 1))
            tags.append("recursion")
        return
    trace = reduce_to_reducible(a, check_membership=False)
    lefts = [s for s in trace.steps if s.side == "left" and s.matrix is not None]
    rights = [s for s in trace.steps if s.side == "right" and s.matrix is not None]
    post = []
    for s in lefts:
        for p in localize(mat_inverse(s.matrix), s.bits, k):
            placements.append(p)
            tags.append(s.phase)
    for s in reversed(rights):
        for p in localize(mat_inverse(s.matrix), s.bits, k):
            post.append((p, s.phase))
    b = trace.result
    p = even_block(b)
    if not mat_equal(extend_matrix(p, 1, k), b):
        raise LocalizationError("reducible matrix is not its even block tensored with I2")
    _decompose(p, k - 1, tags, placements)
    for pl, phase in post:
        placements.append(pl)
        tags.append(phase)


def decompose_gate(a, context="prefix", check=True):
    a = _as_matrix(a)
    k = bits_of(a.shape[0])
    if not is_character_matrix(a)[0]:
        raise ValueError("input is not a character matrix")
    if mat_det(a) == 0:
        raise SingularInput("matrix is singular")
    if context not in ("prefix", "interior"):
        raise ValueError("context is 'prefix' or 'interior'")
    if context == "interior" and parity_class(a) == "mixed":
        raise InteriorParityViolation("a gate off bit 1 must be even or odd")
    tags, placements = [], []
    _decompose(a, k, tags, placements)
    if context == "interior" and any(p.kind == "prefix" for p in placements):
        raise InteriorParityViolation("decomposition needed a parity-mixing gate")
    counts = {}
    for t in tags:
        counts[t] = counts.get(t, 0) + 1
    counts["total"] = len(placements)
    d = Level2Decomposition(Matchcircuit(k, placements), a, counts)
    if check and not mat_equal(circuit_matrix_product(d.circuit), a):
        raise LocalizationError("decomposition does not reproduce the input")
    return d


def gate_count_report(d):
    return dict(d.counts)


def decompose_circuit(c):
    out = []
    for p in c.placements:
        if p.width <= 2:
            out.append(p)
            continue
        context = "prefix" if p.start == 1 else "interior"
        d = decompose_gate(p.character(), context)
        out.extend(q.shifted(p.start - 1) for q in d.circuit.placements)
    return Matchcircuit(c.bits, out)
