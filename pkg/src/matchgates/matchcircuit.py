"""Matchcircuits: layered gates on ``m`` bits, with two equivalent semantics.

The product semantics multiplies identity-tensor extensions of the gate
matrices, leftmost placement first.  The graph semantics wires the gates
into one graph, putting a ``-1`` on each wire that passes over an odd gate,
and reads the characters off without modifiers.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import identity, is_diagonal, mat_mul, zeros
from .matchgate import Matchgate, character_matrix, compose_chain, parity_class, pfsum_table
from .pfaffian import SkewGraph
from .realization import bits_of, is_character_matrix, realize

KINDS = ("diagonal", "even", "odd", "prefix")


class InvalidPlacement(ValueError):
    pass


@dataclass(frozen=True)
class GatePlacement:
    """A gate (graph or matrix) on bits ``start .. start+width-1``."""
    start: int
    kind: str
    gate: Matchgate = None
    matrix: object = field(default=None, compare=False)

    def __post_init__(self):
        if (self.gate is None) == (self.matrix is None):
            raise ValueError("give exactly one of gate or matrix")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.gate is not None and self.gate.k != self.gate.l:
            raise ValueError("circuit gates need as many inputs as outputs")
        if self.matrix is not None and self.matrix.shape[0] != self.matrix.shape[1]:
            raise ValueError("circuit matrices must be square")

    @property
    def width(self):
        return self.gate.k if self.gate is not None else bits_of(self.matrix.shape[0])

    @property
    def stop(self):
        return self.start + self.width - 1

    def character(self):
        return character_matrix(self.gate) if self.gate is not None else self.matrix

    def as_gate(self):
        return self.gate if self.gate is not None else compose_chain(realize(self.matrix))

    def shifted(self, offset, kind=None):
        return GatePlacement(self.start + offset, kind or self.kind, self.gate, self.matrix)


@dataclass(frozen=True)
class Matchcircuit:
    bits: int
    placements: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))

    @property
    def level(self):
        return max((p.width for p in self.placements), default=0)

    def __len__(self):
        return len(self.placements)


def extend_matrix(m, start, total):
    j = bits_of(m.shape[0])
    if start < 1 or start + j - 1 > total:
        raise InvalidPlacement(f"{j}-bit matrix at bit {start} does not fit in {total} bits")
    before, after = start - 1, total - (start + j - 1)
    size = 1 << total
    out = zeros(size)
    low = 1 << after
    for u in range(size):
        hi_u, mid_u, lo_u = u >> (after + j), (u >> after) & ((1 << j) - 1), u & (low - 1)
        for mid_v in range(1 << j):
            val = m[mid_u, mid_v]
            if val:
                v = (hi_u << (after + j)) | (mid_v << after) | lo_u
                out[u, v] = val
    return out


def validate_circuit(c):
    problems = []
    for idx, p in enumerate(c.placements):
        if p.start < 1 or p.stop > c.bits:
            problems.append(f"gate {idx}: bits {p.start}..{p.stop} outside 1..{c.bits}")
            continue
        m = p.character()
        if p.matrix is not None and not is_character_matrix(m)[0]:
            problems.append(f"gate {idx}: matrix is not a character matrix")
        if p.kind == "diagonal" and not is_diagonal(m):
            problems.append(f"gate {idx}: declared diagonal but matrix is not")
        elif p.kind in ("even", "odd"):
            found = parity_class(m)
            if found != p.kind:
                problems.append(f"gate {idx}: declared {p.kind} but gate is {found}")
        elif p.kind == "prefix" and p.start != 1:
            problems.append(f"gate {idx}: prefix gate must start at bit 1")
    return problems


def _check(c):
    problems = validate_circuit(c)
    if problems:
        raise InvalidPlacement("; ".join(problems))


def circuit_matrix_product(c):
    _check(c)
    out = identity(1 << c.bits)
    for p in c.placements:
        out = mat_mul(out, extend_matrix(p.character(), p.start, c.bits))
    return out


def build_circuit_graph(c):
    """Wire the circuit into one graph; returns ``(graph, inputs, outputs, omittable)``.

    Nodes are numbered left to right.  Input stub for bit ``b`` is node
    ``m + 1 - b`` and its terminal is ``N - m + b``, so bit 1 is innermost on
    both sides.
    """
    _check(c)
    m = c.bits
    edges = {}
    omittable = set()
    # stubs are mirrored (bit 1 nearest the gates) so their edges nest
    frontier = [m + 1 - b for b in range(1, m + 1)]
    sign = [Fraction(1)] * m
    nxt = m + 1
    for p in c.placements:
        g = p.as_gate()
        off = nxt - 1
        for (i, j), w in g.graph.weights.items():
            edges[(i + off, j + off)] = w
        omittable |= {t + off for t in g.omittable}
        for q in range(1, g.k + 1):
            b = p.start + q - 1
            edges[(frontier[b - 1], off + q)] = sign[b - 1]
            sign[b - 1] = Fraction(1)
            frontier[b - 1] = off + g.output_for_bit(q)
        if p.kind == "odd":
            for b in range(1, p.start):
                sign[b - 1] = -sign[b - 1]
        nxt += g.n
    total = nxt - 1 + m
    for b in range(1, m + 1):
        edges[(frontier[b - 1], total - m + b)] = sign[b - 1]
    return SkewGraph(total, edges), tuple(range(1, m + 1)), tuple(range(total - m + 1, total + 1)), frozenset(omittable)


def circuit_character_graph(c):
    """PfS table of the circuit graph, no modifiers.

    The external nodes are stubs in front of the first gate on each wire: a
    kept stub is what matches that gate node externally, so a set label bit
    means the stub survives.
    """
    graph, inputs, outputs, omittable = build_circuit_graph(c)
    table = pfsum_table(Matchgate(graph, inputs, outputs, omittable))
    m = c.bits
    # table bit j sits on node j (input side) or node N+1-j (output side); both are circuit bit m+1-j
    perm = [_reverse_bits(x, m) ^ ((1 << m) - 1) for x in range(1 << m)]
    return table[np.ix_(perm, perm)]


def _reverse_bits(x, m):
    return int(format(x, f"0{m}b")[::-1], 2) if m else 0
