"""Seeded random inputs: gates, skew matrices, nonsingular character matrices, circuits.

Nonsingular character matrices are generated forward, as products of
elementary k-bit action matrices, so a decomposition always exists.
"""

import random
from fractions import Fraction

from .algebra import mat_prod
from .gates import cross_gate, flip_gate, pair_weight_gate, scale_gate
from .matchcircuit import GatePlacement, Matchcircuit
from .matchgate import character_matrix, compose_serial, make_gate, parity_class
from .pfaffian import SkewGraph
from .transform import gate_T2_eliminator, gate_T4_eliminator


def rng_for(seed, *salt):
    """Independent stream per (seed, salt) so cases do not depend on ordering."""
    return random.Random(repr((seed,) + salt))


def rational(rng, lo=-5, hi=5, den=4, nonzero=False):
    while True:
        v = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if v or not nonzero:
            return v


def random_skew_graph(rng, n, density=0.7):
    return SkewGraph(n, {(i, j): rational(rng) for i in range(1, n + 1)
                         for j in range(i + 1, n + 1) if rng.random() < density})


def random_skew_matrix(rng, n, density=0.7):
    return random_skew_graph(rng, n, density).matrix()


def random_gate(rng, k, l, internal=None, density=0.6):
    internal = rng.randint(0, 3) if internal is None else internal
    n = k + internal + l
    edges = {(i, j): rational(rng) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density}
    omit = [t for t in range(k + 1, k + internal + 1) if rng.random() < 0.5]
    return make_gate(k, l, internal, edges, omit)


def random_gate_unit_corner(rng, k, density=0.6):
    """Square gate scaled by a trailing scale gate so that its corner character is 1."""
    while True:
        g = random_gate(rng, k, k, density=density)
        corner = character_matrix(g)[-1, -1]
        if corner:
            return compose_serial(g, scale_gate(k, 1 / corner))


def random_standard_gate(rng, k, l, density=0.7):
    """Standard gate (one omittable middle node) whose corner character is 1."""
    n = k + l + 1
    t = k + 1
    edges = {(i, j): rational(rng) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if t not in (i, j) and rng.random() < density}
    for v in list(range(1, k + 1)) + list(range(n - l + 1, n + 1)):
        if rng.random() < density:
            edges[tuple(sorted((v, t)))] = rational(rng)
    return make_gate(k, l, 1, edges, omittable=(t,))


def random_elementary(rng, k, homogeneous=False):
    """One k-bit action gate drawn from the reduction catalog."""
    while True:
        choice = rng.randrange(6)
        if choice == 0:
            g = flip_gate(k, rng.randint(1, k))
        elif choice == 1:
            g = scale_gate(k, rational(rng, nonzero=True))
        elif choice == 2 and k >= 2:
            i, j = rng.sample(range(1, k + 1), 2)
            g = cross_gate(k, i, j)
        elif choice == 3:
            g = pair_weight_gate(k, rng.randint(1, k), rational(rng, nonzero=True))
        elif choice == 4 and k >= 2:
            g = gate_T4_eliminator(k, rng.randint(1, k - 1), rng.choice(["column", "row"]), rational(rng, nonzero=True))
        else:
            missing = rng.sample(range(1, k + 1), rng.randint(1, min(2, k)))
            g = gate_T2_eliminator(k, missing, rational(rng, nonzero=True), rng.choice(["column", "row"]))
        if not homogeneous or parity_class(character_matrix(g)) != "mixed":
            return g


def random_nonsingular(rng, k, depth=None, homogeneous=False):
    depth = depth or 2 * k + 2
    return mat_prod([character_matrix(random_elementary(rng, k, homogeneous)) for _ in range(depth)], 1 << k)


def random_placement(rng, bits, force_odd_interior=False):
    while True:
        width = rng.randint(1, min(2, bits))
        start = rng.randint(1, bits - width + 1)
        if force_odd_interior:
            if bits < 2:
                raise ValueError("need two bits for an interior gate")
            width = 1 if bits == 2 else width
            start = rng.randint(2, bits - width + 1)
        if rng.random() < 0.5:
            g = random_elementary(rng, width)
        else:
            g = random_gate(rng, width, width, density=0.5)
        m = character_matrix(g)
        kind = parity_class(m)
        if force_odd_interior and kind != "odd":
            continue
        if kind == "mixed":
            if start != 1:
                continue
            kind = "prefix"
        if rng.random() < 0.3:
            return GatePlacement(start, kind, matrix=m)
        return GatePlacement(start, kind, gate=g)


def random_circuit(rng, max_bits=4, max_gates=5, with_odd_interior=False):
    bits = rng.randint(2 if with_odd_interior else 1, max_bits)
    places = [random_placement(rng, bits) for _ in range(rng.randint(0, max_gates))]
    if with_odd_interior:
        places = places[:max_gates - 1]
        places.insert(rng.randint(0, len(places)), random_placement(rng, bits, force_odd_interior=True))
    return Matchcircuit(bits, places)
