"""Reduce a random nonsingular 3-bit character matrix and decompose it into 1- and 2-bit gates."""

import random

from matchgates.algebra import mat_equal
from matchgates.decompose import decompose_gate
from matchgates.generators import random_nonsingular
from matchgates.matchcircuit import circuit_matrix_product
from matchgates.transform import even_block, invert, is_reducible, reduce_to_reducible

rng = random.Random(2024)
a = random_nonsingular(rng, 3)

trace = reduce_to_reducible(a)
print("phase counts:", trace.phase_counts())
print("reducible:", is_reducible(trace.result), " replay exact:", mat_equal(trace.replay(), trace.result))
print("even block of B is 4x4:", even_block(trace.result).shape)

inv, witness = invert(a)
print("inverse realized by a chain of", len(witness), "gates")

d = decompose_gate(a)
print("level-2 circuit:", d.gate_count, "gates, level", d.circuit.level)
print("per phase:", d.counts)
for p in d.circuit.placements[:8]:
    print(f"  bits {p.start}..{p.stop}  {p.kind}")
print("  ...")
print("product equals input:", mat_equal(circuit_matrix_product(d.circuit), a))
