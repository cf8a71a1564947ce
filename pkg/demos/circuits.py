"""Graph and product semantics of random circuits, including odd gates off bit 1."""

import random

from matchgates.algebra import mat_equal
from matchgates.generators import random_circuit
from matchgates.io import circuit_to_dict, dumps
from matchgates.matchcircuit import circuit_character_graph, circuit_matrix_product

rng = random.Random(7)
agree = 0
for i in range(40):
    c = random_circuit(rng, with_odd_interior=i % 2 == 0)
    if mat_equal(circuit_character_graph(c), circuit_matrix_product(c)):
        agree += 1
    else:
        print("mismatch:", dumps(circuit_to_dict(c)))
print(f"{agree}/40 circuits agree")

c = random_circuit(random.Random(1), max_bits=3, max_gates=3, with_odd_interior=True)
print("sample circuit:", [(p.start, p.kind, p.width) for p in c.placements])
print("serialized:", len(dumps(circuit_to_dict(c))), "bytes of JSON")
