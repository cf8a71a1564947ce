"""Character matrices of small gates, and which 4x4 matrices are realizable."""

from matchgates import algebra
from matchgates.decompose import FSWAP
from matchgates.gates import flip_gate, pair_weight_gate
from matchgates.matchgate import character_matrix, compose_serial, parity_class
from matchgates.realization import is_character_matrix, realize_gate


def show(title, m):
    print(title)
    for row in algebra.to_strings(m):
        print("   ", " ".join(f"{x:>5}" for x in row))


flip = flip_gate(2, 1)
show("flip on bit 1 of 2:", character_matrix(flip))
print("parity:", parity_class(character_matrix(flip)))

weighted = pair_weight_gate(2, 2, 3)
show("pair weight 3 on bit 2:", character_matrix(weighted))

both = compose_serial(flip, weighted)
show("composed:", character_matrix(both))

swap = algebra.matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
cz = algebra.diag([1, 1, 1, -1])
for name, m in [("fSWAP", FSWAP), ("SWAP", swap), ("CZ", cz)]:
    ok, _ = is_character_matrix(m)
    print(f"{name:6s} realizable: {ok}")

g = realize_gate(FSWAP)
print(f"fSWAP realized on {g.n} nodes with {len(g.graph.weights)} edges")
