import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from matchgates.algebra import diag, identity, kron, mat_equal, mat_mul, matrix
from matchgates.generators import random_circuit, random_elementary
from matchgates.gates import flip_gate
from matchgates.io import circuit_to_dict, dumps
from matchgates.matchcircuit import (GatePlacement, InvalidPlacement, Matchcircuit, circuit_character_graph,
                                     circuit_matrix_product, extend_matrix, validate_circuit)
from matchgates.matchgate import character_matrix, identity_gate

X = matrix([[0, 1], [1, 0]])
FSWAP = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])


def test_extend_matrix_is_kron():
    m = diag([2, 3])
    assert mat_equal(extend_matrix(m, 1, 1), m)
    assert mat_equal(extend_matrix(m, 1, 3), kron(kron(m, identity(2)), identity(2)))
    assert mat_equal(extend_matrix(m, 2, 3), kron(kron(identity(2), m), identity(2)))
    assert mat_equal(extend_matrix(FSWAP, 2, 3), kron(identity(2), FSWAP))
    with pytest.raises(InvalidPlacement):
        extend_matrix(FSWAP, 3, 3)


def test_validate_examples():
    good = Matchcircuit(3, [GatePlacement(2, "odd", matrix=X), GatePlacement(1, "even", matrix=FSWAP)])
    assert validate_circuit(good) == []
    assert validate_circuit(Matchcircuit(2, [GatePlacement(2, "even", matrix=FSWAP)]))
    assert validate_circuit(Matchcircuit(2, [GatePlacement(1, "odd", matrix=FSWAP)]))
    assert validate_circuit(Matchcircuit(2, [GatePlacement(1, "diagonal", matrix=X)]))
    swap = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert validate_circuit(Matchcircuit(2, [GatePlacement(1, "even", matrix=swap)]))
    mixed = matrix([[1, 2], [0, 1]])
    assert validate_circuit(Matchcircuit(2, [GatePlacement(1, "prefix", matrix=mixed)])) == []
    assert validate_circuit(Matchcircuit(2, [GatePlacement(2, "prefix", matrix=mixed)]))
    with pytest.raises(InvalidPlacement):
        circuit_matrix_product(Matchcircuit(2, [GatePlacement(2, "prefix", matrix=mixed)]))


def test_empty_circuit_is_identity():
    c = Matchcircuit(3, [])
    assert mat_equal(circuit_matrix_product(c), identity(8))
    assert mat_equal(circuit_character_graph(c), identity(8))


def test_identity_gates_in_circuit():
    c = Matchcircuit(2, [GatePlacement(1, "diagonal", gate=identity_gate(2))])
    assert mat_equal(circuit_character_graph(c), identity(4))


def test_odd_gate_off_bit_one_needs_sign():
    # X on bit 2 then an fSWAP: the graph only agrees because the wire over the odd gate carries -1
    c = Matchcircuit(2, [GatePlacement(2, "odd", gate=flip_gate(1, 1)), GatePlacement(1, "even", matrix=FSWAP)])
    expected = mat_mul(kron(identity(2), X), FSWAP)
    assert mat_equal(circuit_matrix_product(c), expected)
    assert mat_equal(circuit_character_graph(c), expected)
    mislabelled = Matchcircuit(2, [GatePlacement(2, "diagonal", gate=identity_gate(1)),
                                   GatePlacement(1, "even", matrix=FSWAP)])
    assert mat_equal(circuit_character_graph(mislabelled), FSWAP)


def test_single_gate_circuit_matches_character():
    rng = random.Random(3)
    g = random_elementary(rng, 2)
    kind = "prefix"
    c = Matchcircuit(2, [GatePlacement(1, kind, gate=g)])
    assert mat_equal(circuit_character_graph(c), character_matrix(g))


@settings(max_examples=60)
@given(st.integers(0, 10 ** 6), st.booleans())
def test_graph_equals_product(seed, odd_interior):
    c = random_circuit(random.Random(seed), with_odd_interior=odd_interior)
    prod, graph = circuit_matrix_product(c), circuit_character_graph(c)
    assert mat_equal(prod, graph), dumps(circuit_to_dict(c))


def test_level():
    c = Matchcircuit(3, [GatePlacement(1, "even", matrix=FSWAP), GatePlacement(3, "odd", matrix=X)])
    assert c.level == 2 and len(c) == 2
