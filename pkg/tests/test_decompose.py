import random

import pytest
from hypothesis import given, settings, strategies as st

from matchgates.algebra import diag, identity, kron, mat_equal, mat_mul, matrix
from matchgates.decompose import (FSWAP, OddOrMixedScatteredGate, InteriorParityViolation, UnsupportedTag,
                                  consecutivize, contract, decompose_circuit, decompose_gate, elementary,
                                  gate_count_report, network_matrix, swap_network)
from matchgates.generators import random_nonsingular
from matchgates.matchcircuit import (GatePlacement, Matchcircuit, circuit_matrix_product, extend_matrix,
                                     validate_circuit)
from matchgates.matchgate import character_matrix, parity_class
from matchgates.realization import is_character_matrix
from matchgates.transform import SingularInput

SWAP = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
CZ = diag([1, 1, 1, -1])


@pytest.mark.parametrize("tag,params", [("a", ()), ("b", (3,)), ("b", (0,)), ("c", ()), ("d", (2,)),
                                        ("d", (2, "row")), ("e", (5,)), ("e", (5, "row")), ("f", (7,)),
                                        ("g", (4,)), ("g", (4, "row")), ("i", ())])
def test_elementary_contracts(tag, params):
    m = contract(tag, *params)
    assert is_character_matrix(m)[0]
    assert mat_equal(character_matrix(elementary(tag, *params)), m)


def test_elementary_parities():
    assert parity_class(contract("a")) == "odd"
    assert parity_class(contract("c")) == "even"
    assert parity_class(contract("d", 1)) == "mixed"
    assert parity_class(contract("g", 1)) == "even"
    assert mat_equal(contract("b", 0), contract("i"))


def test_gamma_h_unsupported():
    with pytest.raises(UnsupportedTag):
        contract("h")


def test_membership_boundary():
    assert is_character_matrix(FSWAP)[0]
    assert not is_character_matrix(SWAP)[0]
    assert not is_character_matrix(CZ)[0]


def test_swap_network_examples():
    assert swap_network([1, 2, 3]) == []
    (p,) = swap_network([2, 1])
    assert p.start == 1 and mat_equal(abs(p.matrix), SWAP)
    net = swap_network([3, 2, 1])
    assert len(net) == 3
    n = network_matrix(net, 3)
    a = random_nonsingular(random.Random(2), 3)
    b = mat_mul(mat_mul(n, a), n)
    assert b[7, 7] == a[7, 7]
    rev = [int(format(x, "03b")[::-1], 2) for x in range(8)]
    assert all(abs(b[u, v]) == abs(a[rev[u], rev[v]]) for u in range(8) for v in range(8))


@given(st.permutations([1, 2, 3, 4]))
def test_swap_network_inverse(perm):
    net = swap_network(perm)
    assert len(net) <= 6
    inv = [0] * 4
    for pos, b in enumerate(perm):
        inv[b - 1] = pos + 1
    back = swap_network(inv)
    # a network and the network of the inverse permutation multiply to the identity
    assert mat_equal(mat_mul(network_matrix(net, 4), network_matrix(back, 4)), identity(16))


def test_swap_network_moves_bits():
    n = network_matrix(swap_network([2, 1, 3]), 3)
    for u in range(8):
        v = ((u << 1) & 0b100) | ((u >> 1) & 0b010) | (u & 1)
        assert abs(n[u, v]) == 1


def test_consecutivize_examples():
    assert consecutivize(FSWAP, [2, 3], 3).matrix is FSWAP
    d = diag([2, 1, 1, 3])
    p = consecutivize(d, [1, 3], 3)
    scattered = diag([d[(x >> 2) << 1 | (x & 1), (x >> 2) << 1 | (x & 1)] for x in range(8)])
    assert p.kind == "diagonal" and mat_equal(p.matrix, scattered)
    p = consecutivize(FSWAP, [1, 3], 3)
    assert p.kind == "even" and p.matrix.shape == (8, 8) and is_character_matrix(p.matrix)[0]
    with pytest.raises(OddOrMixedScatteredGate):
        consecutivize(contract("a"), [1, 3], 3)


def test_decompose_examples():
    d = decompose_gate(identity(8))
    assert d.gate_count == 0 and gate_count_report(d)["total"] == 0
    d = decompose_gate(FSWAP)
    assert [p.matrix for p in d.circuit.placements][0] is not None
    assert mat_equal(circuit_matrix_product(d.circuit), FSWAP) and d.gate_count == 1
    with pytest.raises(SingularInput):
        decompose_gate(extend_matrix(contract("f", 0), 1, 2))
    with pytest.raises(ValueError):
        decompose_gate(SWAP)


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6), st.sampled_from([3, 3, 4]))
def test_decompose_random(seed, k):
    a = random_nonsingular(random.Random(seed), k)
    d = decompose_gate(a, check=False)
    assert d.circuit.level <= 2
    assert validate_circuit(d.circuit) == []
    assert mat_equal(circuit_matrix_product(d.circuit), a)
    assert d.gate_count <= 500 * k ** 4
    assert sum(v for t, v in d.counts.items() if t != "total") == d.counts["total"]


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_decompose_interior(seed):
    a = random_nonsingular(random.Random(seed), 3, homogeneous=True)
    d = decompose_gate(a, "interior")
    assert all(p.kind != "prefix" for p in d.circuit.placements)


def test_interior_rejects_mixed():
    a = kron(contract("d", 1), identity(4))
    with pytest.raises(InteriorParityViolation):
        decompose_gate(a, "interior")


def test_decompose_circuit():
    rng = random.Random(9)
    c = Matchcircuit(3, [GatePlacement(1, "diagonal", matrix=diag([2, 1]))])
    assert decompose_circuit(c).placements == c.placements
    g = random_nonsingular(rng, 3, homogeneous=True)
    c = Matchcircuit(4, [GatePlacement(2, parity_class(g), matrix=g)])
    flat = decompose_circuit(c)
    assert flat.level <= 2 and validate_circuit(flat) == []
    assert mat_equal(circuit_matrix_product(flat), circuit_matrix_product(c))
    two = Matchcircuit(3, [GatePlacement(1, "prefix", matrix=random_nonsingular(rng, 3)),
                           GatePlacement(1, "prefix", matrix=random_nonsingular(rng, 3))])
    flat = decompose_circuit(two)
    assert flat.level <= 2
    assert mat_equal(circuit_matrix_product(flat), circuit_matrix_product(two))
