import random

import pytest
from hypothesis import given, strategies as st

from matchgates.algebra import diag, identity, mat_equal, mat_mul, mat_prod, matrix, zeros
from matchgates.gates import cross_gate, flip_gate, pair_weight_gate, scale_gate, zero_gate
from matchgates.generators import random_gate, random_standard_gate
from matchgates.matchgate import character_matrix, compose_chain
from matchgates.realization import (EdgeEntrySpec, NotCharacterMatrix, bits_of, is_character_matrix, realize,
                                    realize_gate, standard_gate_from_edge_entries)

SWAP = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
FSWAP = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])
CZ = diag([1, 1, 1, -1])


def test_membership_boundary():
    assert is_character_matrix(FSWAP)[0]
    assert not is_character_matrix(SWAP)[0]
    assert not is_character_matrix(CZ)[0]


def test_every_two_by_two_is_a_character_matrix():
    rng = random.Random(0)
    for _ in range(30):
        a = matrix([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        ok, chain = is_character_matrix(a, want_witness=True)
        assert ok and mat_equal(character_matrix(compose_chain(chain)), a)


def test_zero_matrix_realized():
    ok, chain = is_character_matrix(zeros(4, 2), want_witness=True)
    assert ok and mat_equal(character_matrix(chain[0]), zeros(4, 2))


def test_realize_rejects():
    with pytest.raises(NotCharacterMatrix):
        realize(SWAP)


def test_bits_of():
    assert bits_of(8) == 3
    with pytest.raises(ValueError):
        bits_of(6)


def test_flip_gates():
    assert mat_equal(character_matrix(flip_gate(1, 1)), matrix([[0, 1], [1, 0]]))
    for k in (2, 3):
        for p in range(1, k + 1):
            m = character_matrix(flip_gate(k, p))
            assert mat_equal(mat_mul(m, m), identity(1 << k))
            for r in range(1 << k):
                target = r ^ (1 << (k - p))
                assert abs(m[r, target]) == 1


def test_scale_and_pair_weight():
    assert mat_equal(character_matrix(scale_gate(2, 3)), diag([3] * 4))
    assert mat_equal(character_matrix(pair_weight_gate(2, 2, 5)), diag([5, 1, 5, 1]))
    assert mat_equal(character_matrix(zero_gate(1, 2)), zeros(2, 4))


def test_cross_gate_is_signed_swap():
    m = character_matrix(cross_gate(2, 1, 2))
    assert mat_equal(abs(m), SWAP)
    assert is_character_matrix(m)[0]


def test_edge_entry_spec_validates():
    with pytest.raises(ValueError):
        EdgeEntrySpec(1, 1, {(1, 1): 2})
    with pytest.raises(ValueError):
        EdgeEntrySpec(1, 1, {}, corner=2)


@given(st.integers(0, 10 ** 6))
def test_standard_gate_roundtrip(seed):
    rng = random.Random(seed)
    g = random_standard_gate(rng, rng.randint(0, 3), rng.randint(0, 3))
    m = character_matrix(g)
    assert m[-1, -1] == 1
    rebuilt = standard_gate_from_edge_entries(EdgeEntrySpec.from_matrix(m))
    assert rebuilt.is_standard
    assert mat_equal(character_matrix(rebuilt), m)


@given(st.integers(0, 10 ** 6))
def test_witness_composes_back(seed):
    rng = random.Random(seed)
    a = character_matrix(random_gate(rng, rng.randint(0, 3), rng.randint(0, 3)))
    assert mat_equal(character_matrix(realize_gate(a)), a)


@given(st.integers(0, 10 ** 6))
def test_perturbed_non_edge_entry_fails(seed):
    # entry (0,0) has four missing nodes, so it is fixed by the edge entries
    rng = random.Random(seed)
    a = character_matrix(random_standard_gate(rng, 2, 2, density=1.0))
    b = a.copy()
    b[0, 0] += 1
    assert not is_character_matrix(b)[0]
