import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matchgates.algebra import diag, identity, mat_equal, mat_mul, matrix
from matchgates.generators import random_gate
from matchgates.matchgate import (Matchgate, character, character_matrix, compose_chain, compose_serial,
                                  edge_entries, identity_gate, is_edge_entry, label_to_set, make_gate, modifier,
                                  modifier_x, modifier_y, parity_class, pfsum_table,
                                  _character_matrix)
from matchgates.pfaffian import SkewGraph, enumerate_matchings, pairing_sign, pf_delete


def matching_character(g, z):
    """mu times the signed count of matchings of G - Z that saturate every non-omittable survivor."""
    keep = [v for v in range(1, g.n + 1) if v not in z]
    rest = pf_delete(g.graph, z)
    required = [new for new, old in enumerate(keep, start=1) if old not in g.omittable]
    total = sum((pairing_sign(p) * m for p, m in enumerate_matchings(rest, required)), Fraction(0))
    return modifier(g, z) * total


def test_identity_gates_exact():
    for k in range(1, 5):
        assert mat_equal(character_matrix(identity_gate(k)), identity(1 << k))


def test_modifier_closed_forms():
    assert modifier_x(3, []) == 1
    assert modifier_x(3, [2]) == -1
    assert modifier_x(3, [1, 3]) == -1
    assert modifier_x(3, [1, 2, 3]) == 1
    # output side reflects indices: node n is the first output
    assert modifier_y(6, 3, [6]) == 1
    assert modifier_y(6, 3, [5]) == -1


def test_gate_validation():
    with pytest.raises(ValueError):
        Matchgate(SkewGraph(3), (2,), (3,))
    with pytest.raises(ValueError):
        make_gate(1, 1, 1, {}, omittable=(1,))


def test_edge_entries():
    assert is_edge_entry(1, 1, 0, 1) and is_edge_entry(1, 1, 0, 0)
    assert not is_edge_entry(1, 1, 1, 1)
    assert not is_edge_entry(2, 1, 0, 0)
    assert len(edge_entries(2, 2)) == 4 + 6


def test_parity_class():
    assert parity_class(identity(2)) == "even"
    assert parity_class(matrix([[0, 1], [1, 0]])) == "odd"
    assert parity_class(matrix([[1, 1], [0, 1]])) == "mixed"
    assert parity_class(matrix([[0, 0], [0, 0]])) == "even"


@pytest.mark.parametrize("seed", range(25))
def test_bulk_matches_matching_oracle(seed):
    rng = random.Random(seed)
    g = random_gate(rng, rng.randint(0, 3), rng.randint(0, 3))
    m = _character_matrix(g)
    for r in range(1 << g.k):
        for c in range(1 << g.l):
            z = label_to_set(g, r, c)
            assert m[r, c] == matching_character(g, z) == character(g, z)


@given(st.integers(0, 10 ** 6))
def test_serial_composition_is_product(seed):
    rng = random.Random(seed)
    k, l, m = (rng.randint(0, 3) for _ in range(3))
    g1, g2 = random_gate(rng, k, l), random_gate(rng, l, m)
    assert mat_equal(character_matrix(compose_serial(g1, g2)), mat_mul(character_matrix(g1), character_matrix(g2)))


def test_compose_arity_mismatch():
    with pytest.raises(ValueError):
        compose_serial(identity_gate(1), identity_gate(2))


def test_chain_of_weighted_pairs():
    a = make_gate(1, 1, 0, {(1, 2): 3})
    b = make_gate(1, 1, 0, {(1, 2): 5})
    # weight w on the pair puts w where the bit is 0
    assert mat_equal(character_matrix(compose_chain([a, b])), diag([15, 1]))


def test_cache_returns_copies():
    g = identity_gate(1)
    m = character_matrix(g)
    m[0, 0] = 99
    assert character_matrix(g)[0, 0] == 1


def test_pfsum_table_has_no_modifier():
    g = make_gate(2, 0, 0, {(1, 2): 1})
    t = pfsum_table(g)
    assert t[0, 0] == 1 and t[3, 0] == 1
