import random
from fractions import Fraction

import pytest
from hypothesis import given

from matchgates.algebra import mat_det, zeros
from matchgates.pfaffian import (MinorPfaffians, SkewGraph, enumerate_matchings, pairing_sign, pf_definition,
                                 pf_delete, pf_eliminate, pf_sum, pf_sum_fast, pfaffian)
from conftest import skew_graphs

EXAMPLE = SkewGraph(4, {(1, 2): 1, (1, 3): 2, (1, 4): 3, (2, 3): 4, (2, 4): 5, (3, 4): 6})


def test_four_node_example():
    # 1*6 - 2*5 + 3*4
    assert pf_definition(EXAMPLE) == 8
    assert pf_eliminate(EXAMPLE) == 8


def test_trivial_cases():
    assert pf_eliminate(SkewGraph(0)) == 1
    assert pf_eliminate(SkewGraph(3, {(1, 2): 1})) == 0
    assert pf_eliminate(SkewGraph(2, {(1, 2): 7})) == 7


def test_reversed_edge_negates():
    assert SkewGraph(2, {(2, 1): 3}).w(1, 2) == -3


def test_bad_edges():
    with pytest.raises(ValueError):
        SkewGraph(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        SkewGraph(2, {(1, 3): 1})


def test_pairing_sign():
    assert pairing_sign([(1, 2), (3, 4)]) == 1
    assert pairing_sign([(1, 3), (2, 4)]) == -1
    assert pairing_sign([(1, 4), (2, 3)]) == 1


def test_pf_delete_renumbers():
    h = pf_delete(EXAMPLE, {2})
    assert h.n == 3 and h.w(1, 2) == 2 and h.w(2, 3) == 6


def test_pf_sum_all_free_triangle():
    g = SkewGraph(3, {(1, 2): 2, (2, 3): 5})
    # empty set, {1,2}, {2,3}
    assert pf_sum(g, [1, 1, 1]) == 1 + 2 + 5


@given(skew_graphs())
def test_elimination_matches_definition(g):
    assert pf_eliminate(g) == pf_definition(g)


@given(skew_graphs(max_n=10))
def test_square_is_determinant(g):
    if g.n == 0:
        return
    assert pf_eliminate(g) ** 2 == mat_det(g.matrix())


@given(skew_graphs())
def test_matrix_roundtrip(g):
    assert SkewGraph.from_matrix(g.matrix()) == g


@given(skew_graphs(max_n=7))
def test_fast_sum_matches_enumeration(g):
    rng = random.Random(g.n * 7919 + len(g.weights))
    lam = [rng.randint(0, 1) for _ in range(g.n)]
    assert pf_sum_fast(g, lam) == pf_sum(g, lam)


@given(skew_graphs(max_n=7))
def test_sum_is_signed_matching_count(g):
    rng = random.Random(len(g.weights))
    lam = [rng.randint(0, 1) for _ in range(g.n)]
    required = [i + 1 for i, x in enumerate(lam) if x == 0]
    total = sum((pairing_sign(p) * m for p, m in enumerate_matchings(g, required)), Fraction(0))
    assert pf_sum(g, lam) == total


@given(skew_graphs(max_n=8, min_n=2))
def test_minor_pfaffians(g):
    n = g.n
    k = n // 3
    variable = list(range(k)) + list(range(n - k, n))
    mp = MinorPfaffians(g.matrix(), variable)
    rng = random.Random(n)
    for _ in range(4):
        present = [v for v in variable if rng.random() < 0.5]
        gone = {v + 1 for v in variable if v not in present}
        assert mp(present) == pf_eliminate(pf_delete(g, gone))


def test_minor_pfaffians_rejects_interleaving():
    with pytest.raises(ValueError):
        MinorPfaffians(zeros(4), [1])


def test_enumerate_requires_saturation():
    g = SkewGraph(3, {(1, 2): 1, (2, 3): 1})
    assert [p for p, _ in enumerate_matchings(g, [1, 3])] == []
    assert sorted(p for p, _ in enumerate_matchings(g, [2])) == [[(1, 2)], [(2, 3)]]
