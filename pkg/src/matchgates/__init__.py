"""Exact matchgates, character matrices and matchcircuits over the rationals."""

from .algebra import SingularMatrix, identity, mat_det, mat_equal, mat_inverse, mat_mul, matrix, scalar
from .decompose import decompose_circuit, decompose_gate, elementary, swap_network
from .matchcircuit import (GatePlacement, Matchcircuit, circuit_character_graph, circuit_matrix_product,
                           extend_matrix, validate_circuit)
from .matchgate import Matchgate, character, character_matrix, compose_serial, identity_gate, make_gate
from .pfaffian import SkewGraph, pf_definition, pf_eliminate, pf_sum
from .realization import is_character_matrix, realize
from .transform import extend, invert, is_reducible, peel, reduce_to_reducible

__all__ = [
    "GatePlacement", "Matchcircuit", "Matchgate", "SingularMatrix", "SkewGraph", "character",
    "character_matrix", "circuit_character_graph", "circuit_matrix_product", "compose_serial",
    "decompose_circuit", "decompose_gate", "elementary", "extend", "extend_matrix", "identity",
    "identity_gate", "invert", "is_character_matrix", "is_reducible", "make_gate", "mat_det",
    "mat_equal", "mat_inverse", "mat_mul", "matrix", "peel", "pf_definition", "pf_eliminate",
    "pf_sum", "realize", "reduce_to_reducible", "scalar", "swap_network", "validate_circuit",
]
