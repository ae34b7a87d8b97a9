"""Derangement Graph Module

Derangement graphs of the coset actions, their complements on the fixers,
and the analysis of the order-3 subconstituent.
"""

from .graph import BitGraph, bits_iter, bitset_from_mask
from .derangement import (
    conjugated_stabilizer,
    derangement_graph,
    fixer_graph,
    fixer_set,
    fixers_match_stabilizer_conjugates,
    induced_cayley_graph,
)
from .subconstituent import (
    GammaKind,
    SubconstituentReport,
    TildeShape,
    alpha_adjacency_solutions,
    centralizer_regular_on_N,
    check_h_conjugate_nonadjacency,
    classify_gamma_tilde,
    commutator_tau,
    delta_and_N,
    gamma_on_c3,
)
from .export import to_dot, write_dot, write_edge_list, write_witness

__all__ = [
    'BitGraph',
    'bits_iter',
    'bitset_from_mask',
    'conjugated_stabilizer',
    'derangement_graph',
    'fixer_graph',
    'fixer_set',
    'fixers_match_stabilizer_conjugates',
    'induced_cayley_graph',
    'GammaKind',
    'SubconstituentReport',
    'TildeShape',
    'alpha_adjacency_solutions',
    'centralizer_regular_on_N',
    'check_h_conjugate_nonadjacency',
    'classify_gamma_tilde',
    'commutator_tau',
    'delta_and_N',
    'gamma_on_c3',
    'to_dot',
    'write_dot',
    'write_edge_list',
    'write_witness',
]
