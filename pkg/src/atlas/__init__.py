"""Group Atlas Module

Enumeration of PSL(2,q) and PGL(2,q), the coset action on an S3 subgroup,
and the structural subgroups used by the density argument.
"""

from .table import GroupKind, GroupTable, canonical_h, enumerate_group, find_inverting_involution, group_order
from .action import CosetAction, CubicGraph, Suborbit, build_action, build_cubic_graph, suborbit_defects, suborbits
from .structure import (
    NormalizerShape,
    S3ClassCount,
    ShapeKind,
    TransversalReport,
    centralizer_of_h,
    conjugate_closure,
    expected_normalizer,
    normalizer_column,
    normalizer_of_cyclic,
    normalizer_row,
    normalizer_samples,
    s3_class_count,
    transversal_K,
)

__all__ = [
    'GroupKind',
    'GroupTable',
    'canonical_h',
    'enumerate_group',
    'find_inverting_involution',
    'group_order',
    'CosetAction',
    'CubicGraph',
    'Suborbit',
    'build_action',
    'build_cubic_graph',
    'suborbit_defects',
    'suborbits',
    'NormalizerShape',
    'S3ClassCount',
    'ShapeKind',
    'TransversalReport',
    'centralizer_of_h',
    'conjugate_closure',
    'expected_normalizer',
    'normalizer_column',
    'normalizer_of_cyclic',
    'normalizer_row',
    'normalizer_samples',
    's3_class_count',
    'transversal_K',
]
