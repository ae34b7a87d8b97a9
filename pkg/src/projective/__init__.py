"""Projective Linear Group Module

Elements of PGL(2,q) as normalized 2x2 matrices, scalar-invariant trace
data, and vectorised kernels over arrays of elements.
"""

from .element import (
    Classification,
    ElementKind,
    ProjectiveElement,
    TraceInvariant,
    classify,
    element_order,
    from_encodings,
    identity,
    in_psl,
    pinv,
    pmul,
    pnormalize,
    trace_invariant,
)

__all__ = [
    'Classification',
    'ElementKind',
    'ProjectiveElement',
    'TraceInvariant',
    'classify',
    'element_order',
    'from_encodings',
    'identity',
    'in_psl',
    'pinv',
    'pmul',
    'pnormalize',
    'trace_invariant',
]
