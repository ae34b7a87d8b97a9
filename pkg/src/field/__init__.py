"""Finite Field Module

Exact arithmetic in F_{p^k} for odd primes p, together with the
quadratic-residue machinery used by the conic and Legendre arguments.
"""

from .spec import FieldSpec, field_new, field_for_order, prime_power
from .element import FieldElement, arith
from .residues import is_square, sqrt, legendre, squares

__all__ = [
    'FieldSpec',
    'FieldElement',
    'field_new',
    'field_for_order',
    'prime_power',
    'arith',
    'is_square',
    'sqrt',
    'legendre',
    'squares',
]
