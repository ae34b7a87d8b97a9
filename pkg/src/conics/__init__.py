"""Conics Module

Arithmetic checks that do not use the group tables: conic point counts,
the trace equation of the order-3 subconstituent, and the closed-form
density predictions every computed value is compared against.
"""

from .counting import (
    cayley_trace,
    commutator_with_h,
    conjugate_h_by_k,
    count_conic,
    gamma_constant,
    literal_cayley_trace,
    minus_branch_point,
    plus_branch_point,
    trace_equation_solutions,
)
from .density import (
    DensityPrediction,
    format_fraction,
    parse_fraction,
    predicted_density,
    stabilizer_order,
    weak_array,
    weak_density_array,
)

__all__ = [
    'cayley_trace',
    'commutator_with_h',
    'conjugate_h_by_k',
    'count_conic',
    'gamma_constant',
    'literal_cayley_trace',
    'minus_branch_point',
    'plus_branch_point',
    'trace_equation_solutions',
    'DensityPrediction',
    'format_fraction',
    'parse_fraction',
    'predicted_density',
    'stabilizer_order',
    'weak_array',
    'weak_density_array',
]
