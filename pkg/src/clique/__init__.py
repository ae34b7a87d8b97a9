"""Clique Module

Exact maximum clique search with a brute-force oracle, and the maximum
intersecting sets of coset actions computed with it.
"""

from .solver import CliqueResult, brute_force_clique, greedy_clique, max_clique
from .intersecting import is_intersecting, max_intersecting

__all__ = [
    'CliqueResult',
    'brute_force_clique',
    'greedy_clique',
    'max_clique',
    'is_intersecting',
    'max_intersecting',
]
