"""Quadratic Residue Module

Squares, square roots and Legendre symbols in F_q.
"""

from typing import Set
import logging

from sympy import isprime
from sympy.ntheory import legendre_symbol

from src.errors import EvenCharacteristicError, NoRootError, NotPrimeError

from .element import FieldElement

logger = logging.getLogger(__name__)

SQRT_EXHAUSTIVE_BELOW = 10 ** 4


def is_square(a: FieldElement) -> bool:
    """Euler criterion: a is a square iff a^((q-1)/2) is 0 or 1

    Args:
        a: Field element (0 counts as a square)

    Returns:
        bool: True if a = b^2 for some b
    """
    if a.is_zero():
        return True
    spec = a.spec
    return spec.pow(a.value, (spec.q - 1) // 2) == spec.one


def sqrt(a: FieldElement, exhaustive_below: int = SQRT_EXHAUSTIVE_BELOW) -> FieldElement:
    """Square root with the smaller canonical encoding

    Args:
        a: Field element
        exhaustive_below: Fields smaller than this are searched exhaustively

    Returns:
        r with r*r == a, the smaller of the two roots
    """
    if not is_square(a):
        raise NoRootError(f"{a.value} is not a square in {a.spec}")
    if a.is_zero():
        return a
    spec = a.spec
    if spec.q < exhaustive_below:
        for b in spec.elements():
            if spec.mul(b, b) == a.value:
                return FieldElement(spec, b)
        raise NoRootError(f"Exhaustive search found no root of {a.value}")
    # galois runs Tonelli-Shanks for odd q
    gf = spec.galois_field
    root = int(gf(a.value).sqrt())
    return FieldElement(spec, min(root, spec.neg(root)))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p)

    Args:
        a: Any integer
        p: Odd prime

    Returns:
        -1, 0 or 1
    """
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristicError("Legendre symbol needs an odd prime")
    return int(legendre_symbol(a % p, p))


def squares(spec) -> Set[int]:
    """Encodings of all squares, by enumerating b*b"""
    return {spec.mul(b, b) for b in spec.elements()}
