"""Density Prediction Module

Closed-form intersection densities of PSL(2,q) and PGL(2,q) acting on the
cosets of an S3 subgroup, and the weak intersection density array.
All values are exact fractions.
"""

from typing import Tuple
from dataclasses import dataclass
from fractions import Fraction
import logging

from src.atlas.table import GroupKind
from src.errors import UnsupportedCaseError, VerificationError
from src.field import prime_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityPrediction:
    """Predicted density of one group for one q

    Attributes:
        q: Field order
        group: PSL or PGL
        rho: Predicted intersection density
        source: Case of the classification that produced rho
        weak_array: Increasing distinct densities of the arc-transitive groups
    """
    q: int
    group: GroupKind
    rho: Fraction
    source: str
    weak_array: Tuple[Fraction, ...]


def stabilizer_order(group: GroupKind) -> int:
    """|G|/|V|: 3 for PSL(2,q), 6 for PGL(2,q)"""
    return 3 if group is GroupKind.PSL else 6


def format_fraction(value: Fraction) -> str:
    """Serialize as "num/den" (den = 1 included)"""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    return Fraction(int(numerator), int(denominator or 1))


def _psl_case(q: int, p: int, k: int) -> Tuple[Fraction, str]:
    if p == 3:
        return Fraction(3 ** (k - 1)), "q = 3^k, k odd"
    if q % 3 == 1:
        if p == 5:
            return Fraction(2), "q ≡ 1 (mod 3), p = 5"
        return Fraction(4, 3), "q ≡ 1 (mod 3), p ≠ 5"
    if q % 5 == 0:
        if p != 5 or k % 2 == 0:
            raise VerificationError(f"q={q} is 2 mod 3 and 0 mod 5 but not an odd power of 5")
        return Fraction(4, 3), "q = 5^(2k+1)"
    if q % 5 in (2, 3):
        return Fraction(1), "q ≡ 2 (mod 3), q ≡ ±2 (mod 5)"
    return Fraction(4, 3), "q ≡ 2 (mod 3), q ≡ ±1 (mod 5)"


def _pgl_case(q: int, p: int, k: int) -> Tuple[Fraction, str]:
    if p == 3:
        return Fraction(3 ** (k - 1)), "q = 3^k, k odd"
    return Fraction(1), "p ≠ 3"


def _split(q: int) -> Tuple[int, int]:
    if q % 2 == 0:
        raise UnsupportedCaseError(f"q={q} is even")
    power = prime_power(q)
    if power is None:
        raise UnsupportedCaseError(f"q={q} is not a prime power")
    p, k = power
    if p == 3 and k % 2 == 0:
        raise UnsupportedCaseError(f"q=3^{k} with k even admits no transitive PSL(2,q) action")
    return p, k


def weak_array(q: int) -> Tuple[Fraction, ...]:
    p, k = _split(q)
    return tuple(sorted({_pgl_case(q, p, k)[0], _psl_case(q, p, k)[0]}))


def predicted_density(q: int, group: GroupKind) -> DensityPrediction:
    """Closed-form density of PSL(2,q) or PGL(2,q) on the cosets of S3

    Raises:
        UnsupportedCaseError: q even, not a prime power, or 3^k with k even
    """
    p, k = _split(q)
    rho, source = _psl_case(q, p, k) if group is GroupKind.PSL else _pgl_case(q, p, k)
    prediction = DensityPrediction(q=q, group=group, rho=rho, source=source, weak_array=weak_array(q))

    if rho < 1 or (rho * stabilizer_order(group)).denominator != 1:
        raise VerificationError(f"Predicted density {rho} for q={q} is not a valid density")
    return prediction


def weak_density_array(q: int) -> DensityPrediction:
    """The weak intersection density array, carried on the full group's prediction"""
    return predicted_density(q, GroupKind.PGL)
