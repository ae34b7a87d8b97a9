"""Unit tests for the closed-form densities"""

from fractions import Fraction

import pytest

from src.atlas import GroupKind
from src.conics import (
    format_fraction,
    parse_fraction,
    predicted_density,
    stabilizer_order,
    weak_array,
    weak_density_array,
)
from src.errors import UnsupportedCaseError


@pytest.mark.parametrize("q,rho", [
    (5, Fraction(4, 3)),
    (7, Fraction(4, 3)),
    (11, Fraction(4, 3)),
    (13, Fraction(4, 3)),
    (17, Fraction(1)),
    (19, Fraction(4, 3)),
    (23, Fraction(1)),
    (25, Fraction(2)),
    (29, Fraction(4, 3)),
    (27, Fraction(9)),
])
def test_psl_density(q, rho):
    assert predicted_density(q, GroupKind.PSL).rho == rho


@pytest.mark.parametrize("q,rho", [(5, 1), (7, 1), (23, 1), (25, 1), (27, 9), (3, 1)])
def test_pgl_density(q, rho):
    assert predicted_density(q, GroupKind.PGL).rho == rho


@pytest.mark.parametrize("q", [9, 81, 15, 8, 1])
def test_unsupported(q):
    with pytest.raises(UnsupportedCaseError):
        predicted_density(q, GroupKind.PSL)


def test_weak_array():
    assert weak_array(5) == (Fraction(1), Fraction(4, 3))
    assert weak_array(17) == (Fraction(1),)
    assert weak_array(25) == (Fraction(1), Fraction(2))
    assert weak_array(27) == (Fraction(9),)
    assert weak_density_array(5).weak_array == weak_array(5)
    assert weak_density_array(5).group is GroupKind.PGL


def test_sources():
    assert predicted_density(17, GroupKind.PSL).source == "q ≡ 2 (mod 3), q ≡ ±2 (mod 5)"
    assert predicted_density(25, GroupKind.PSL).source == "q ≡ 1 (mod 3), p = 5"
    assert predicted_density(7, GroupKind.PGL).source == "p ≠ 3"


def test_alpha_is_integral():
    for q in (5, 7, 11, 13, 17, 19, 23, 25, 29):
        for group in GroupKind:
            prediction = predicted_density(q, group)
            assert (prediction.rho * stabilizer_order(group)).denominator == 1


def test_fractions():
    assert format_fraction(Fraction(4, 3)) == "4/3"
    assert format_fraction(Fraction(1)) == "1/1"
    assert parse_fraction("4/3") == Fraction(4, 3)
    assert parse_fraction("2") == Fraction(2)
