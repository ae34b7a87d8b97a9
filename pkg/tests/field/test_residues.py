"""Unit tests for the quadratic residue module"""

import pytest

from src.errors import NoRootError, NotPrimeError
from src.field import field_for_order, field_new, is_square, legendre, sqrt, squares


@pytest.fixture
def f11():
    return field_new(11)


def test_is_square(f11):
    """-3 is a nonsquare for q = 2 mod 3, 5 is a square for p = 1 mod 5"""
    assert not is_square(f11.element(f11.embed(-3)))
    assert is_square(f11.element(0))
    assert is_square(f11.element(5))


def test_sqrt(f11):
    assert sqrt(f11.element(5)) == f11.element(4)
    assert sqrt(f11.element(0)) == f11.element(0)
    with pytest.raises(NoRootError):
        sqrt(f11.element(8))


@pytest.mark.parametrize("q", [25, 27])
def test_sqrt_above_exhaustive_threshold(q):
    """The galois root agrees with exhaustive search"""
    spec = field_for_order(q)
    for a in range(1, q):
        value = spec.element(a)
        if is_square(value):
            fast = sqrt(value, exhaustive_below=0)
            assert fast == sqrt(value)
            assert fast * fast == value


def test_legendre():
    assert legendre(5, 11) == 1
    assert legendre(5, 17) == -1
    assert legendre(0, 7) == 0
    with pytest.raises(NotPrimeError):
        legendre(3, 9)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 25, 27, 121])
def test_is_square_matches_enumeration(q):
    spec = field_for_order(q, max_order=200, table_max_order=200)
    found = squares(spec)
    assert len(found) == (q - 1) // 2 + 1
    assert all(is_square(spec.element(a)) == (a in found) for a in spec.elements())


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19])
def test_legendre_matches_is_square(p):
    spec = field_new(p)
    for a in range(1, p):
        assert (legendre(a, p) == 1) == is_square(spec.element(a))
