"""Unit tests for the field specification module"""

import pytest

from src.errors import DivisionByZeroError, EvenCharacteristicError, NotPrimeError, TooLargeError
from src.field import field_for_order, field_new, prime_power


@pytest.fixture
def f25():
    return field_new(5, 2)


def test_prime_field():
    """Test prime field construction"""
    spec = field_new(5)
    assert spec.q == 5
    assert spec.k == 1
    assert str(spec) == "F_5"


def test_extension_modulus_is_least_irreducible(f25):
    """x^2 + 2 is the least monic irreducible quadratic over F_5"""
    assert f25.q == 25
    assert f25.modulus == (2, 0, 1)


def test_reduction_by_modulus(f25):
    """x * x reduces to -2 = 3"""
    x = f25.encode((0, 1))
    assert x == 5
    assert f25.mul(x, x) == 3
    assert f25.decode(3) == (3, 0)


def test_construction_errors():
    """Test rejected characteristics and sizes"""
    with pytest.raises(NotPrimeError):
        field_new(4)
    with pytest.raises(EvenCharacteristicError):
        field_new(2)
    with pytest.raises(TooLargeError):
        field_new(101, max_order=100)
    with pytest.raises(ValueError):
        field_new(5, 0)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(27) == (3, 3)
    assert prime_power(13) == (13, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None

    assert field_for_order(25).p == 5
    with pytest.raises(NotPrimeError):
        field_for_order(15)


def test_embed_reads_prime_subfield():
    spec = field_new(3, 2)
    assert spec.embed(-1) == 2
    assert spec.embed(7) == 1


@pytest.mark.parametrize("q", [5, 7, 9, 25, 27])
def test_fermat(q):
    """a^(q-1) = 1 for every nonzero a"""
    spec = field_for_order(q)
    assert all(spec.pow(a, q - 1) == 1 for a in range(1, q))


@pytest.mark.parametrize("q", [7, 9, 25])
def test_inverses(q):
    spec = field_for_order(q)
    for a in range(1, q):
        assert spec.mul(a, spec.inv(a)) == 1
    with pytest.raises(DivisionByZeroError):
        spec.inv(0)


@pytest.mark.parametrize("q", [7, 25, 27])
def test_scalar_path_matches_tables(q):
    """Arithmetic without lookup tables agrees with the tabled field"""
    tabled = field_for_order(q)
    bare = field_for_order(q, table_max_order=3)
    assert tabled.has_tables and not bare.has_tables
    for a in range(q):
        assert bare.neg(a) == tabled.neg(a)
        for b in range(0, q, 3):
            assert bare.add(a, b) == tabled.add(a, b)
            assert bare.mul(a, b) == tabled.mul(a, b)


def test_tables_respect_limit():
    bare = field_new(7, table_max_order=3)
    with pytest.raises(TooLargeError):
        bare.add_table


def test_square_mask_counts():
    spec = field_new(11)
    assert set(int(x) for x in spec.square_mask.nonzero()[0]) == {0, 1, 3, 4, 5, 9}
