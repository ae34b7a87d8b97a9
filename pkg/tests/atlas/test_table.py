"""Unit tests for group enumeration"""

from collections import Counter

import numpy as np
import pytest

from src.atlas import GroupKind, canonical_h, enumerate_group, find_inverting_involution, group_order
from src.errors import NoSuchInvolutionError, TooLargeError
from src.field import field_new


@pytest.fixture(scope='module')
def pgl5():
    return enumerate_group(field_new(5), GroupKind.PGL)


@pytest.fixture(scope='module')
def psl5():
    return enumerate_group(field_new(5), GroupKind.PSL)


def test_group_order():
    assert group_order(5, GroupKind.PGL) == 120
    assert group_order(5, GroupKind.PSL) == 60
    assert group_order(27, GroupKind.PGL) == 19656


def test_enumeration(pgl5, psl5):
    """Test sizes, key order and the PSL mask"""
    assert len(pgl5) == 120
    assert len(psl5) == 60
    assert np.all(np.diff(pgl5.keys) > 0)
    assert int(pgl5.psl_mask.sum()) == 60
    assert pgl5.element(pgl5.identity_index).is_identity()


def test_order_statistics(pgl5, psl5):
    """PGL(2,5) has the element orders of S5, PSL(2,5) those of A5"""
    assert Counter(pgl5.orders.tolist()) == {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}
    assert Counter(psl5.orders.tolist()) == {1: 1, 2: 15, 3: 20, 5: 24}


def test_size_bound():
    with pytest.raises(TooLargeError):
        enumerate_group(field_new(7), GroupKind.PGL, max_group_order=100)


def test_lookup(pgl5):
    g = pgl5.element(17)
    assert pgl5.index_of(g) == 17
    assert pgl5.lookup(np.array([-1])).tolist() == [-1]
    identity = pgl5.identity_index
    products = pgl5.products(np.arange(len(pgl5)), pgl5.inverse_index)
    assert np.all(products == identity)


def test_h_and_nu(pgl5):
    h = canonical_h(pgl5)
    nu = find_inverting_involution(pgl5, h)
    assert pgl5.orders[h] == 3
    assert pgl5.orders[nu] == 2
    assert not pgl5.psl_mask[nu]
    assert pgl5.conjugates(h, by=[nu])[0] == pgl5.inverse_index[h]
    assert len(pgl5.cyclic_subgroup(h)) == 3
    assert len(pgl5.subgroup_closure([h, nu])) == 6


def test_no_inverting_involution_in_psl(psl5):
    with pytest.raises(NoSuchInvolutionError):
        find_inverting_involution(psl5, canonical_h(psl5))
    with pytest.raises(ValueError):
        find_inverting_involution(psl5, psl5.identity_index)


@pytest.mark.parametrize("q,size", [(5, 20), (7, 56), (11, 110)])
def test_class_of_h(context_for, q, size):
    """|C_3| is q(q-1) for q = 2 mod 3 and q(q+1) for q = 1 mod 3"""
    assert len(context_for(q).table.class_of_h) == size


def test_dump_lines(psl5):
    lines = list(psl5.dump_lines())
    assert len(lines) == 60
    assert all(len(line.split(',')) == 4 for line in lines)
