"""Unit tests for projective elements and the trace classification"""

import pytest

from src.errors import MixedFieldsError, SingularMatrixError
from src.field import field_new
from src.projective import (
    ElementKind,
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


@pytest.fixture
def f5():
    return field_new(5)


@pytest.fixture
def f7():
    return field_new(7)


def test_normalization(f5):
    """First nonzero entry is scaled to 1"""
    g = pnormalize(f5, [[2, 4], [1, 3]])
    assert g.entries == (1, 2, 3, 4)
    assert pnormalize(f5, [[6, 12], [3, 9]]) == g
    assert from_encodings(f5, (0, 2, 1, 0)).entries == (0, 1, 3, 0)


def test_normalization_is_idempotent(f5):
    g = pnormalize(f5, [[3, 1], [2, 2]])
    assert pnormalize(f5, [[g.a, g.b], [g.c, g.d]]) == g


def test_singular_matrix(f5):
    with pytest.raises(SingularMatrixError):
        pnormalize(f5, [[1, 2], [2, 4]])


def test_product_and_inverse(f5):
    g = pnormalize(f5, [[1, 2], [3, 4]])
    k = pnormalize(f5, [[0, 1], [1, 3]])
    assert pmul(g, pinv(g)).is_identity()
    assert g * ~g == identity(f5)
    assert ~(g * k) == ~k * ~g
    assert g ** -1 == ~g


def test_mixed_fields(f5, f7):
    with pytest.raises(MixedFieldsError):
        pmul(identity(f5), identity(f7))


def test_element_order(f5):
    h = pnormalize(f5, [[0, -1], [1, -1]])
    assert h.entries == (0, 1, 4, 1)
    assert element_order(h) == 3
    assert (h ** 3).is_identity()
    assert element_order(pnormalize(f5, [[1, 1], [0, 1]])) == 5
    assert element_order(identity(f5)) == 1


def test_in_psl(f5, f7):
    """[[0,1],[1,0]] has determinant -1, a square in F_5 but not in F_7"""
    assert in_psl(pnormalize(f5, [[0, 1], [1, 0]]))
    assert not in_psl(pnormalize(f7, [[0, 1], [1, 0]]))
    assert in_psl(identity(f7))


def test_trace_invariant(f7):
    h = pnormalize(f7, [[0, -1], [1, -1]])
    assert trace_invariant(h).tau.value == 1
    # scalar multiples share the invariant
    scaled = pnormalize(f7, [[0, -3], [3, -3]])
    assert trace_invariant(scaled) == trace_invariant(h)


def test_classify(f5, f7):
    assert classify(identity(f5)).kind is ElementKind.IDENTITY

    h = classify(pnormalize(f7, [[0, -1], [1, -1]]))
    assert h.kind is ElementKind.ORDER3
    assert h.psl

    assert classify(pnormalize(f5, [[0, 1], [1, 0]])).kind is ElementKind.INVOLUTION_IN_PSL
    assert classify(pnormalize(f7, [[0, 1], [1, 0]])).kind is ElementKind.INVOLUTION_OUTSIDE_PSL

    other = classify(pnormalize(f5, [[1, 1], [0, 1]]))
    assert other.kind is ElementKind.OTHER
    assert str(other) == "Other(5)"


def test_serialize(f5):
    g = pnormalize(f5, [[2, 4], [1, 3]])
    assert g.serialize() == "1,2,3,4"
    assert repr(g) == "[[1,2],[3,4]]"
