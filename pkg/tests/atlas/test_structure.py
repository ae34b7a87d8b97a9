"""Unit tests for centralizers, the transversal K, normalizers and S3 classes"""

import numpy as np
import pytest

from src.atlas import (
    GroupKind,
    ShapeKind,
    canonical_h,
    centralizer_of_h,
    conjugate_closure,
    enumerate_group,
    expected_normalizer,
    find_inverting_involution,
    normalizer_column,
    normalizer_of_cyclic,
    normalizer_row,
    normalizer_samples,
    s3_class_count,
    transversal_K,
)
from src.errors import WrongCharacteristicError
from src.field import field_new


@pytest.fixture(scope='module')
def table27():
    """PGL(2,27): characteristic 3, where h is unipotent"""
    return enumerate_group(field_new(3, 3), GroupKind.PGL)


@pytest.mark.parametrize("q,order", [(5, 6), (7, 6), (11, 12), (13, 12)])
def test_centralizer_of_h(context_for, q, order):
    """Cyclic of order q + 1 when q = 2 mod 3, q - 1 when q = 1 mod 3"""
    context = context_for(q)
    centralizer = centralizer_of_h(context.table, context.h)
    assert len(centralizer) == order
    assert order in context.table.orders[centralizer]


def test_centralizer_needs_p_not_3():
    table = enumerate_group(field_new(3, 2), GroupKind.PGL)
    with pytest.raises(WrongCharacteristicError):
        centralizer_of_h(table, canonical_h(table))


@pytest.mark.slow
def test_characteristic_three_build(table27):
    """h and nu exist at q = 27, but S is not self-centralizing"""
    assert len(table27) == 27 * (27 ** 2 - 1)
    h = canonical_h(table27)
    assert table27.orders[h] == 3
    nu = find_inverting_involution(table27, h)
    assert table27.orders[nu] == 2
    assert not table27.psl_mask[nu]
    with pytest.raises(WrongCharacteristicError):
        centralizer_of_h(table27, h)
    with pytest.raises(WrongCharacteristicError):
        transversal_K(table27)


def test_transversal_q5(context5):
    report = transversal_K(context5.table)
    assert len(report.elements) == 20
    assert report.is_transversal


def test_transversal_q7_not_onto(context7):
    report = transversal_K(context7.table)
    assert report.intersection_trivial
    assert report.injective
    assert not report.surjective
    assert not report.is_transversal


@pytest.mark.parametrize("q", [5, 7, 11, 13, pytest.param(27, marks=pytest.mark.slow)])
def test_normalizers_match_tables(q):
    """One sampled element per column, in PSL(2,q) and PGL(2,q)"""
    spec = field_new(*{27: (3, 3)}.get(q, (q, 1)))
    for kind in (GroupKind.PSL, GroupKind.PGL):
        table = enumerate_group(spec, kind)
        samples = normalizer_samples(table)
        assert "order=p" in samples
        row = f"{kind.value} row q = {q % 4} (mod 4)"
        for column, g in samples.items():
            order, shape = normalizer_of_cyclic(table, g)
            assert shape == expected_normalizer(table, g), f"{row}, column {column}"
            assert shape.order == order


@pytest.mark.parametrize("q,kind,column,expected", [
    (5, GroupKind.PSL, "involution", "D_4"),
    (7, GroupKind.PSL, "involution", "D_8"),
    (5, GroupKind.PGL, "involution-in-psl", "D_8"),
    (5, GroupKind.PGL, "involution-outside-psl", "D_12"),
    (7, GroupKind.PGL, "involution-in-psl", "D_16"),
    (7, GroupKind.PGL, "involution-outside-psl", "D_12"),
])
def test_involution_columns(q, kind, column, expected):
    """Involutions are placed by PSL membership, then read off the q mod 4 row"""
    table = enumerate_group(field_new(q), kind)
    g = normalizer_samples(table)[column]
    assert normalizer_column(table, g) == column
    assert str(expected_normalizer(table, g)) == expected
    assert str(normalizer_of_cyclic(table, g)[1]) == expected


def test_normalizer_rows():
    pgl5 = enumerate_group(field_new(5), GroupKind.PGL)
    psl7 = enumerate_group(field_new(7), GroupKind.PSL)
    assert normalizer_row(pgl5)["involution-in-psl"] == -1
    assert normalizer_row(pgl5)["involution-outside-psl"] == 1
    assert normalizer_row(psl7)["involution"] == 1
    assert set(normalizer_row(psl7)) == {"involution", "order|q-1", "order|q+1"}


def test_normalizer_shapes_q5(context5):
    """In S5 = PGL(2,5) the normalizer of a 5-cycle is AGL(1,5)"""
    table = context5.table
    samples = normalizer_samples(table)
    order, shape = normalizer_of_cyclic(table, samples["order=p"])
    assert order == 20
    assert shape.kind is ShapeKind.AFFINE
    assert str(normalizer_of_cyclic(table, samples["involution-outside-psl"])[1]) == "D_12"


def test_normalizer_of_identity(context5):
    with pytest.raises(ValueError):
        normalizer_of_cyclic(context5.table, context5.table.identity_index)


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_s3_classes(context_for, q):
    counts = s3_class_count(context_for(q).table)
    assert counts.classes == 2
    assert counts.inside_psl == 1
    assert all(len(rep) == 6 for rep in counts.representatives)


@pytest.mark.slow
def test_s3_classes_characteristic_three(table27):
    """One class at q = 27, and no S3 inside PSL(2,27) since k = 3 is odd"""
    counts = s3_class_count(table27)
    assert counts.classes == 1
    assert counts.inside_psl == 0
    assert all(len(rep) == 6 for rep in counts.representatives)


def test_conjugate_closure(context5):
    table, h = context5.table, context5.h
    assert np.array_equal(conjugate_closure(table, np.array([h])), table.class_of_h)
