"""Unit tests for BitGraph"""

import numpy as np
import pytest

from src.derange import BitGraph, bits_iter, bitset_from_mask
from src.errors import VerificationError


@pytest.fixture
def square():
    """4-cycle 0-1-2-3 with a chord 0-2"""
    return BitGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], labels=[10, 11, 12, 13])


def test_bits():
    assert list(bits_iter(0b101001)) == [0, 3, 5]
    assert bitset_from_mask(np.array([True, False, True, True])) == 0b1101


def test_adjacency(square):
    assert square.has_edge(0, 2) and square.has_edge(2, 0)
    assert not square.has_edge(1, 3)
    assert square.neighbors(0) == [1, 2, 3]
    assert square.degrees() == [3, 2, 3, 2]
    assert square.edge_count() == 5
    assert square.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]
    assert square.position_of(12) == 2
    with pytest.raises(KeyError):
        square.position_of(99)


def test_induced_keeps_labels(square):
    sub = square.induced([2, 0, 1])
    assert sub.labels == [12, 10, 11]
    assert sub.edge_count() == 3
    assert sub.is_clique([0, 1, 2])


def test_complement(square):
    complement = square.complement()
    assert complement.edges() == [(1, 3)]
    assert complement.labels == square.labels


def test_is_clique(square):
    assert square.is_clique([0, 1, 2])
    assert not square.is_clique([0, 1, 3])
    assert not square.is_clique([0, 0])


def test_from_rows():
    rows = [np.array([1, 1, 0]), np.array([1, 1, 1]), np.array([0, 1, 1])]
    graph = BitGraph.from_rows(rows)
    assert graph.edges() == [(0, 1), (1, 2)]


def test_validate():
    BitGraph.from_edges(3, [(0, 1)]).validate()
    with pytest.raises(VerificationError):
        BitGraph(2, [0b10, 0]).validate()
    with pytest.raises(VerificationError):
        BitGraph(2, [0b01, 0]).validate()
    with pytest.raises(ValueError):
        BitGraph(2, [0])


def test_to_networkx(square):
    graph = square.to_networkx()
    assert graph.number_of_edges() == 5
    assert graph.nodes[3]['element'] == 13
