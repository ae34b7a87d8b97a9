"""Unit tests for fixers and derangement graphs"""

import numpy as np
import pytest

from src.derange import (
    conjugated_stabilizer,
    derangement_graph,
    fixer_graph,
    fixer_set,
    fixers_match_stabilizer_conjugates,
    induced_cayley_graph,
)
from src.errors import TooLargeError


def test_fixer_counts_q5(context5):
    """1, the 20 elements of order 3 and the 10 transpositions of S5"""
    action = context5.action
    assert len(fixer_set(action)) == 31
    assert len(fixer_set(action.restrict_to_psl())) == 21


@pytest.mark.parametrize("q", [5, 7, 11])
def test_fixers_are_stabilizer_conjugates(context_for, q):
    action = context_for(q).action
    assert fixers_match_stabilizer_conjugates(action)
    assert fixers_match_stabilizer_conjugates(action.restrict_to_psl())


def test_conjugated_stabilizer_psl(context7):
    action = context7.action.restrict_to_psl()
    table = action.table
    expected = np.union1d(table.class_of_h, [table.identity_index])
    assert np.array_equal(conjugated_stabilizer(action), expected)


def test_derangement_graph(context5):
    action = context5.action.restrict_to_psl()
    graph = derangement_graph(action)
    graph.validate()
    assert graph.n == 60
    assert set(graph.degrees()) == {39}


def test_derangement_graph_size_bound(context5):
    with pytest.raises(TooLargeError):
        derangement_graph(context5.action, dense_max_vertices=10)


def test_fixer_graph_is_complement_on_fixers(context5):
    action = context5.action
    fixers = fixer_set(action)
    graph = fixer_graph(action, fixers)
    assert graph.n == 30
    assert action.table.identity_index not in graph.labels

    full = derangement_graph(action, fixers=fixers)
    positions = [int(np.searchsorted(action.members, label)) for label in graph.labels]
    for u, v in graph.edges()[:50]:
        assert not full.has_edge(positions[u], positions[v])


def test_threaded_rows_match(context7):
    table = context7.table
    vertices = table.class_of_h
    serial = induced_cayley_graph(table, vertices, table.orders == 3)
    threaded = induced_cayley_graph(table, vertices, table.orders == 3, workers=3, row_chunk=7)
    assert serial.adjacency == threaded.adjacency
