"""Unit tests for the exact clique solver"""

import random

import pytest

from src.clique import brute_force_clique, greedy_clique, max_clique
from src.derange import BitGraph
from src.errors import BudgetExceededError, SeedNotCliqueError, TooLargeError


def random_graph(n, density, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return BitGraph.from_edges(n, edges)


def complete_graph(n):
    return BitGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.mark.parametrize("density", [0.25, 0.5, 0.8])
def test_matches_brute_force(density):
    """Exact search agrees with exhaustive enumeration on random graphs"""
    rng = random.Random(int(density * 100))
    for _ in range(67):
        graph = random_graph(rng.randint(1, 22), density, rng)
        result = max_clique(graph)
        assert result.size == brute_force_clique(graph)
        assert graph.is_clique(result.witness)
        assert not result.budget_exceeded


def test_small_cases():
    assert max_clique(BitGraph(0, [])).size == 0
    assert max_clique(BitGraph.from_edges(5, [])).size == 1
    assert max_clique(complete_graph(7)).witness == list(range(7))


def test_seeded_search():
    """The reported clique contains the seed"""
    # triangle 0-1-2 and a K4 on 3..6 joined to 0 through 3
    edges = [(0, 1), (1, 2), (0, 2), (0, 3)]
    edges += [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    graph = BitGraph.from_edges(7, edges)
    assert max_clique(graph).size == 4
    seeded = max_clique(graph, seed=[1])
    assert seeded.size == 3
    assert 1 in seeded.witness

    with pytest.raises(SeedNotCliqueError):
        max_clique(graph, seed=[1, 4])


def test_budget():
    graph = complete_graph(6)
    with pytest.raises(BudgetExceededError) as excinfo:
        max_clique(graph, budget=1)
    assert excinfo.value.result.budget_exceeded

    flagged = max_clique(graph, budget=1, raise_on_budget=False)
    assert flagged.budget_exceeded
    assert flagged.size == 6


@pytest.mark.parametrize("workers", [1, 2])
def test_budget_bounds_whole_search(workers):
    """The node budget caps the total over all tasks, not each task"""
    graph = random_graph(60, 0.5, random.Random(11))
    result = max_clique(graph, budget=20, workers=workers, raise_on_budget=False)
    assert result.nodes_explored <= 20
    assert result.budget_exceeded
    assert graph.is_clique(result.witness)


def test_exact_budget_is_enough():
    """A budget equal to the nodes an unlimited search needs is not flagged"""
    graph = random_graph(60, 0.5, random.Random(11))
    full = max_clique(graph)
    assert full.nodes_explored > 20

    tight = max_clique(graph, budget=full.nodes_explored)
    assert not tight.budget_exceeded
    assert tight.nodes_explored == full.nodes_explored
    assert tight.witness == full.witness

    with pytest.raises(BudgetExceededError):
        max_clique(graph, budget=full.nodes_explored - 1)


def test_witness_independent_of_workers():
    rng = random.Random(7)
    graph = random_graph(40, 0.6, rng)
    serial = max_clique(graph, workers=1)
    parallel = max_clique(graph, workers=2)
    assert serial.size == parallel.size
    assert serial.witness == parallel.witness


def test_hint_is_used():
    graph = complete_graph(5)
    result = max_clique(graph, hint=[0, 1, 2])
    assert result.size == 5


def test_greedy_clique():
    rng = random.Random(3)
    graph = random_graph(18, 0.5, rng)
    clique = greedy_clique(graph)
    assert graph.is_clique(clique)
    assert len(clique) <= brute_force_clique(graph)


def test_brute_force_limit():
    with pytest.raises(TooLargeError):
        brute_force_clique(BitGraph.from_edges(26, []))
