"""Clique Solver Module

Exact maximum clique by branch and bound over integer bitsets, with greedy
colour classes as the upper bound and highest-colour-first branching.

The search is split into one task per vertex v: the cliques whose last
vertex in the solver order is v. Tasks run sequentially or in a process
pool; each keeps the first maximum clique of its fixed search order, so
the merged witness (largest, then lexicographically least) does not depend
on the number of workers.

The node budget bounds the whole search. Tasks run in-process draw from
what is left of it; with a pool every batch gets a fixed share. Once the
allowance is spent the remaining tasks are skipped and the result is
flagged.
"""

from typing import List, Optional, Sequence, Tuple
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import logging
import time

from src.derange.graph import BitGraph, bits_iter
from src.errors import BudgetExceededError, SeedNotCliqueError, TooLargeError, VerificationError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 9
BRUTE_FORCE_MAX_VERTICES = 25


@dataclass
class CliqueResult:
    """Outcome of a clique search

    Attributes:
        size: Clique number (exact unless budget_exceeded)
        witness: Sorted vertices of a maximum clique
        nodes_explored: Search nodes over all tasks, never above the budget
        elapsed: Wall time in seconds
        budget_exceeded: The search stopped before proving optimality
    """
    size: int
    witness: List[int]
    nodes_explored: int = 0
    elapsed: float = 0.0
    budget_exceeded: bool = False


@dataclass
class _TaskOutcome:
    size: int = 0
    witness: List[int] = field(default_factory=list)
    nodes: int = 0
    exceeded: bool = False


class _BudgetHit(Exception):
    pass


def _colour_sort(candidates: int, adjacency: List[int]) -> Tuple[List[int], List[int]]:
    """Vertices of `candidates` grouped in greedy colour classes, lowest index first"""
    order, colours = [], []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adjacency[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def _run_task(
    adjacency: List[int],
    root: int,
    candidates: int,
    lower_bound: int,
    allowance: int,
) -> _TaskOutcome:
    outcome = _TaskOutcome()
    clique = [root]

    def expand(pool: int) -> None:
        if outcome.nodes >= allowance:
            raise _BudgetHit()
        outcome.nodes += 1
        order, colours = _colour_sort(pool, adjacency)
        for i in range(len(order) - 1, -1, -1):
            bound = len(clique) + colours[i]
            if bound <= outcome.size or bound < lower_bound:
                return
            v = order[i]
            clique.append(v)
            following = pool & adjacency[v]
            if following:
                expand(following)
            elif len(clique) > outcome.size:
                outcome.size = len(clique)
                outcome.witness = sorted(clique)
            clique.pop()
            pool &= ~(1 << v)

    try:
        if candidates:
            expand(candidates)
        elif lower_bound <= 1:
            outcome.size, outcome.witness = 1, [root]
    except _BudgetHit:
        outcome.exceeded = True
    return outcome


_worker_adjacency: List[int] = []


def _init_worker(adjacency: List[int]) -> None:
    global _worker_adjacency
    _worker_adjacency = adjacency


def _run_batch(tasks: List[Tuple[int, int]], lower_bound: int, budget: int) -> List[_TaskOutcome]:
    """Run tasks in order against one shared node allowance

    The local bound rises as cliques are found. A task that runs out of
    nodes ends the batch.
    """
    outcomes = []
    best = lower_bound
    remaining = budget
    for root, candidates in tasks:
        outcome = _run_task(_worker_adjacency, root, candidates, best, remaining)
        best = max(best, outcome.size)
        remaining -= outcome.nodes
        outcomes.append(outcome)
        if outcome.exceeded:
            break
    return outcomes


def greedy_clique(graph: BitGraph) -> List[int]:
    """Greedy clique: repeatedly add the candidate with most candidate neighbours"""
    best: List[int] = []
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    for start in order[:64]:
        clique = [start]
        pool = graph.adjacency[start]
        while pool:
            v = max(bits_iter(pool), key=lambda x: ((graph.adjacency[x] & pool).bit_count(), -x))
            clique.append(v)
            pool &= graph.adjacency[v]
        if len(clique) > len(best) or (len(clique) == len(best) and sorted(clique) < best):
            best = sorted(clique)
    return best


def _solve(graph: BitGraph, budget: int, workers: int, hint: Sequence[int]) -> CliqueResult:
    start = time.time()
    n = graph.n
    if n == 0:
        return CliqueResult(size=0, witness=[], elapsed=time.time() - start)

    incumbent = sorted(hint) if hint else greedy_clique(graph)
    solver_order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    earlier = 0
    tasks = []
    for v in solver_order:
        tasks.append((v, graph.adjacency[v] & earlier))
        earlier |= 1 << v

    lower_bound = len(incumbent)
    if workers > 1 and len(tasks) > 1:
        batches = [tasks[k::workers * 4] for k in range(min(len(tasks), workers * 4))]
        share = budget // len(batches)
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(graph.adjacency,)
        ) as executor:
            futures = [executor.submit(_run_batch, batch, lower_bound, share) for batch in batches]
            outcomes = [o for future in futures for o in future.result()]
    else:
        _init_worker(graph.adjacency)
        outcomes = _run_batch(tasks, lower_bound, budget)

    candidates = [(len(incumbent), incumbent)] + [(o.size, o.witness) for o in outcomes if o.size]
    size = max(s for s, _ in candidates)
    witness = min(w for s, w in candidates if s == size)

    return CliqueResult(
        size=size,
        witness=witness,
        nodes_explored=sum(o.nodes for o in outcomes),
        elapsed=time.time() - start,
        budget_exceeded=any(o.exceeded for o in outcomes),
    )


def max_clique(
    graph: BitGraph,
    seed: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    hint: Optional[Sequence[int]] = None,
    raise_on_budget: bool = True,
) -> CliqueResult:
    """Exact maximum clique, optionally containing a seed clique

    Args:
        graph: Graph to search
        seed: Vertices every reported clique must contain
        budget: Node limit for the whole search
        workers: Worker processes; 1 runs in-process
        hint: A known clique used as the starting incumbent
        raise_on_budget: Raise instead of returning a flagged result

    Returns:
        CliqueResult with a witness checked against the graph

    Raises:
        SeedNotCliqueError: when the seed is not a clique
        BudgetExceededError: when the node budget ran out (result attached)
    """
    seed = sorted(set(seed or []))
    if not graph.is_clique(seed):
        raise SeedNotCliqueError(f"Seed {seed} is not a clique")

    if seed:
        common = (1 << graph.n) - 1
        for v in seed:
            common &= graph.adjacency[v]
        rest = list(bits_iter(common))
        sub = graph.induced(rest)
        sub_hint = [rest.index(v) for v in (hint or []) if v in rest]
        inner = _solve(sub, budget, workers, sub_hint if sub.is_clique(sub_hint) else [])
        result = CliqueResult(
            size=inner.size + len(seed),
            witness=sorted(seed + [rest[v] for v in inner.witness]),
            nodes_explored=inner.nodes_explored,
            elapsed=inner.elapsed,
            budget_exceeded=inner.budget_exceeded,
        )
    else:
        result = _solve(graph, budget, workers, hint if hint and graph.is_clique(hint) else [])

    if not graph.is_clique(result.witness) or len(result.witness) != result.size:
        raise VerificationError(f"Solver witness {result.witness} is not a clique of size {result.size}")

    logger.debug(
        f"Clique search on {graph.n} vertices: size {result.size}, "
        f"{result.nodes_explored} nodes, {result.elapsed:.2f}s"
    )
    if result.budget_exceeded and raise_on_budget:
        raise BudgetExceededError(
            f"Node budget {budget} exhausted; best clique found has size {result.size}",
            result=result,
        )
    return result


def brute_force_clique(graph: BitGraph) -> int:
    """Clique number by enumerating every clique (n <= 25)"""
    if graph.n > BRUTE_FORCE_MAX_VERTICES:
        raise TooLargeError(f"Brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices")

    best = 0

    def extend(size: int, candidates: int) -> None:
        nonlocal best
        best = max(best, size)
        for v in bits_iter(candidates):
            later = candidates & ~((1 << (v + 1)) - 1)
            extend(size + 1, later & graph.adjacency[v])

    extend(0, (1 << graph.n) - 1)
    return best
