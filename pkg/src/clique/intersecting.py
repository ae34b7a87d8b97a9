"""Intersecting Set Module

Maximum intersecting sets of a coset action. Any intersecting set can be
translated to contain the identity, after which every other member is a
fixer; the search therefore runs on the fixer graph and adds 1 back.
"""

from typing import Optional
import logging

import numpy as np

from src.atlas.action import CosetAction
from src.atlas.table import GroupKind
from src.clique.solver import DEFAULT_BUDGET, CliqueResult, max_clique
from src.derange.derangement import fixer_graph, fixer_set
from src.errors import VerificationError

logger = logging.getLogger(__name__)


def max_intersecting(
    action: CosetAction,
    which: GroupKind = GroupKind.PGL,
    fixers: Optional[np.ndarray] = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    raise_on_budget: bool = True,
) -> CliqueResult:
    """alpha of the derangement graph, with a witness of group element indices

    Args:
        action: Full coset action
        which: PSL for the PSL(2,q) restriction, PGL for the full group
        fixers: Precomputed fixers of the selected action
        budget: Node limit per solver task
        workers: Solver worker processes
        raise_on_budget: Raise BudgetExceededError instead of flagging

    Returns:
        CliqueResult whose size is alpha and whose witness lists elements
    """
    if which is GroupKind.PSL:
        action = action.restrict_to_psl()
    fixers = fixer_set(action) if fixers is None else fixers
    table = action.table
    graph = fixer_graph(action, fixers, workers=workers)

    # a clique through h is a quick starting incumbent
    hint = None
    if action.h in graph.labels:
        seeded = max_clique(graph, seed=[graph.position_of(action.h)], budget=budget, raise_on_budget=False)
        if not seeded.budget_exceeded:
            hint = seeded.witness

    result = max_clique(graph, budget=budget, workers=workers, hint=hint, raise_on_budget=raise_on_budget)
    elements = sorted([table.identity_index] + [graph.labels[v] for v in result.witness])

    stabilizer_order = len(action.vertex_stabilizer)
    if not result.budget_exceeded and result.size + 1 < stabilizer_order:
        raise VerificationError(
            f"Intersecting set of size {result.size + 1} is smaller than the stabilizer ({stabilizer_order})"
        )

    logger.info(
        f"alpha for {which.value.upper()}(2,{table.q}) = {result.size + 1} "
        f"({graph.n} fixers searched, {result.nodes_explored} nodes)"
    )
    return CliqueResult(
        size=result.size + 1,
        witness=elements,
        nodes_explored=result.nodes_explored,
        elapsed=result.elapsed,
        budget_exceeded=result.budget_exceeded,
    )


def is_intersecting(action: CosetAction, elements: np.ndarray) -> bool:
    """Every pair of the given elements agrees on some vertex"""
    perms = action.images(np.asarray(elements, dtype=np.int64))
    for i in range(len(perms)):
        agree = (perms[i + 1:] == perms[i]).any(axis=1)
        if not np.all(agree):
            return False
    return True
