"""Derangement Graph Module

This module finds the fixers of a coset action and builds Cayley graphs
on subsets of the group: the derangement graph, and the complement of the
derangement graph induced on the fixers.
"""

from typing import TYPE_CHECKING, Optional
from concurrent.futures import ThreadPoolExecutor
import logging
import time

import numpy as np

if TYPE_CHECKING:
    from src.atlas.action import CosetAction
from src.atlas.structure import conjugate_closure
from src.atlas.table import GroupTable
from src.derange.graph import BitGraph, bitset_from_mask
from src.errors import TooLargeError, VerificationError

logger = logging.getLogger(__name__)

DEFAULT_DENSE_MAX_VERTICES = 25000
DEFAULT_ROW_CHUNK = 64


def fixer_set(action: 'CosetAction') -> np.ndarray:
    """Sorted indices of the acting elements that fix at least one vertex"""
    start = time.time()
    identity_perm = np.arange(action.n_vertices)
    found = []
    for chunk, perms in action.iter_perms():
        found.append(chunk[(perms == identity_perm).any(axis=1)])
    fixers = np.concatenate(found)

    if action.table.identity_index not in fixers:
        raise VerificationError("The identity does not fix every vertex")
    logger.info(
        f"Fixer scan for q={action.table.q} ({action.group_order} elements): "
        f"{len(fixers)} fixers in {time.time() - start:.2f}s"
    )
    return fixers


def _mask_of(table: GroupTable, indices: np.ndarray) -> np.ndarray:
    mask = np.zeros(len(table), dtype=bool)
    mask[indices] = True
    return mask


def induced_cayley_graph(
    table: GroupTable,
    vertices: np.ndarray,
    connection_mask: np.ndarray,
    workers: int = 1,
    row_chunk: int = DEFAULT_ROW_CHUNK,
) -> BitGraph:
    """Cayley graph with an inverse-closed connection set, induced on `vertices`

    x ~ y iff y * x^-1 lies in the connection set.

    Args:
        table: Group the vertices and connection set live in
        vertices: Element indices, in vertex order
        connection_mask: Boolean membership of the connection set over the table
        workers: Threads filling adjacency rows
        row_chunk: Rows computed per vectorised batch

    Returns:
        BitGraph labelled by the vertex element indices
    """
    vertices = np.asarray(vertices, dtype=np.int64)
    n = len(vertices)
    inverses = table.inverse_index[vertices]

    def rows_for(start: int):
        block = inverses[start:start + row_chunk]
        products = table.products(np.tile(vertices, len(block)), np.repeat(block, n))
        hits = connection_mask[products].reshape(len(block), n)
        return [bitset_from_mask(row) for row in hits]

    starts = range(0, n, row_chunk)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            blocks = list(executor.map(rows_for, starts))
    else:
        blocks = [rows_for(s) for s in starts]

    adjacency = [bits & ~(1 << u) for u, bits in enumerate(b for block in blocks for b in block)]
    return BitGraph(n, adjacency, [int(v) for v in vertices])


def derangement_graph(
    action: 'CosetAction',
    fixers: Optional[np.ndarray] = None,
    dense_max_vertices: int = DEFAULT_DENSE_MAX_VERTICES,
    workers: int = 1,
) -> BitGraph:
    """Cayley graph on the acting group with the derangements as connection set"""
    if action.group_order > dense_max_vertices:
        raise TooLargeError(
            f"Derangement graph on {action.group_order} vertices exceeds "
            f"dense_max_vertices={dense_max_vertices}; use the fixer graph"
        )
    fixers = fixer_set(action) if fixers is None else fixers
    table = action.table
    connection = action.member_mask & ~_mask_of(table, fixers)
    graph = induced_cayley_graph(table, action.members, connection, workers=workers)
    logger.info(f"Derangement graph for q={table.q}: {graph.n} vertices, degree {graph.degree(0)}")
    return graph


def fixer_graph(action: 'CosetAction', fixers: np.ndarray, workers: int = 1) -> BitGraph:
    """Complement of the derangement graph induced on the fixers other than 1

    Every intersecting set translates to one containing the identity, so
    alpha of the derangement graph is one more than the clique number here.
    """
    table = action.table
    vertices = fixers[fixers != table.identity_index]
    return induced_cayley_graph(table, vertices, _mask_of(table, fixers), workers=workers)


def conjugated_stabilizer(action: 'CosetAction') -> np.ndarray:
    """Conjugates of the vertex stabilizer by the acting group

    For the PSL(2,q) action this is the union of the conjugates of <h>,
    for the PGL(2,q) action the union of the conjugates of <h, nu>.
    """
    table = action.table
    if action.is_psl_restriction:
        base = table.cyclic_subgroup(action.h)
    else:
        base = table.subgroup_closure([action.h, action.nu])
    return conjugate_closure(table, base, by=action.members)


def fixers_match_stabilizer_conjugates(action: 'CosetAction', fixers: Optional[np.ndarray] = None) -> bool:
    """Exhaustive check that the fixers are exactly the conjugates into the stabilizer"""
    fixers = fixer_set(action) if fixers is None else fixers
    expected = conjugated_stabilizer(action)
    match = np.array_equal(np.sort(fixers), expected)
    if not match:
        logger.warning(
            f"Fixers of q={action.table.q} ({len(fixers)}) differ from the "
            f"stabilizer conjugates ({len(expected)})"
        )
    return match
