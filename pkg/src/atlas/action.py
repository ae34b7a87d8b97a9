"""Coset Action Module

This module builds the action of PGL(2,q) by left multiplication on the
left cosets of an S3 subgroup H' = <h, nu>, its restriction to PSL(2,q),
the suborbits of a point stabilizer and the cubic orbital graph.

Vertices are cosets stored by their minimum-index representative; vertex 0
is H' itself. The image of vertex i under x is the coset of x * rep_i.
"""

from typing import Iterator, List, Optional, Tuple
from dataclasses import dataclass, replace
from functools import cached_property
import logging
import time

import numpy as np

from src.atlas.table import GroupTable
from src.derange.graph import BitGraph
from src.errors import (
    NotCoreFreeError,
    NotFoundError,
    NotS3Error,
    TooLargeError,
    VerificationError,
)

logger = logging.getLogger(__name__)

DEFAULT_PERM_TABLE_MAX_ORDER = 25000
DEFAULT_CHUNK_SIZE = 256


@dataclass(eq=False)
class CosetAction:
    """Permutation action of a subgroup of PGL(2,q) on the cosets of H'

    Attributes:
        table: The PGL(2,q) table the cosets live in
        members: Sorted indices of the acting elements
        stabilizer: Sorted indices of the six elements of H'
        h: Index of the order-3 generator of H'
        nu: Index of the involution generator of H'
        vertex_reps: Coset representative of every vertex
        coset_of: Vertex of the coset containing each table element
    """
    table: GroupTable
    members: np.ndarray
    stabilizer: np.ndarray
    h: int
    nu: int
    vertex_reps: np.ndarray
    coset_of: np.ndarray
    perm_table_max_order: int = DEFAULT_PERM_TABLE_MAX_ORDER
    chunk_size: int = DEFAULT_CHUNK_SIZE

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_reps)

    @property
    def group_order(self) -> int:
        return len(self.members)

    @property
    def is_psl_restriction(self) -> bool:
        return bool(np.all(self.table.psl_mask[self.members]))

    @cached_property
    def member_mask(self) -> np.ndarray:
        mask = np.zeros(len(self.table), dtype=bool)
        mask[self.members] = True
        return mask

    @cached_property
    def vertex_stabilizer(self) -> np.ndarray:
        """Acting elements fixing vertex 0"""
        return self.stabilizer[self.member_mask[self.stabilizer]]

    def images(self, elements: np.ndarray) -> np.ndarray:
        """Permutations of the given elements as an (m, |V|) array of vertex images"""
        elements = np.asarray(elements, dtype=np.int64)
        n = self.n_vertices
        products = self.table.products(np.repeat(elements, n), np.tile(self.vertex_reps, len(elements)))
        return self.coset_of[products].reshape(len(elements), n)

    def iter_perms(self, elements: Optional[np.ndarray] = None) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
        """Yield (element indices, permutations) in chunks of chunk_size"""
        elements = self.members if elements is None else np.asarray(elements, dtype=np.int64)
        for start in range(0, len(elements), self.chunk_size):
            chunk = elements[start:start + self.chunk_size]
            yield chunk, self.images(chunk)

    @cached_property
    def perm_table(self) -> np.ndarray:
        """Permutation of every member, row i for members[i]"""
        if self.group_order > self.perm_table_max_order:
            raise TooLargeError(
                f"Permutation table for {self.group_order} elements exceeds "
                f"perm_table_max_order={self.perm_table_max_order}"
            )
        dtype = np.uint16 if self.n_vertices < 2 ** 16 else np.int32
        return np.concatenate([perms.astype(dtype) for _, perms in self.iter_perms()])

    def perm_of(self, element: int) -> np.ndarray:
        if 'perm_table' in self.__dict__:
            row = int(np.searchsorted(self.members, element))
            return self.perm_table[row].astype(np.int64)
        return self.images([element])[0]

    def is_transitive(self) -> bool:
        """The orbit of vertex 0 is the set of cosets x H' for acting x"""
        return np.unique(self.coset_of[self.members]).size == self.n_vertices

    def mapping(self, source: int, target: int) -> np.ndarray:
        """All acting elements sending vertex `source` to vertex `target`"""
        table = self.table
        left = table.products([self.vertex_reps[target]], self.stabilizer)
        candidates = table.products(left, [table.inverse_index[self.vertex_reps[source]]])
        return np.sort(candidates[self.member_mask[candidates]])

    @cached_property
    def transporters(self) -> np.ndarray:
        """Least acting element sending vertex 0 to each vertex"""
        table = self.table
        n = self.n_vertices
        left = table.products(np.repeat(self.vertex_reps, 6), np.tile(self.stabilizer, n))
        candidates = table.products(left, [table.inverse_index[self.vertex_reps[0]]]).reshape(n, 6)
        candidates = np.where(self.member_mask[candidates], candidates, len(table))
        best = candidates.min(axis=1)
        if np.any(best == len(table)):
            raise VerificationError("Acting group is not transitive on vertices")
        return best

    def restrict_to_psl(self) -> "CosetAction":
        return replace(self, members=self.members[self.table.psl_mask[self.members]])

    def dump_lines(self) -> Iterator[str]:
        """One permutation per line as space-separated vertex images"""
        for _, perms in self.iter_perms():
            for row in perms:
                yield " ".join(str(int(v)) for v in row)


def _check_s3(table: GroupTable, h: int, nu: int) -> np.ndarray:
    stabilizer = table.subgroup_closure([h, nu])
    relations = (
        table.orders[h] == 3
        and table.orders[nu] == 2
        and table.conjugates(h, by=[nu])[0] == table.inverse_index[h]
    )
    if len(stabilizer) != 6 or not relations:
        raise NotS3Error(
            f"<{table.element(h)}, {table.element(nu)}> has order {len(stabilizer)}, "
            f"not a copy of S3"
        )
    return stabilizer


def _check_core_free(table: GroupTable, stabilizer: np.ndarray) -> None:
    # the core is the union of the conjugacy classes contained in H'
    for s in stabilizer:
        if s == table.identity_index:
            continue
        if np.isin(table.conjugacy_class(int(s)), stabilizer).all():
            raise NotCoreFreeError(f"Conjugacy class of {table.element(int(s))} lies inside H'")


def build_action(
    table: GroupTable,
    h: int,
    nu: int,
    perm_table_max_order: int = DEFAULT_PERM_TABLE_MAX_ORDER,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> CosetAction:
    """Left-multiplication action of PGL(2,q) on the cosets of <h, nu>

    Args:
        table: PGL(2,q) table
        h: Order-3 element
        nu: Involution inverting h
        perm_table_max_order: Largest group for which permutations are stored
        chunk_size: Elements per vectorised permutation batch

    Returns:
        The full action; its PSL(2,q) restriction is checked to be transitive
    """
    if not table.is_pgl:
        raise ValueError("Coset actions are built on the PGL(2,q) table")

    start = time.time()
    stabilizer = _check_s3(table, h, nu)
    _check_core_free(table, stabilizer)

    everything = np.arange(len(table))
    rep_of = np.stack([table.products(everything, [s]) for s in stabilizer], axis=1).min(axis=1)
    identity_rep = rep_of[table.identity_index]
    reps = np.unique(rep_of)
    vertex_reps = np.concatenate([[identity_rep], reps[reps != identity_rep]]).astype(np.int64)

    position = np.full(len(table), -1, dtype=np.int64)
    position[vertex_reps] = np.arange(len(vertex_reps))
    coset_of = position[rep_of]

    q = table.q
    expected = q * (q * q - 1) // 6
    if len(vertex_reps) != expected:
        raise VerificationError(f"Found {len(vertex_reps)} cosets, expected {expected}")

    action = CosetAction(
        table=table,
        members=everything,
        stabilizer=stabilizer,
        h=h,
        nu=nu,
        vertex_reps=vertex_reps,
        coset_of=coset_of,
        perm_table_max_order=perm_table_max_order,
        chunk_size=chunk_size,
    )
    if not action.restrict_to_psl().is_transitive():
        raise VerificationError(f"PSL(2,{q}) is not transitive on the cosets of H'")

    logger.info(f"Built coset action for q={q}: {expected} vertices in {time.time() - start:.2f}s")
    return action


@dataclass(frozen=True)
class Suborbit:
    """An orbit of a vertex stabilizer, with its paired orbit"""
    vertices: Tuple[int, ...]
    symmetric: bool
    paired: int

    @property
    def size(self) -> int:
        return len(self.vertices)


def suborbits(action: CosetAction, v: int = 0) -> List[Suborbit]:
    """Orbits of the stabilizer of v, the trivial suborbit first

    The suborbit containing w = g(v) is symmetric iff it also contains
    g^-1(v).
    """
    table = action.table
    stab = action.mapping(v, v)
    perms = action.images(stab)

    orbit_id = np.full(action.n_vertices, -1, dtype=np.int64)
    orbits: List[np.ndarray] = [np.array([v])]
    orbit_id[v] = 0
    for w in range(action.n_vertices):
        if orbit_id[w] < 0:
            orbit = np.unique(perms[:, w])
            orbit_id[orbit] = len(orbits)
            orbits.append(orbit)

    result = []
    for index, orbit in enumerate(orbits):
        g = action.mapping(v, int(orbit[0]))[0]
        back = table.products([table.inverse_index[g]], [action.vertex_reps[v]])
        paired = int(orbit_id[action.coset_of[back[0]]])
        result.append(Suborbit(
            vertices=tuple(int(x) for x in orbit),
            symmetric=paired == index,
            paired=paired,
        ))

    if sum(s.size for s in result) != action.n_vertices:
        raise VerificationError("Suborbit sizes do not sum to the vertex count")
    return result


def suborbit_defects(orbits: List[Suborbit], n_vertices: int, stabilizer_order: int) -> List[str]:
    """Ways in which a list of suborbits fails to be a paired partition of the vertices

    Args:
        orbits: Suborbits as returned by suborbits(), trivial one first
        n_vertices: Number of cosets
        stabilizer_order: Order of the point stabilizer

    Returns:
        Human-readable defects, empty when the suborbits are consistent
    """
    defects = []
    if not orbits or orbits[0].size != 1:
        defects.append("first suborbit is not the fixed vertex")
    covered = sorted(v for o in orbits for v in o.vertices)
    if covered != list(range(n_vertices)):
        defects.append(f"suborbits cover {len(covered)} vertex slots, not the {n_vertices} vertices once")
    for index, orbit in enumerate(orbits):
        if stabilizer_order % orbit.size:
            defects.append(f"suborbit {index} has size {orbit.size}, not dividing {stabilizer_order}")
        if not 0 <= orbit.paired < len(orbits):
            defects.append(f"suborbit {index} is paired with missing suborbit {orbit.paired}")
            continue
        partner = orbits[orbit.paired]
        if partner.paired != index or partner.size != orbit.size:
            defects.append(f"pairing of suborbits {index} and {orbit.paired} is not an involution")
        if orbit.symmetric != (orbit.paired == index):
            defects.append(f"suborbit {index} symmetric flag disagrees with its pairing")
    return defects


@dataclass
class CubicGraph:
    """Orbital graph of a symmetric suborbit of size 3"""
    graph: BitGraph
    suborbit: Suborbit
    candidates: int

    @property
    def arc_count(self) -> int:
        return sum(self.graph.degrees())


def build_cubic_graph(action: CosetAction) -> CubicGraph:
    """Orbital graph of the first symmetric suborbit of size 3 at vertex 0

    Raises:
        NotFoundError: when no symmetric suborbit of size 3 exists
    """
    orbits = suborbits(action, 0)
    candidates = [s for s in orbits if s.size == 3 and s.symmetric]
    if not candidates:
        raise NotFoundError(f"No symmetric suborbit of size 3 for q={action.table.q}")

    delta = candidates[0]
    n = action.n_vertices
    table = action.table
    targets = action.vertex_reps[list(delta.vertices)]
    products = table.products(np.repeat(action.transporters, 3), np.tile(targets, n))
    neighbours = action.coset_of[products].reshape(n, 3)

    graph = BitGraph.from_edges(
        n,
        ((u, int(w)) for u in range(n) for w in neighbours[u]),
        labels=[int(r) for r in action.vertex_reps],
    )
    graph.validate()
    if any(d != 3 for d in graph.degrees()):
        raise VerificationError("Orbital graph of a symmetric 3-suborbit is not cubic")

    if set(graph.neighbors(0)) != set(delta.vertices):
        raise VerificationError("Neighbourhood of vertex 0 is not the chosen suborbit")
    if not action.is_transitive():
        raise VerificationError("Action is not vertex-transitive")

    # the stabilizer of 0 and a transporter to each neighbour must be automorphisms;
    # with the suborbit an orbit of that stabilizer this makes the graph arc-transitive
    movers = np.concatenate([action.mapping(0, 0), action.transporters[list(delta.vertices)]])
    ordered = np.sort(neighbours, axis=1)
    for perm in action.images(movers):
        if not np.array_equal(ordered[perm], np.sort(perm[neighbours], axis=1)):
            raise VerificationError("Group element does not preserve the orbital graph")

    logger.info(f"Cubic orbital graph for q={table.q}: {n} vertices, {len(candidates)} candidate suborbit(s)")
    return CubicGraph(graph=graph, suborbit=delta, candidates=len(candidates))
