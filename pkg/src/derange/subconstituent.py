"""Subconstituent Module

This module analyses the graph Gamma induced by the complement of the
derangement graph on the class C_3 of order-3 elements, for q = 2 mod 3:
the neighbourhood Delta of h, the set N = Delta minus h^-1, and the graph
induced on N.
"""

from typing import TYPE_CHECKING, FrozenSet, List, Optional, Tuple
from dataclasses import asdict, dataclass, field
from enum import Enum
import logging

import numpy as np

if TYPE_CHECKING:
    from src.atlas.action import CosetAction
from src.atlas.table import GroupTable
from src.derange.derangement import induced_cayley_graph
from src.derange.graph import BitGraph
from src.errors import (
    UnexpectedDegreeError,
    VerificationError,
    WrongCharacteristicError,
    WrongCongruenceError,
)
from src.field import FieldSpec
from src.projective import trace_invariant

logger = logging.getLogger(__name__)


def _require_order3_case(spec: FieldSpec) -> None:
    if spec.p == 3:
        raise WrongCharacteristicError("Order-3 subconstituents need p != 3")
    if spec.q % 3 != 2:
        raise WrongCongruenceError(f"Order-3 subconstituents need q = 2 mod 3, got q={spec.q}")


def gamma_on_c3(action: 'CosetAction', workers: int = 1) -> BitGraph:
    """Complement derangement graph induced on C_3; x ~ y iff y x^-1 has order 3

    Args:
        action: Coset action carrying the PGL(2,q) table and h
        workers: Threads filling adjacency rows

    Returns:
        Gamma, labelled by element indices, regular of degree |Delta|
    """
    table = action.table
    _require_order3_case(table.spec)

    q = table.q
    psl = np.nonzero(table.psl_mask)[0]
    c3 = np.unique(table.conjugates(action.h, by=psl))
    if len(c3) != q * (q - 1) or not np.array_equal(c3, table.conjugacy_class(action.h)):
        raise VerificationError(f"C_3 is not a single PSL-class of size q(q-1) for q={q}")

    gamma = induced_cayley_graph(table, c3, table.orders == 3, workers=workers)
    degrees = set(gamma.degrees())
    if len(degrees) != 1:
        raise VerificationError(f"Gamma is not regular for q={q}: degrees {sorted(degrees)}")
    logger.info(f"Gamma for q={q}: {gamma.n} vertices, degree {degrees.pop()}")
    return gamma


def delta_and_N(gamma: BitGraph, table: GroupTable, h: int) -> Tuple[List[int], List[int]]:
    """Neighbourhood Delta of h in Gamma and N = Delta minus h^-1, as vertex positions"""
    hv = gamma.position_of(h)
    h_inv = gamma.position_of(int(table.inverse_index[h]))
    delta = gamma.neighbors(hv)
    if h_inv not in delta:
        raise VerificationError("h and h^-1 are not adjacent in Gamma")

    n = [v for v in delta if v != h_inv]
    if len(n) not in (0, table.q + 1):
        raise VerificationError(f"|N| = {len(n)}, expected 0 or {table.q + 1}")
    return delta, n


class GammaKind(Enum):
    EMPTY = "empty"
    PERFECT_MATCHING_ONLY = "perfect_matching_only"
    CAYLEY_ON_N = "cayley_on_n"


class TildeShape(Enum):
    EMPTY_GRAPH = "empty_graph"
    MATCHING = "matching"
    CYCLE_UNION = "cycle_union"


@dataclass
class SubconstituentReport:
    """Shape of Gamma and of the graph induced on N"""
    kind: GammaKind
    n_size: int
    shape: TildeShape
    degree: int
    cycle_lengths: List[int] = field(default_factory=list)
    omega_gamma: Optional[int] = None

    def to_dict(self) -> dict:
        data = asdict(self)
        data['kind'] = self.kind.value
        data['shape'] = self.shape.value
        return data


def _cycle_lengths(graph: BitGraph) -> List[int]:
    seen = [False] * graph.n
    lengths = []
    for start in range(graph.n):
        if seen[start]:
            continue
        length, previous, current = 0, -1, start
        while not seen[current]:
            seen[current] = True
            length += 1
            following = [w for w in graph.neighbors(current) if w != previous]
            previous, current = current, following[0]
        lengths.append(length)
    return sorted(lengths)


def classify_gamma_tilde(gamma: BitGraph, n: List[int], q: int) -> SubconstituentReport:
    """Classify the subgraph induced on N by its (uniform) degree

    Raises:
        UnexpectedDegreeError: when the degree is not uniform or exceeds 2
    """
    if gamma.edge_count() == 0:
        kind = GammaKind.EMPTY
    elif not n:
        kind = GammaKind.PERFECT_MATCHING_ONLY
    else:
        kind = GammaKind.CAYLEY_ON_N
        if len(n) != q + 1:
            raise VerificationError(f"|N| = {len(n)} but q + 1 = {q + 1}")

    tilde = gamma.induced(n)
    degrees = set(tilde.degrees()) or {0}
    if len(degrees) != 1 or max(degrees) > 2:
        raise UnexpectedDegreeError(f"Graph on N has degrees {sorted(degrees)} for q={q}")

    degree = degrees.pop()
    lengths: List[int] = []
    if degree == 0:
        shape = TildeShape.EMPTY_GRAPH
    elif degree == 1:
        shape = TildeShape.MATCHING
    else:
        shape = TildeShape.CYCLE_UNION
        lengths = _cycle_lengths(tilde)
        if min(lengths) < 4:
            raise VerificationError(f"Graph on N has a cycle of length {min(lengths)} for q={q}")

    return SubconstituentReport(kind=kind, n_size=len(n), shape=shape, degree=degree, cycle_lengths=lengths)


def check_h_conjugate_nonadjacency(gamma: BitGraph, table: GroupTable, h: int, u: int) -> bool:
    """True iff U is adjacent to neither h U h^-1 nor h^2 U h^-2 (U at vertex u)"""
    element = gamma.labels[u]
    h2 = int(table.inverse_index[h])
    first = gamma.position_of(int(table.conjugates(element, by=[h])[0]))
    second = gamma.position_of(int(table.conjugates(element, by=[h2])[0]))
    return not gamma.has_edge(u, first) and not gamma.has_edge(u, second)


def commutator_tau(table: GroupTable, h: int, element: int) -> int:
    """tau of h U h^-1 U^-1"""
    g, u = table.element(h), table.element(element)
    return trace_invariant(g * u * ~g * ~u).tau.value


def alpha_adjacency_solutions(spec: FieldSpec) -> FrozenSet[int]:
    """All alpha with 2(alpha + 1) = +-(alpha^2 + alpha + 1)

    The minus branch never has solutions since -3 is a nonsquare.
    """
    _require_order3_case(spec)
    plus, minus = set(), set()
    for alpha in spec.elements():
        lhs = spec.mul(spec.embed(2), spec.add(alpha, 1))
        rhs = spec.add(spec.add(spec.mul(alpha, alpha), alpha), 1)
        if lhs == rhs:
            plus.add(alpha)
        if lhs == spec.neg(rhs):
            minus.add(alpha)

    if minus:
        raise VerificationError(f"Minus branch has solutions {sorted(minus)} for q={spec.q}")
    if len(plus) > 2:
        raise VerificationError(f"{len(plus)} adjacency solutions for q={spec.q}")
    return frozenset(plus)


def centralizer_regular_on_N(
    gamma: BitGraph,
    table: GroupTable,
    n: List[int],
    centralizer: np.ndarray,
) -> bool:
    """The centralizer of h permutes N regularly by conjugation"""
    if not n:
        return True
    labels = {gamma.labels[v] for v in n}
    orbit = table.conjugates(gamma.labels[n[0]], by=centralizer)
    return len(set(orbit.tolist())) == len(centralizer) and set(orbit.tolist()) == labels
