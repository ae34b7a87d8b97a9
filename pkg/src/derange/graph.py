"""Bitset Graph Module

Undirected graphs stored as one Python integer bitset per vertex, the
representation the clique engine branches on.
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from src.errors import VerificationError


def bits_iter(bits: int) -> Iterator[int]:
    """Indices of the set bits, lowest first"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bitset_from_mask(mask: np.ndarray) -> int:
    """Pack a boolean vector into an integer bitset (bit i = mask[i])"""
    packed = np.packbits(mask.astype(bool), bitorder='little')
    return int.from_bytes(packed.tobytes(), 'little')


@dataclass
class BitGraph:
    """Simple undirected graph on vertices 0..n-1

    Attributes:
        n: Vertex count
        adjacency: Neighbour bitset of every vertex
        labels: Group element index carried by every vertex
    """
    n: int
    adjacency: List[int]
    labels: List[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = list(range(self.n))
        if len(self.adjacency) != self.n or len(self.labels) != self.n:
            raise ValueError("Adjacency and labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[int]] = None,
    ) -> "BitGraph":
        adjacency = [0] * n
        for u, v in edges:
            if u == v:
                continue
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n, adjacency, list(labels) if labels is not None else [])

    @classmethod
    def from_rows(cls, rows: Sequence[np.ndarray], labels: Optional[Sequence[int]] = None) -> "BitGraph":
        """Build from boolean adjacency rows (diagonal is ignored)"""
        adjacency = []
        for u, row in enumerate(rows):
            adjacency.append(bitset_from_mask(row) & ~(1 << u))
        return cls(len(adjacency), adjacency, list(labels) if labels is not None else [])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def neighbors(self, u: int) -> List[int]:
        return list(bits_iter(self.adjacency[u]))

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    def degrees(self) -> List[int]:
        return [bits.bit_count() for bits in self.adjacency]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order"""
        result = []
        for u in range(self.n):
            for v in bits_iter(self.adjacency[u] >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def position_of(self, label: int) -> int:
        """Vertex carrying a given group element index"""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"No vertex labelled {label}")

    def induced(self, vertices: Sequence[int]) -> "BitGraph":
        """Subgraph induced on the given vertices, in the given order"""
        vertices = list(vertices)
        position = {v: i for i, v in enumerate(vertices)}
        adjacency = []
        for v in vertices:
            bits = 0
            for w in bits_iter(self.adjacency[v]):
                if w in position:
                    bits |= 1 << position[w]
            adjacency.append(bits)
        return BitGraph(len(vertices), adjacency, [self.labels[v] for v in vertices])

    def complement(self) -> "BitGraph":
        full = (1 << self.n) - 1
        adjacency = [(full ^ bits) & ~(1 << u) for u, bits in enumerate(self.adjacency)]
        return BitGraph(self.n, adjacency, list(self.labels))

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vertices = list(vertices)
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                if u == v or not self.has_edge(u, v):
                    return False
        return True

    def validate(self) -> None:
        """Check the graph is symmetric and loop-free"""
        for u, bits in enumerate(self.adjacency):
            if (bits >> u) & 1:
                raise VerificationError(f"Vertex {u} has a loop")
            if bits >> self.n:
                raise VerificationError(f"Vertex {u} has neighbours outside the graph")
            for v in bits_iter(bits):
                if not (self.adjacency[v] >> u) & 1:
                    raise VerificationError(f"Edge {u}->{v} is not symmetric")

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        nx.set_node_attributes(graph, dict(enumerate(self.labels)), 'element')
        return graph
