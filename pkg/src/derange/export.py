"""Graph Export Module

Deterministic DOT, edge-list and witness files for the graphs and cliques
produced by a run.
"""

from pathlib import Path
from typing import Iterable, Optional, Union
import logging

import networkx as nx
from jinja2 import Template

from src.atlas.table import GroupTable
from src.derange.graph import BitGraph

logger = logging.getLogger(__name__)

DOT_TEMPLATE = Template(
    "graph {{ name }} {\n"
    "{% for vertex, label in nodes %}"
    "  {{ vertex }} [label=\"{{ label }}\"];\n"
    "{% endfor %}"
    "{% for u, v in edges %}"
    "  {{ u }} -- {{ v }};\n"
    "{% endfor %}"
    "}\n",
    keep_trailing_newline=True,
)


def to_dot(graph: BitGraph, name: str, table: Optional[GroupTable] = None) -> str:
    """Render a graph as DOT; vertices are labelled by their matrices when a table is given"""
    if table is not None:
        labels = [repr(table.element(label)) for label in graph.labels]
    else:
        labels = [str(label) for label in graph.labels]
    return DOT_TEMPLATE.render(name=name, nodes=list(enumerate(labels)), edges=graph.edges())


def write_dot(graph: BitGraph, path: Union[str, Path], name: str, table: Optional[GroupTable] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dot(graph, name, table))
    logger.info(f"Wrote {graph.n}-vertex graph to {path}")
    return path


def write_edge_list(graph: BitGraph, path: Union[str, Path]) -> Path:
    """One edge per line as two vertex indices, lowest first"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    nx.write_edgelist(graph.to_networkx(), path, data=False)
    logger.info(f"Wrote {graph.edge_count()} edges to {path}")
    return path


def write_witness(path: Union[str, Path], table: GroupTable, elements: Iterable[int]) -> Path:
    """One element per line: table index then its four field encodings"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{index} {table.element(index).serialize()}" for index in sorted(elements)]
    path.write_text("\n".join(lines) + "\n")
    return path
