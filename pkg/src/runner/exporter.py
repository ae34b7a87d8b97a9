"""Export Module

Writes the graphs of a run to disk: Gamma on C_3 and the graph induced on
N (for q = 2 mod 3), the cubic orbital graph when one exists, and the
witnesses of the maximum intersecting sets. File contents depend only on q
and the configuration.
"""

from typing import Dict, List
from dataclasses import dataclass, field
from pathlib import Path
import logging

from src.atlas import build_cubic_graph
from src.clique import max_intersecting
from src.derange import BitGraph, write_dot, write_edge_list, write_witness
from src.errors import NotFoundError, TooLargeError
from src.runner.config import RunConfig
from src.runner.pipeline import QContext, analyse_subconstituent, build_context, isolated

logger = logging.getLogger(__name__)


def q_directory(out: str, q: int) -> Path:
    return Path(out) / f"q{q}"


def export_graph(graph: BitGraph, directory: Path, name: str, config: RunConfig, context: QContext) -> List[Path]:
    """DOT and edge-list files for one graph, as enabled in the configuration"""
    if graph.n > config.derange_config.dense_max_vertices:
        raise TooLargeError(
            f"{name} has {graph.n} vertices, above dense_max_vertices={config.derange_config.dense_max_vertices}"
        )
    paths = []
    if config.dot:
        paths.append(write_dot(graph, directory / f"{name}.dot", name, context.table))
    if config.edges:
        paths.append(write_edge_list(graph, directory / f"{name}.edges"))
    return paths


def export_graphs(context: QContext, config: RunConfig) -> Dict[str, BitGraph]:
    """The graphs exported for this q, by file stem"""
    graphs: Dict[str, BitGraph] = {}
    if context.order3_case:
        analysis = analyse_subconstituent(context, config)
        graphs['gamma'] = analysis.gamma
        graphs['gamma_tilde'] = analysis.gamma.induced(analysis.n)
    try:
        graphs['cubic'] = build_cubic_graph(context.action).graph
    except NotFoundError as e:
        logger.info(f"Skipping cubic graph for q={context.q}: {e}")
    return graphs


def export_q(q: int, config: RunConfig) -> List[Path]:
    context = build_context(q, config)
    directory = q_directory(config.out, q)
    paths: List[Path] = []

    for name, graph in export_graphs(context, config).items():
        paths.extend(export_graph(graph, directory, name, config, context))

    if config.witness:
        for kind in config.groups:
            result = max_intersecting(context.action, which=kind, budget=config.budget, workers=config.workers)
            paths.append(write_witness(directory / f"{kind.value}.witness", context.table, result.witness))

    logger.info(f"Exported {len(paths)} files for q={q} to {directory}")
    return paths


@dataclass
class ExportResult:
    files: Dict[int, List[Path]] = field(default_factory=dict)
    errors: Dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors


def cmd_export(config: RunConfig) -> ExportResult:
    """Files written per q; a q that fails is recorded with its error"""
    result = ExportResult()
    for q in config.q_list:
        paths, error = isolated(q, lambda: export_q(q, config))
        result.files[q] = paths or []
        if error is not None:
            result.errors[q] = f"{type(error).__name__}: {error}"
    return result
