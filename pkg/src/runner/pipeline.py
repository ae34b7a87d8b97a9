"""Density Pipeline Module

This module runs the full computation for each requested q: field and
group construction, the coset action, the exact maximum intersecting sets
of PSL(2,q) and PGL(2,q), the comparison against the closed-form densities
and, for q = 2 mod 3, the analysis of the order-3 subconstituent.
"""

from typing import Callable, Dict, Iterator, List, Optional, Tuple, TypeVar
from dataclasses import dataclass, field
from fractions import Fraction
import logging
import time

import numpy as np

from src.atlas import (
    CosetAction,
    GroupKind,
    GroupTable,
    build_action,
    canonical_h,
    centralizer_of_h,
    enumerate_group,
    find_inverting_involution,
    group_order,
)
from src.clique import CliqueResult, max_clique, max_intersecting
from src.conics import format_fraction, predicted_density, stabilizer_order, weak_array
from src.derange import (
    BitGraph,
    SubconstituentReport,
    alpha_adjacency_solutions,
    centralizer_regular_on_N,
    classify_gamma_tilde,
    delta_and_N,
    gamma_on_c3,
)
from src.errors import DensityToolkitError
from src.field import FieldSpec, field_for_order
from src.runner.config import RunConfig
from src.runner.reporting import DensityReport, GroupDensity

logger = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass
class QContext:
    """Objects shared by every command for one q"""
    q: int
    spec: FieldSpec
    table: GroupTable
    h: int
    nu: int
    action: CosetAction
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def order3_case(self) -> bool:
        """q = 2 mod 3 with p != 3, where the subconstituent analysis applies"""
        return self.spec.p != 3 and self.q % 3 == 2


@dataclass
class SubconstituentAnalysis:
    gamma: BitGraph
    delta: List[int]
    n: List[int]
    report: SubconstituentReport
    solutions: frozenset
    centralizer: np.ndarray


def timed(timings: Dict[str, float], name: str, fn: Callable[..., T], *args, **kwargs) -> T:
    start = time.time()
    try:
        return fn(*args, **kwargs)
    finally:
        timings[name] = round(time.time() - start, 4)


def build_context(q: int, config: RunConfig) -> QContext:
    """Field, PGL(2,q) table, h, nu and the coset action for one q"""
    timings: Dict[str, float] = {}
    spec = field_for_order(
        q,
        max_order=config.field_config.max_order,
        table_max_order=max(config.field_config.table_max_order, q),
    )
    table = timed(
        timings, 'enumerate', enumerate_group, spec, GroupKind.PGL,
        max_group_order=config.atlas_config.max_group_order,
    )
    h = canonical_h(table)
    nu = find_inverting_involution(table, h)
    action = timed(
        timings, 'action', build_action, table, h, nu,
        perm_table_max_order=config.atlas_config.perm_table_max_order,
        chunk_size=config.atlas_config.chunk_size,
    )
    return QContext(q=q, spec=spec, table=table, h=h, nu=nu, action=action, timings=timings)


def analyse_subconstituent(context: QContext, config: RunConfig) -> SubconstituentAnalysis:
    """Gamma on C_3, Delta, N and the shape of the graph induced on N

    Raises:
        WrongCharacteristicError, WrongCongruenceError: outside q = 2 mod 3, p != 3
    """
    table, h = context.table, context.h
    gamma = timed(context.timings, 'gamma', gamma_on_c3, context.action, workers=config.workers)
    delta, n = delta_and_N(gamma, table, h)
    report = classify_gamma_tilde(gamma, n, context.q)

    omega = max_clique(
        gamma,
        seed=[gamma.position_of(h)],
        budget=config.budget,
        raise_on_budget=False,
    )
    if not omega.budget_exceeded:
        report.omega_gamma = omega.size

    return SubconstituentAnalysis(
        gamma=gamma,
        delta=delta,
        n=n,
        report=report,
        solutions=alpha_adjacency_solutions(context.spec),
        centralizer=centralizer_of_h(table, h),
    )


def group_density(context: QContext, kind: GroupKind, config: RunConfig) -> Tuple[GroupDensity, CliqueResult]:
    """Exact alpha and rho for one group, compared with the prediction"""
    prediction = predicted_density(context.q, kind)
    result = timed(
        context.timings, f'clique_{kind.value}', max_intersecting,
        context.action, which=kind, budget=config.budget,
        workers=config.workers, raise_on_budget=False,
    )
    stabilizer = stabilizer_order(kind)
    rho = Fraction(result.size, stabilizer)
    entry = GroupDensity(
        group=kind.value,
        group_order=group_order(context.q, kind),
        stabilizer_order=stabilizer,
        alpha=result.size,
        rho=format_fraction(rho),
        predicted=format_fraction(prediction.rho),
        source=prediction.source,
        match=not result.budget_exceeded and rho == prediction.rho,
        budget_exceeded=result.budget_exceeded,
        nodes_explored=result.nodes_explored,
        elapsed=result.elapsed,
        witness=[int(x) for x in result.witness],
    )
    if result.budget_exceeded:
        logger.warning(f"Budget exhausted for {kind.value.upper()}(2,{context.q}); best alpha so far {result.size}")
    elif not entry.match:
        logger.error(
            f"Density mismatch for {kind.value.upper()}(2,{context.q}): "
            f"computed {entry.rho}, predicted {entry.predicted}"
        )
    return entry, result


def density_report(q: int, config: RunConfig) -> DensityReport:
    """Run the pipeline for one q; raises on any toolkit error"""
    report = DensityReport(q=q)
    report.weak_array = [format_fraction(r) for r in weak_array(q)]

    context = build_context(q, config)
    report.vertices = context.action.n_vertices
    report.verdicts['action-transitive'] = context.action.restrict_to_psl().is_transitive()

    for kind in config.groups:
        entry, _ = group_density(context, kind, config)
        report.groups[kind.value] = entry

    computed = {
        kind: Fraction(entry.alpha, entry.stabilizer_order)
        for kind, entry in report.groups.items()
        if not entry.budget_exceeded
    }
    if len(computed) == 2:
        report.monotone = computed['pgl'] <= computed['psl']
        report.computed_array = [format_fraction(r) for r in sorted(set(computed.values()))]

    if context.order3_case:
        analysis = analyse_subconstituent(context, config)
        report.subconstituent = analysis.report.to_dict()
        report.verdicts['alpha-solutions=degree'] = len(analysis.solutions) == analysis.report.degree
        report.verdicts['centralizer-regular-on-N'] = centralizer_regular_on_N(
            analysis.gamma, context.table, analysis.n, analysis.centralizer
        )

    report.timings = dict(context.timings)
    return report


def isolated(q: int, fn: Callable[[], T]) -> Tuple[Optional[T], Optional[DensityToolkitError]]:
    """Run one q; a toolkit error is logged and returned instead of raised"""
    try:
        return fn(), None
    except DensityToolkitError as e:
        logger.error(f"q={q} failed with {type(e).__name__}: {e}")
        return None, e


def iter_density_reports(config: RunConfig) -> Iterator[DensityReport]:
    for q in config.q_list:
        start = time.time()
        report, error = isolated(q, lambda: density_report(q, config))
        if error is not None:
            report = DensityReport(q=q, error=str(error), error_type=type(error).__name__)
        logger.info(f"q={q} finished in {time.time() - start:.2f}s ({'ok' if report.ok else 'not ok'})")
        yield report


def cmd_density(config: RunConfig) -> List[DensityReport]:
    """Density reports for every requested q, one bad q never aborting the batch"""
    return list(iter_density_reports(config))
