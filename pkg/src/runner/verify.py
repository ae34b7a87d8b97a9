"""Structural Verification Module

Named pass/fail checks of the group-theoretic and arithmetic facts the
density computation rests on. Every check is run per q and reported as a
Verdict row; a check whose underlying operation raises counts as failed.
"""

from typing import Callable, Iterator, List, Tuple
import logging

import numpy as np

from src.atlas import (
    GroupKind,
    build_cubic_graph,
    centralizer_of_h,
    enumerate_group,
    expected_normalizer,
    normalizer_of_cyclic,
    normalizer_samples,
    s3_class_count,
    suborbit_defects,
    suborbits,
    transversal_K,
)
from src.conics import (
    cayley_trace,
    commutator_with_h,
    conjugate_h_by_k,
    count_conic,
    gamma_constant,
    literal_cayley_trace,
    trace_equation_solutions,
)
from src.derange import (
    centralizer_regular_on_N,
    check_h_conjugate_nonadjacency,
    commutator_tau,
    fixer_set,
    fixers_match_stabilizer_conjugates,
)
from src.errors import DensityToolkitError, NotFoundError
from src.field import FieldElement
from src.projective import pnormalize
from src.projective.batch import batch_trace_invariant
from src.runner.config import RunConfig
from src.runner.pipeline import QContext, analyse_subconstituent, build_context, isolated
from src.runner.reporting import Verdict

logger = logging.getLogger(__name__)

Check = Tuple[bool, str]


def _run(q: int, name: str, fn: Callable[[], Check]) -> Verdict:
    try:
        passed, detail = fn()
    except DensityToolkitError as e:
        logger.error(f"Check {name} raised for q={q}: {e}")
        passed, detail = False, f"{type(e).__name__}: {e}"
    if not passed:
        logger.warning(f"Check {name} failed for q={q}: {detail}")
    return Verdict(q=q, check=name, passed=bool(passed), detail=detail)


def check_trace_order3(context: QContext) -> Check:
    """In PSL(2,q), g != 1 has order 3 iff tau(g) = 1"""
    table = context.table
    psl = np.nonzero(table.psl_mask)[0]
    psl = psl[psl != table.identity_index]
    tau = batch_trace_invariant(context.spec, table.entries[psl])
    order3 = table.orders[psl] == 3
    mismatches = int(np.count_nonzero(order3 != (tau == 1)))
    return mismatches == 0, f"{int(order3.sum())} elements of order 3, {mismatches} mismatches"


def check_trace_involution(context: QContext) -> Check:
    """In PGL(2,q), g != 1 is an involution iff tau(g) = 0"""
    table, spec = context.table, context.spec
    others = np.arange(len(table))
    others = others[others != table.identity_index]
    tau = batch_trace_invariant(spec, table.entries[others])
    involution = table.orders[others] == 2
    mismatches = int(np.count_nonzero(involution != (tau == 0)))

    swap = table.index_of(pnormalize(spec, [[0, 1], [1, 0]]))
    where = "PSL" if table.psl_mask[swap] else "PGL minus PSL"
    return mismatches == 0, f"{int(involution.sum())} involutions, [[0,1],[1,0]] in {where}"


def check_centralizer(context: QContext) -> Check:
    centralizer = centralizer_of_h(context.table, context.h)
    return True, f"|C(h)| = {len(centralizer)}, cyclic"


def check_transversal(context: QContext) -> Check:
    report = transversal_K(context.table)
    expected = context.q % 3 == 2
    kind = "left transversal" if report.is_transversal else "injective, not onto"
    return report.is_transversal == expected, kind


def check_s3_classes(context: QContext) -> Check:
    counts = s3_class_count(context.table)
    p, k = context.spec.p, context.spec.k
    if p == 3:
        expected_classes, expected_inside = 1, int(k % 2 == 0)
    else:
        expected_classes, expected_inside = 2, 1
    passed = counts.classes == expected_classes and counts.inside_psl == expected_inside
    return passed, f"{counts.classes} classes ({counts.inside_psl} inside PSL), {counts.subgroups} subgroups"


def normalizer_checks(context: QContext) -> Iterator[Tuple[str, Callable[[], Check]]]:
    """One check per normalizer column, for PSL(2,q) and PGL(2,q)"""
    psl_table = enumerate_group(context.spec, GroupKind.PSL, max_group_order=len(context.table))
    for table in (psl_table, context.table):
        for column, g in sorted(normalizer_samples(table).items()):
            def check(table=table, g=g) -> Check:
                order, shape = normalizer_of_cyclic(table, g)
                expected = expected_normalizer(table, g)
                row = f"q = {table.q % 4} (mod 4)"
                return shape == expected, f"{row}, o(g)={int(table.orders[g])}: {shape}, expected {expected}"
            yield f"normalizer-{table.kind.value}-{column}", check


def check_fixers(context: QContext, kind: GroupKind) -> Check:
    action = context.action.restrict_to_psl() if kind is GroupKind.PSL else context.action
    fixers = fixer_set(action)
    return fixers_match_stabilizer_conjugates(action, fixers), f"{len(fixers)} fixers"


def check_suborbits(context: QContext) -> Check:
    action = context.action
    orbits = suborbits(action)
    defects = suborbit_defects(orbits, action.n_vertices, len(action.vertex_stabilizer))
    if defects:
        return False, "; ".join(defects)
    sizes = [o.size for o in orbits]
    symmetric = sum(1 for o in orbits if o.symmetric)
    return True, f"{len(orbits)} suborbits, {symmetric} symmetric, sizes {sorted(sizes)}"


def check_conics(context: QContext) -> Iterator[Tuple[str, Callable[[], Check]]]:
    spec, q = context.spec, context.q
    three = FieldElement(spec, spec.embed(3))
    gamma = gamma_constant(spec)

    def plus() -> Check:
        count = count_conic(spec, three, three * gamma)
        return count == q + 1, f"{count} points on X^2 + 3Y^2 + 3gamma = 0"

    def minus() -> Check:
        count = count_conic(spec, three, 0)
        return count == 1, f"{count} points on X^2 + 3Y^2 = 0"

    yield "conic-plus=q+1", plus
    yield "conic-minus=1", minus


def order3_checks(context: QContext, config: RunConfig) -> Iterator[Tuple[str, Callable[[], Check]]]:
    """Subconstituent and trace-equation checks for q = 2 mod 3, p != 3"""
    spec, table, h, q = context.spec, context.table, context.h, context.q
    try:
        analysis = analyse_subconstituent(context, config)
    except DensityToolkitError as e:
        message = f"{type(e).__name__}: {e}"
        yield "subconstituent", lambda: (False, message)
        return
    report = analysis.report
    n_labels = {analysis.gamma.labels[v] for v in analysis.n}
    h_element = table.element(h)

    def gamma_tilde() -> Check:
        return True, f"{report.shape.value}, degree {report.degree}, |N| = {report.n_size}"

    def cycles() -> Check:
        lengths = report.cycle_lengths
        return all(length >= 4 for length in lengths), f"cycle lengths {lengths}"

    def nonadjacency() -> Check:
        bad = [
            u for u in analysis.n
            if not check_h_conjugate_nonadjacency(analysis.gamma, table, h, u)
            or commutator_tau(table, h, analysis.gamma.labels[u]) != 0
        ]
        return not bad, f"{len(analysis.n) - len(bad)}/{len(analysis.n)} vertices of N"

    def trichotomy() -> Check:
        return len(analysis.solutions) == report.degree, (
            f"{len(analysis.solutions)} solutions {sorted(analysis.solutions)}, degree {report.degree}"
        )

    def regular() -> Check:
        return centralizer_regular_on_N(analysis.gamma, table, analysis.n, analysis.centralizer), (
            f"|C(h)| = {len(analysis.centralizer)}, |N| = {len(analysis.n)}"
        )

    def trace_equation() -> Check:
        minus = trace_equation_solutions(spec, -1)
        plus = trace_equation_solutions(spec, 1)
        conjugates = {table.index_of(conjugate_h_by_k(spec, spec.element(a), spec.element(b))) for a, b in plus}
        return conjugates == n_labels, f"minus branch {sorted(minus)}, {len(plus)} plus pairs giving N"

    def conjugation() -> Check:
        for a in spec.elements():
            for b in range(1, q):
                fa, fb = spec.element(a), spec.element(b)
                k = pnormalize(spec, [[1, fa], [0, fb]])
                if conjugate_h_by_k(spec, fa, fb) != k * h_element * ~k:
                    return False, f"mismatch at a={a}, b={b}"
                if commutator_with_h(spec, fa, fb) != k * h_element * ~k * ~h_element:
                    return False, f"commutator mismatch at a={a}, b={b}"
        return True, f"{q * (q - 1)} pairs"

    def u_form() -> Check:
        for a, b in trace_equation_solutions(spec, 1):
            fa, fb = spec.element(a), spec.element(b)
            if conjugate_h_by_k(spec, fa, fb) != pnormalize(spec, [[fa, fb - fa - 1], [fb, -1 - fa]]):
                return False, f"U form fails at a={a}, b={b}"
        return True, "k h k^-1 = [[a, b-a-1], [b, -1-a]] on the plus branch"

    def cayley() -> Check:
        pairs = sorted(trace_equation_solutions(spec, 1))
        checked = 0
        for alpha in spec.elements():
            fa = spec.element(alpha)
            if (fa * fa + fa + 1).is_zero():
                continue
            closed = cayley_trace(spec, fa)
            for a, b in pairs:
                if literal_cayley_trace(spec, fa, spec.element(a), spec.element(b)) != closed:
                    return False, f"trace mismatch at alpha={alpha}, (a, b)=({a}, {b})"
                checked += 1
        return True, f"{checked} products"

    yield "gamma-tilde", gamma_tilde
    if report.cycle_lengths:
        yield "gamma-tilde-cycles>=4", cycles
    yield "nonadjacency", nonadjacency
    yield "alpha-trichotomy", trichotomy
    yield "centralizer-regular-on-N", regular
    yield "trace-equation", trace_equation
    yield "waypoint-conjugation", conjugation
    yield "waypoint-u-form", u_form
    yield "waypoint-cayley-trace", cayley


def verify_q(q: int, config: RunConfig) -> List[Verdict]:
    """Every check for one q at the configured level"""
    context = build_context(q, config)
    checks: List[Tuple[str, Callable[[], Check]]] = [
        ("trace-order3", lambda: check_trace_order3(context)),
        ("trace-involution", lambda: check_trace_involution(context)),
        ("s3-classes", lambda: check_s3_classes(context)),
    ]
    if context.spec.p != 3:
        checks.append(("centralizer", lambda: check_centralizer(context)))
    checks.extend(normalizer_checks(context))

    if config.level == 'full':
        if context.spec.p != 3:
            checks.append(("transversal", lambda: check_transversal(context)))
        checks.append(("fixers-psl", lambda: check_fixers(context, GroupKind.PSL)))
        checks.append(("fixers-pgl", lambda: check_fixers(context, GroupKind.PGL)))
        checks.append(("suborbits", lambda: check_suborbits(context)))

    if context.order3_case:
        checks.extend(check_conics(context))
        checks.extend(order3_checks(context, config))

    verdicts = [_run(q, name, fn) for name, fn in checks]

    if config.level == 'full':
        try:
            cubic = build_cubic_graph(context.action)
            verdicts.append(Verdict(
                q=q, check="cubic-graph", passed=True,
                detail=f"{cubic.graph.n} vertices, {cubic.arc_count} arcs",
            ))
        except NotFoundError as e:
            logger.info(f"No cubic orbital graph for q={q}: {e}")
    return verdicts


def cmd_verify(config: RunConfig) -> List[Verdict]:
    """Verdict rows for every requested q; a q that cannot be built gets one failed row"""
    verdicts: List[Verdict] = []
    for q in config.q_list:
        rows, error = isolated(q, lambda: verify_q(q, config))
        if error is not None:
            rows = [Verdict(q=q, check="build", passed=False, detail=f"{type(error).__name__}: {error}")]
        verdicts.extend(rows)
        failed = sum(1 for v in rows if not v.passed)
        logger.info(f"q={q}: {len(rows) - failed}/{len(rows)} checks passed")
    return verdicts
