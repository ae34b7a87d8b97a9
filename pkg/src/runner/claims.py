"""PGL Claims Module

Exhaustive confirmation that a maximum intersecting set of PGL(2,q) has
exactly six elements. After translating and conjugating, an intersecting
set meeting PSL(2,q) twice contains 1 and h, so its part outside PSL(2,q)
is a clique in the graph on

    C = {X outside PSL(2,q) : X and X h^-1 both fix a vertex}

with X ~ Y iff Y X^-1 fixes a vertex. The checks below bound that clique.
"""

from typing import List
from dataclasses import dataclass
import logging

import numpy as np

from src.atlas import GroupKind
from src.clique import max_clique, max_intersecting
from src.derange import BitGraph, fixer_set, induced_cayley_graph
from src.errors import WrongCharacteristicError, WrongCongruenceError
from src.projective import pnormalize
from src.runner.config import RunConfig
from src.runner.pipeline import QContext, build_context, isolated
from src.runner.reporting import Verdict

logger = logging.getLogger(__name__)

PGL_ALPHA = 6


@dataclass
class ClaimGraph:
    """Outside-PSL fixers adjacent to both 1 and h"""
    graph: BitGraph
    fixer_mask: np.ndarray

    @property
    def elements(self) -> List[int]:
        return self.graph.labels


def require_claim_case(q: int, p: int) -> None:
    """q = 2 mod 3, or p = 0, +-1 mod 5"""
    if p == 3:
        raise WrongCharacteristicError("The PGL(2,q) claims are stated for p != 3")
    if q % 3 != 2 and p % 5 not in (0, 1, 4):
        raise WrongCongruenceError(f"q={q} is neither 2 mod 3 nor p = 0, +-1 mod 5")


def claim_graph(context: QContext, workers: int = 1) -> ClaimGraph:
    table, action = context.table, context.action
    fixers = fixer_set(action)
    fixer_mask = np.zeros(len(table), dtype=bool)
    fixer_mask[fixers] = True

    outside = np.nonzero(fixer_mask & ~table.psl_mask)[0]
    h_inv = int(table.inverse_index[context.h])
    shifted = table.products(outside, [h_inv])
    members = outside[fixer_mask[shifted]]

    graph = induced_cayley_graph(table, members, fixer_mask, workers=workers)
    logger.info(f"Claim graph for q={context.q}: {graph.n} vertices, {graph.edge_count()} edges")
    return ClaimGraph(graph=graph, fixer_mask=fixer_mask)


def has_involution_form(context: QContext, element: int) -> bool:
    """Normalized [[a, b], [c, d]] with d = -a and c = b + a"""
    spec = context.spec
    a, b, c, d = (int(e) for e in context.table.entries[element])
    return d == spec.neg(a) and c == spec.add(b, a)


def claims_q(q: int, config: RunConfig) -> List[Verdict]:
    context = build_context(q, config)
    require_claim_case(q, context.spec.p)
    table, spec = context.table, context.spec
    claim = claim_graph(context, workers=config.workers)
    graph = claim.graph
    verdicts: List[Verdict] = []

    def add(check: str, passed: bool, detail: str) -> None:
        if not passed:
            logger.warning(f"Claim check {check} failed for q={q}: {detail}")
        verdicts.append(Verdict(q=q, check=check, passed=bool(passed), detail=detail))

    orders = table.orders[graph.labels] if graph.n else np.array([], dtype=np.int64)
    add("claim-involutions", bool(np.all(orders == 2)), f"{graph.n} elements in C, all involutions")

    bad_form = [x for x in graph.labels if not has_involution_form(context, x)]
    add("claim-form", not bad_form, f"{graph.n - len(bad_form)}/{graph.n} of the form [[x, t], [t+x, -x]]")

    nonzero = [v for v, x in enumerate(graph.labels) if table.entries[x][0] != 0]
    nonzero_set = set(nonzero)
    inner = max_clique(graph.induced(nonzero), budget=config.budget) if nonzero else None
    inner_size = inner.size if inner else 0
    add("claim-1-no-4-clique", inner_size <= 3, f"largest clique with x != 0 has size {inner_size}")

    swap = table.index_of(pnormalize(spec, [[0, 1], [1, 0]]))
    if swap in graph.labels:
        v = graph.position_of(swap)
        neighbours = [u for u in graph.neighbors(v) if u in nonzero_set]
        add("claim-2-swap-degree", len(neighbours) <= 2, f"[[0,1],[1,0]] has {len(neighbours)} neighbours with x != 0")
    else:
        add("claim-2-swap-degree", True, "[[0,1],[1,0]] is not in C")

    omega = max_clique(graph, budget=config.budget) if graph.n else None
    omega_size = omega.size if omega else 0
    add("claim-outside-clique<=3", omega_size <= 3, f"omega(C) = {omega_size}")

    result = max_intersecting(context.action, which=GroupKind.PGL, budget=config.budget, workers=config.workers)
    witness = np.asarray(result.witness, dtype=np.int64)
    inside = int(np.count_nonzero(table.psl_mask[witness]))
    outside = len(witness) - inside
    add("pgl-alpha=6", result.size == PGL_ALPHA, f"alpha = {result.size}")
    add("a-priori-bound", inside <= 4 and outside <= 4, f"|F in PSL| = {inside}, |F outside PSL| = {outside}")
    add(
        "no-4-outside-with-2-inside",
        not (outside == 4 and inside >= 2),
        f"witness splits {inside} + {outside}",
    )
    return verdicts


def cmd_pgl_claims(config: RunConfig) -> List[Verdict]:
    """Claim verdicts for every requested q"""
    verdicts: List[Verdict] = []
    for q in config.q_list:
        rows, error = isolated(q, lambda: claims_q(q, config))
        if error is not None:
            rows = [Verdict(q=q, check="claims", passed=False, detail=f"{type(error).__name__}: {error}")]
        verdicts.extend(rows)
    return verdicts
