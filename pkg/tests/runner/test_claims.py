"""Tests for the PGL(2,q) clique-bound checks"""

from dataclasses import replace

import pytest

from src.errors import WrongCharacteristicError, WrongCongruenceError
from src.runner.claims import claim_graph, cmd_pgl_claims, has_involution_form, require_claim_case

CLAIM_CHECKS = {
    'claim-involutions',
    'claim-form',
    'claim-1-no-4-clique',
    'claim-2-swap-degree',
    'claim-outside-clique<=3',
    'pgl-alpha=6',
    'a-priori-bound',
    'no-4-outside-with-2-inside',
}


@pytest.mark.parametrize("q", [5, 11, pytest.param(19, marks=pytest.mark.slow)])
def test_claims_hold(run_config, q):
    verdicts = cmd_pgl_claims(replace(run_config, q_list=[q]))
    assert {v.check for v in verdicts} == CLAIM_CHECKS
    failed = [v for v in verdicts if not v.passed]
    assert not failed, failed


def test_claim_graph_q5(context5):
    claim = claim_graph(context5)
    table = context5.table
    assert claim.graph.n > 0
    assert all(table.orders[x] == 2 and not table.psl_mask[x] for x in claim.elements)
    assert all(has_involution_form(context5, x) for x in claim.elements)
    claim.graph.validate()


def test_require_claim_case():
    require_claim_case(5, 5)
    require_claim_case(11, 11)
    require_claim_case(19, 19)
    with pytest.raises(WrongCharacteristicError):
        require_claim_case(27, 3)
    with pytest.raises(WrongCongruenceError):
        require_claim_case(7, 7)


def test_wrong_case_row(run_config):
    verdicts = cmd_pgl_claims(replace(run_config, q_list=[7]))
    assert len(verdicts) == 1
    assert verdicts[0].check == 'claims'
    assert not verdicts[0].passed
    assert 'WrongCongruenceError' in verdicts[0].detail
