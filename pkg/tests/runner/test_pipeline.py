"""Tests for the density pipeline"""

from dataclasses import replace

import pytest

from src.atlas import GroupKind
from src.clique import CliqueResult
from src.errors import NotPrimeError
from src.runner.pipeline import (
    analyse_subconstituent,
    cmd_density,
    density_report,
    group_density,
    isolated,
)

PSL_DENSITIES = [
    (5, '4/3'),
    (7, '4/3'),
    (11, '4/3'),
    (13, '4/3'),
    (17, '1/1'),
    (19, '4/3'),
    pytest.param(23, '1/1', marks=pytest.mark.slow),
    pytest.param(25, '2/1', marks=pytest.mark.slow),
    pytest.param(29, '4/3', marks=pytest.mark.slow),
]


def test_order3_case(context5, context7):
    assert context5.order3_case
    assert not context7.order3_case


def test_density_report_q5(run_config):
    """Both densities, the monotonicity check and the matching on N"""
    report = density_report(5, run_config)
    assert report.ok
    assert report.vertices == 20
    assert report.groups['psl'].alpha == 4
    assert report.groups['psl'].rho == '4/3'
    assert report.groups['pgl'].alpha == 6
    assert report.groups['pgl'].rho == '1/1'
    assert report.monotone is True
    assert report.computed_array == report.weak_array == ['1/1', '4/3']
    assert report.subconstituent['shape'] == 'matching'
    assert report.subconstituent['omega_gamma'] is not None
    assert report.verdicts == {
        'action-transitive': True,
        'alpha-solutions=degree': True,
        'centralizer-regular-on-N': True,
    }
    assert {'enumerate', 'action', 'clique_psl', 'clique_pgl', 'gamma'} <= set(report.timings)


@pytest.mark.parametrize("q,rho", PSL_DENSITIES)
def test_psl_density_matches_prediction(run_config, q, rho):
    config = replace(run_config, group='psl')
    report = density_report(q, config)
    entry = report.groups['psl']
    assert entry.rho == rho
    assert entry.match
    assert report.ok


@pytest.mark.parametrize("q", [
    5, 7, 11, 13, 17, 19,
    pytest.param(23, marks=pytest.mark.slow),
])
def test_pgl_alpha_is_six(context_for, run_config, q):
    entry, result = group_density(context_for(q), GroupKind.PGL, run_config)
    assert entry.alpha == 6
    assert entry.rho == '1/1'
    assert entry.match
    assert len(result.witness) == 6


@pytest.mark.stretch
def test_characteristic_three_densities(run_config):
    """q = 27: PSL(2,27) and PGL(2,27) both have density 9"""
    report = density_report(27, run_config)
    psl, pgl = report.groups['psl'], report.groups['pgl']
    assert not psl.budget_exceeded and not pgl.budget_exceeded
    assert (psl.alpha, psl.rho) == (27, '9/1')
    assert (pgl.alpha, pgl.rho) == (54, '9/1')
    assert report.computed_array == report.weak_array == ['9/1']
    assert report.subconstituent is None
    assert report.ok


def test_budget_exhaustion_is_reported(context5, run_config, mocker):
    mocker.patch(
        'src.runner.pipeline.max_intersecting',
        return_value=CliqueResult(size=5, witness=[0, 1, 2, 3, 4], budget_exceeded=True),
    )
    entry, _ = group_density(context5, GroupKind.PGL, run_config)
    assert entry.budget_exceeded
    assert not entry.match


def test_subconstituent_analysis(context11, run_config):
    analysis = analyse_subconstituent(context11, run_config)
    assert len(analysis.n) == 12
    assert len(analysis.solutions) == analysis.report.degree == 2
    assert len(analysis.centralizer) == 12


def test_bad_q_does_not_abort_batch(run_config):
    """q = 9 has no closed form; q = 15 is not a prime power"""
    reports = cmd_density(replace(run_config, q_list=[9, 5, 15]))
    assert [r.q for r in reports] == [9, 5, 15]
    assert reports[0].error_type == 'UnsupportedCaseError'
    assert reports[1].ok
    assert reports[2].error_type == 'UnsupportedCaseError'
    assert not reports[0].ok


def test_isolated():
    def broken():
        raise NotPrimeError("15 is not prime")

    result, error = isolated(15, broken)
    assert result is None
    assert isinstance(error, NotPrimeError)
    assert isolated(5, lambda: 42) == (42, None)
