"""Tests for the structural verification command"""

from dataclasses import replace

import pytest

from src.atlas import suborbits
from src.runner.verify import cmd_verify, verify_q


def checks_of(verdicts):
    return {v.check for v in verdicts}


@pytest.mark.parametrize("q", [5, 7, 11])
def test_full_verification_passes(run_config, q):
    verdicts = verify_q(q, replace(run_config, level='full'))
    failed = [v for v in verdicts if not v.passed]
    assert not failed, failed
    names = checks_of(verdicts)
    assert {'trace-order3', 'trace-involution', 's3-classes', 'centralizer', 'transversal'} <= names
    assert {'fixers-psl', 'fixers-pgl', 'suborbits'} <= names
    assert 'normalizer-pgl-order=p' in names
    assert 'normalizer-psl-order=p' in names


def test_order3_rows_q5(run_config):
    names = checks_of(verify_q(5, run_config))
    assert {'conic-plus=q+1', 'conic-minus=1', 'gamma-tilde', 'nonadjacency', 'alpha-trichotomy'} <= names
    assert {'trace-equation', 'waypoint-conjugation', 'waypoint-u-form', 'waypoint-cayley-trace'} <= names
    # fast level leaves out the exhaustive fixer scans
    assert 'fixers-pgl' not in names


def test_no_order3_rows_q7(run_config):
    names = checks_of(verify_q(7, run_config))
    assert 'gamma-tilde' not in names
    assert 'conic-plus=q+1' not in names


def test_fast_verification_q13(run_config):
    verdicts = verify_q(13, run_config)
    assert all(v.passed for v in verdicts)


def test_unbuildable_q(run_config):
    verdicts = cmd_verify(replace(run_config, q_list=[15, 5]))
    first = verdicts[0]
    assert first.q == 15
    assert first.check == 'build'
    assert not first.passed
    assert 'NotPrimeError' in first.detail
    assert all(v.passed for v in verdicts[1:])


def test_suborbit_check_reads_pairing(run_config, mocker):
    """A pairing that is not an involution fails the suborbits row"""
    def broken(action, v=0):
        orbits = suborbits(action, v)
        return orbits[:-1] + [replace(orbits[-1], paired=0, symmetric=False)]

    mocker.patch('src.runner.verify.suborbits', side_effect=broken)
    verdicts = verify_q(5, replace(run_config, level='full'))
    row = next(v for v in verdicts if v.check == 'suborbits')
    assert not row.passed
    assert 'not an involution' in row.detail
