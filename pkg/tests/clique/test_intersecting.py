"""Unit tests for maximum intersecting sets"""

import numpy as np
import pytest

from src.atlas import GroupKind
from src.clique import is_intersecting, max_intersecting
from src.derange import fixer_set


@pytest.mark.parametrize("q", [5, 7, 11])
def test_psl_alpha(context_for, q):
    """alpha = 4, so PSL(2,q) has density 4/3"""
    action = context_for(q).action
    result = max_intersecting(action, which=GroupKind.PSL)
    assert result.size == 4
    assert action.table.identity_index in result.witness
    assert np.all(action.table.psl_mask[result.witness])
    assert is_intersecting(action, result.witness)


@pytest.mark.parametrize("q", [5, 7, 11])
def test_pgl_alpha(context_for, q):
    """alpha = 6, the size of a point stabilizer"""
    action = context_for(q).action
    result = max_intersecting(action, which=GroupKind.PGL)
    assert result.size == 6
    assert len(result.witness) == 6
    assert is_intersecting(action, result.witness)


def test_is_intersecting(context5):
    action = context5.action
    assert is_intersecting(action, action.stabilizer)
    # a derangement and the identity agree nowhere
    perms = action.perm_table
    derangement = int(np.nonzero((perms != np.arange(action.n_vertices)).all(axis=1))[0][0])
    assert not is_intersecting(action, [action.table.identity_index, int(action.members[derangement])])


def test_precomputed_fixers(context5):
    action = context5.action.restrict_to_psl()
    result = max_intersecting(context5.action, which=GroupKind.PSL, fixers=fixer_set(action))
    assert result.size == 4
