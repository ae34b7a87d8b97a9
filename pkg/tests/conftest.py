"""Shared fixtures: one PGL(2,q) table and coset action per q for the whole session"""

from typing import Callable, Dict

import pytest

from src.runner.config import RunConfig
from src.runner.pipeline import QContext, build_context


@pytest.fixture(scope='session')
def run_config(tmp_path_factory) -> RunConfig:
    """Single-worker run request writing into a temporary directory"""
    return RunConfig(
        q_list=[5],
        budget=10 ** 8,
        workers=1,
        deterministic=True,
        out=str(tmp_path_factory.mktemp('out')),
    )


@pytest.fixture(scope='session')
def context_for(run_config) -> Callable[[int], QContext]:
    """Build (and cache) the field, table, h, nu and action for a q"""
    cache: Dict[int, QContext] = {}

    def get(q: int) -> QContext:
        if q not in cache:
            cache[q] = build_context(q, run_config)
        return cache[q]

    return get


@pytest.fixture(scope='session')
def context5(context_for) -> QContext:
    return context_for(5)


@pytest.fixture(scope='session')
def context7(context_for) -> QContext:
    return context_for(7)


@pytest.fixture(scope='session')
def context11(context_for) -> QContext:
    return context_for(11)
