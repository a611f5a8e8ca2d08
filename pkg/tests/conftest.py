"""Shared fixtures for the heunkit tests."""

import os

import numpy as np
import pytest

from src.base.logging import setup_logging
from src.config.settings import reset_settings
from src.kernel.params import EvalPolicy, GaussParams, HeunParams, Restricted3F2Params
from src.schemas.report import SamplePlan
from tests.fixtures.factories import (
    create_test_gauss_params,
    create_test_heun_params,
    create_test_restricted_params,
)

setup_logging(level="WARNING", json_output=False)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch: pytest.MonkeyPatch):
    """Keep HEUNKIT_* variables of the host out of the tests."""
    for key in list(os.environ):
        if key.startswith("HEUNKIT_"):
            monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def policy() -> EvalPolicy:
    return EvalPolicy()


@pytest.fixture
def small_plan() -> SamplePlan:
    """Plan with few draws so whole suites run quickly."""
    return SamplePlan(seed=7, draws_per_rule=2)


@pytest.fixture
def gauss_params() -> GaussParams:
    return create_test_gauss_params()


@pytest.fixture
def heun_params() -> HeunParams:
    return create_test_heun_params()


@pytest.fixture
def restricted_params() -> Restricted3F2Params:
    return create_test_restricted_params()
