"""Shared fixtures; expensive exact computations run once per session."""

import pytest
from hypothesis import HealthCheck, settings

from luinv.molien import poincare_coefficients
from luinv.states import random_state

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def coeffs19():
    return poincare_coefficients(19)


@pytest.fixture(scope="session")
def rational_states():
    return [random_state(seed, "rational") for seed in range(100)]
