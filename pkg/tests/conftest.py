import pytest
from hypothesis import HealthCheck, settings

import polarmin as pm

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus500():
    """The seeded 500-polygon corpus shared by the acceptance criteria."""
    return pm.random_bodies(7, 500)


@pytest.fixture(scope="session")
def corpus60(corpus500):
    return corpus500[:60]
