"""
Pytest configuration and fixtures
"""
import pytest
from faker import Faker

from src.analytics.sampling import CliffordSampler
from src.core.multivector import Multivector

SEED = 7


@pytest.fixture
def fake():
    """Faker seeded for reproducible test data."""
    generator = Faker()
    generator.seed_instance(SEED)
    return generator


@pytest.fixture
def sampler():
    """Seeded sampler of random multivectors, series and points."""
    return CliffordSampler(seed=SEED)


@pytest.fixture
def quaternion_units():
    """1, e1, e2, e12 in R_2 (the quaternions)."""
    return (
        Multivector.scalar(2, 1),
        Multivector.blade(2, [1]),
        Multivector.blade(2, [2]),
        Multivector.blade(2, [1, 2]),
    )


@pytest.fixture
def sample_points(sampler):
    """A handful of points in R^4 inside the unit ball."""
    return [sampler.point(3, 0.9) for _ in range(5)]
