"""Unit tests for seeded random inputs."""
import math
from fractions import Fraction

import pytest

from config import settings
from src.analytics.appell import AppellSeries, TaylorSeries
from src.analytics.sampling import CliffordSampler


@pytest.mark.unit
class TestCliffordSampler:
    """Test the random input generator."""

    def test_same_seed_same_data(self):
        """Test two samplers with one seed agree."""
        first, second = CliffordSampler(seed=11), CliffordSampler(seed=11)
        assert first.taylor_series(3, 5) == second.taylor_series(3, 5)
        assert first.point(3) == second.point(3)

    def test_default_seed(self):
        """Test the seed falls back to settings."""
        assert CliffordSampler().seed == settings.DEFAULT_SEED

    def test_rationals_bounded(self, sampler):
        """Test numerators and denominators stay in range."""
        for _ in range(50):
            value = sampler.rational(nonzero=True)
            assert isinstance(value, Fraction)
            assert value != 0
            assert abs(value.numerator) <= 9
            assert 1 <= value.denominator <= 6

    def test_multivector_is_exact(self, sampler):
        """Test multivectors use rational components."""
        value = sampler.nonzero_multivector(3)
        assert value.exact
        assert not value.is_zero

    def test_paravector_has_no_higher_grades(self, sampler):
        """Test paravectors live in grades 0 and 1."""
        value = sampler.paravector(5)
        assert all(bin(bits).count("1") <= 1 for bits in value.components)
        assert value.coefficient(0) != 0

    def test_series_bases(self, sampler):
        """Test series come back in the requested basis."""
        assert isinstance(sampler.taylor_series(3, 4), TaylorSeries)
        assert isinstance(sampler.appell_series(3, 4), AppellSeries)
        assert sampler.taylor_series(3, 4, density=0.0).is_zero

    def test_scalar_coefficients(self, sampler):
        """Test clifford=False draws real coefficients."""
        series = sampler.taylor_series(3, 6, clifford=False, density=1.0)
        assert all(set(c.components) <= {0} for c in series.coeffs)

    def test_coefficient_function_support(self, sampler):
        """Test coefficient functions stay inside the requested support."""
        f = sampler.coefficient_function(3, 5)
        assert all(0 <= k <= 5 for k in f.coeffs)

    def test_poly_slice_function_order(self, sampler):
        """Test polyanalytic samples have m+1 layers."""
        f = sampler.poly_slice_function(3, 2, 4)
        assert f.m == 2
        assert f.order <= 4

    def test_polynomial_degree(self, sampler):
        """Test random polynomials respect the degree cap."""
        assert sampler.polynomial(3, 4).degree <= 4

    def test_points(self, sampler):
        """Test points lie inside the ball and off-axis points avoid the axis."""
        for _ in range(20):
            point = sampler.point(3, 0.9)
            assert len(point) == 4
            assert math.sqrt(sum(c * c for c in point)) <= 0.9 + 1e-12
            off_axis = sampler.off_axis_point(3, 2.0)
            assert sum(c * c for c in off_axis[1:]) >= 1e-2 * 4.0

    def test_unit_vector(self, sampler):
        """Test unit vectors have norm one."""
        assert math.sqrt(sum(c * c for c in sampler.unit_vector(5))) == pytest.approx(1.0)
