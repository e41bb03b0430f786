"""
Seeded random inputs for identity checks: rational Clifford coefficients,
truncated series, coefficient functions, polyanalytic layers and points.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional

import numpy as np
from faker import Faker

from config import settings
from src.analytics.appell import AppellSeries, TaylorSeries
from src.analytics.polyanalytic import PolySliceFunction
from src.analytics.rkhs import CoefficientFunction
from src.core.multivector import Multivector
from src.core.polynomial import CliffordPolynomial

logger = logging.getLogger(__name__)


class CliffordSampler:
    """Generate random algebraic inputs from a single seed."""

    def __init__(self, seed: Optional[int] = None, max_numerator: int = 9, max_denominator: int = 6):
        """
        Initialize the sampler.

        Args:
            seed (int, optional): Seed for both random sources (defaults to settings.DEFAULT_SEED).
            max_numerator (int): Bound on |numerator| of random rationals.
            max_denominator (int): Bound on denominators of random rationals.
        """
        self.seed = settings.DEFAULT_SEED if seed is None else seed
        self.fake = Faker()
        self.fake.seed_instance(self.seed)
        self.rng = np.random.default_rng(self.seed)
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator

    def rational(self, nonzero: bool = False) -> Fraction:
        """Random rational p/q with |p| <= max_numerator, 1 <= q <= max_denominator."""
        while True:
            numerator = self.fake.random_int(-self.max_numerator, self.max_numerator)
            if numerator or not nonzero:
                break
        return Fraction(numerator, self.fake.random_int(1, self.max_denominator))

    def blade(self, n: int) -> int:
        return self.fake.random_int(0, (1 << n) - 1)

    def multivector(self, n: int, max_terms: int = 3) -> Multivector:
        """
        Sparse exact multivector.

        Args:
            n (int): Algebra dimension.
            max_terms (int): Upper bound on the number of blades drawn.

        Returns:
            Multivector with at most max_terms nonzero components (possibly zero).
        """
        components = {}
        for _ in range(self.fake.random_int(1, max_terms)):
            components[self.blade(n)] = self.rational()
        return Multivector(n, components)

    def nonzero_multivector(self, n: int, max_terms: int = 3) -> Multivector:
        value = self.multivector(n, max_terms)
        while value.is_zero:
            value = self.multivector(n, max_terms)
        return value

    def paravector(self, n: int) -> Multivector:
        """Exact nonzero paravector x0 + x_vec."""
        components = {0: self.rational(nonzero=True)}
        for i in range(n):
            components[1 << i] = self.rational()
        return Multivector(n, components)

    def coefficient(self, n: int, clifford: bool) -> Multivector:
        if clifford:
            return self.multivector(n)
        return Multivector.scalar(n, self.rational())

    def taylor_series(self, n: int, order: int, clifford: bool = True, density: float = 0.7) -> TaylorSeries:
        """Random a_0..a_K; each coefficient is kept with probability density."""
        coeffs = []
        for _ in range(order + 1):
            keep = self.fake.random.random() < density
            coeffs.append(self.coefficient(n, clifford) if keep else Multivector.zero(n))
        return TaylorSeries(n, tuple(coeffs))

    def appell_series(self, n: int, order: int, clifford: bool = True, density: float = 0.7) -> AppellSeries:
        taylor = self.taylor_series(n, order, clifford, density)
        return AppellSeries(n, taylor.coeffs)

    def coefficient_function(self, n: int, support: int, clifford: bool = True) -> CoefficientFunction:
        """Random function with Appell coefficients on indices 0..support."""
        coeffs = {}
        for k in range(support + 1):
            if self.fake.pybool():
                coeffs[k] = self.coefficient(n, clifford)
        return CoefficientFunction(n, coeffs)

    def poly_slice_function(self, n: int, m: int, order: int, density: float = 0.5) -> PolySliceFunction:
        """Random f = sum_{k<=m} conj(x)^k f_k with layers of order at most K."""
        layers = tuple(self.taylor_series(n, order, True, density) for _ in range(m + 1))
        return PolySliceFunction(n, layers)

    def polynomial(self, n: int, degree: int, terms: int = 4, clifford: bool = True) -> CliffordPolynomial:
        """Random polynomial with at most ``terms`` monomials of total degree <= degree."""
        monomials = {}
        for _ in range(terms):
            remaining = self.fake.random_int(0, degree)
            exps = []
            for _ in range(n):
                e = self.fake.random_int(0, remaining)
                exps.append(e)
                remaining -= e
            exps.append(remaining)
            self.fake.random.shuffle(exps)
            monomials[tuple(exps)] = self.coefficient(n, clifford)
        return CliffordPolynomial(n, monomials)

    def point(self, n: int, radius: float = 1.0) -> List[float]:
        """Uniform direction in R^{n+1} with |x| uniform in [0, radius]."""
        direction = self.rng.standard_normal(n + 1)
        direction /= np.linalg.norm(direction)
        return [float(c) for c in direction * self.rng.uniform(0.0, radius)]

    def off_axis_point(self, n: int, radius: float = 1.0) -> List[float]:
        point = self.point(n, radius)
        while sum(c * c for c in point[1:]) < 1e-2 * radius * radius:
            point = self.point(n, radius)
        return point

    def rational_point(self, n: int) -> List[Fraction]:
        return [self.rational() for _ in range(n + 1)]

    def unit_vector(self, n: int) -> List[float]:
        v = self.rng.standard_normal(n)
        return [float(c) for c in v / np.linalg.norm(v)]
