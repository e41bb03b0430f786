"""Unit tests for Clifford polynomials and their differential operators."""
from fractions import Fraction

import pytest

from src.core.axial import AxialPolynomial
from src.core.exceptions import DegreeCapError, DimensionMismatchError, DomainError
from src.core.multivector import Multivector
from src.core.polynomial import (
    CliffordPolynomial,
    conj_derivative,
    conj_paravector_power,
    dirac,
    evaluate,
    laplacian,
    laplacian_power,
    materialize_axial,
    paravector_power,
    partial_derivative,
    poly_mul,
    poly_power,
    polynomial_from_json,
    polynomial_to_json,
    restrict_real,
    slice_cr_residual,
)


def _paravector_variable(n):
    total = CliffordPolynomial.zero(n)
    for i in range(n + 1):
        unit = Multivector.scalar(n, 1) if i == 0 else Multivector.blade(n, [i])
        total = total + CliffordPolynomial.variable(n, i) * unit
    return total


@pytest.mark.unit
class TestConstruction:
    """Test polynomial construction."""

    def test_variable(self):
        """Test x_2 has one term of degree one."""
        x2 = CliffordPolynomial.variable(3, 2)
        assert x2.degree == 1
        assert x2.coefficient((0, 0, 1, 0)) == 1

    def test_zero_degree(self):
        """Test the zero polynomial has degree -1."""
        assert CliffordPolynomial.zero(3).degree == -1
        assert CliffordPolynomial.zero(3).is_zero

    def test_bad_exponent_vector(self):
        """Test wrong exponent length is rejected."""
        with pytest.raises(DomainError):
            CliffordPolynomial(3, {(1, 0): Multivector.scalar(3, 1)})

    def test_degree_cap(self):
        """Test degrees beyond the cap raise DegreeCapError."""
        with pytest.raises(DegreeCapError):
            CliffordPolynomial.x0_power(3, 10_000)

    def test_mixed_dimensions(self):
        """Test adding polynomials over different algebras."""
        with pytest.raises(DimensionMismatchError):
            CliffordPolynomial.variable(3, 0) + CliffordPolynomial.variable(1, 0)


@pytest.mark.unit
class TestParavectorPowers:
    """Test the axial expansion of x^k."""

    def test_square_by_hand(self):
        """Test x^2 = x0^2 - |x_vec|^2 + 2 x0 x_vec in R_3."""
        square = paravector_power(3, 2)
        assert square.coefficient((2, 0, 0, 0)) == 1
        assert square.coefficient((0, 2, 0, 0)) == -1
        assert square.coefficient((1, 1, 0, 0)) == Multivector.blade(3, [1], 2)

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_matches_repeated_product(self, k):
        """Test the axial algebra against poly_power of the paravector variable."""
        assert paravector_power(3, k) == poly_power(_paravector_variable(3), k)

    def test_conjugate_power(self):
        """Test conj(x)^1 = x0 - x_vec."""
        conj = conj_paravector_power(3, 1)
        assert conj.coefficient((0, 1, 0, 0)) == -Multivector.blade(3, [1])

    def test_x_times_conj_x_is_modulus(self):
        """Test x conj(x) = |x|^2 as a real polynomial."""
        product = poly_mul(paravector_power(3, 1), conj_paravector_power(3, 1))
        for i in range(4):
            exps = tuple(2 if j == i else 0 for j in range(4))
            assert product.coefficient(exps) == 1
        assert len(product.terms) == 4

    def test_materialize_one(self):
        """Test the axial unit materializes to the constant 1."""
        assert materialize_axial(3, AxialPolynomial.one()) == CliffordPolynomial.constant(3, 1)


@pytest.mark.unit
class TestDifferentialOperators:
    """Test derivatives, Laplacian and Cauchy-Riemann operators."""

    def test_partial_derivative(self):
        """Test d/dx0 of x0^3 = 3 x0^2."""
        assert partial_derivative(CliffordPolynomial.x0_power(3, 3), 0) == 3 * CliffordPolynomial.x0_power(3, 2)

    def test_dirac_of_paravector(self):
        """Test D x = 1 - n for the paravector variable."""
        assert dirac(paravector_power(3, 1)) == CliffordPolynomial.constant(3, -2)

    def test_conj_derivative_of_paravector(self):
        """Test Dbar x = 1 + n."""
        assert conj_derivative(paravector_power(3, 1)) == CliffordPolynomial.constant(3, 4)

    def test_factorization(self, sampler):
        """Test D Dbar = Laplacian on random polynomials."""
        for _ in range(5):
            p = sampler.polynomial(3, 4)
            assert dirac(conj_derivative(p)) == laplacian(p)

    def test_laplacian_of_modulus(self):
        """Test Laplacian |x|^2 = 2(n+1)."""
        modulus = poly_mul(paravector_power(3, 1), conj_paravector_power(3, 1))
        assert laplacian(modulus) == CliffordPolynomial.constant(3, 8)

    def test_laplacian_power_zero_is_identity(self, sampler):
        """Test Delta^0 p = p."""
        p = sampler.polynomial(3, 3)
        assert laplacian_power(p, 0) == p

    def test_negative_laplacian_power(self):
        """Test negative powers raise."""
        with pytest.raises(DomainError):
            laplacian_power(CliffordPolynomial.zero(3), -1)


@pytest.mark.unit
class TestEvaluation:
    """Test evaluation and restriction."""

    def test_exact_evaluation(self):
        """Test x^2 at (1, 1, 0, 0) is 2 e1."""
        value = evaluate(paravector_power(3, 2), [1, 1, 0, 0])
        assert value.exact
        assert value == Multivector.blade(3, [1], 2)

    def test_float_evaluation(self):
        """Test float points give approximate values."""
        value = evaluate(paravector_power(3, 1), [0.5, 0.0, 0.0, 0.0])
        assert not value.exact
        assert value.coefficient(0) == pytest.approx(0.5)

    def test_evaluation_dimension_check(self):
        """Test wrong coordinate counts raise."""
        with pytest.raises(DimensionMismatchError):
            evaluate(paravector_power(3, 1), [1, 2])

    def test_restrict_real(self):
        """Test x^3 restricted to the real axis is x0^3."""
        assert restrict_real(paravector_power(3, 3)) == CliffordPolynomial.x0_power(3, 3)

    def test_slice_cauchy_riemann(self):
        """Test powers of x are slice holomorphic."""
        residual = slice_cr_residual(paravector_power(3, 4), [0.6, 0.8, 0.0], [(0.3, 0.5), (-1.0, 0.2)])
        assert residual < 1e-12

    def test_slice_requires_unit_vector(self):
        """Test non-unit imaginary units are rejected."""
        with pytest.raises(DomainError):
            slice_cr_residual(paravector_power(3, 1), [1.0, 1.0, 0.0], [(0.1, 0.2)])


@pytest.mark.unit
class TestPolynomialJson:
    """Test the polynomial codec."""

    def test_round_trip(self):
        """Test x^3 survives serialization."""
        p = paravector_power(3, 3)
        assert polynomial_from_json(polynomial_to_json(p)) == p

    def test_rational_coefficients(self):
        """Test rationals are kept exactly."""
        p = CliffordPolynomial.constant(3, Fraction(5, 7))
        data = polynomial_to_json(p)
        assert data["terms"][0]["coeff"]["terms"][0]["num"] == "5"
        assert polynomial_from_json(data) == p

    def test_malformed(self):
        """Test missing keys raise DomainError."""
        with pytest.raises(DomainError):
            polynomial_from_json({"n": 3})
