"""Unit tests for Clifford-Appell polynomials and GCK series."""
from fractions import Fraction

import pytest

from src.analytics.appell import (
    AppellSeries,
    TaylorSeries,
    appell_evaluate,
    appell_polynomial,
    appell_values,
    gck_divide,
    gck_extend,
    gck_inverse,
    gck_product,
    gck_restrict,
    materialize,
    pochhammer,
    series_from_json,
    series_to_json,
    slice_extend,
    t_coefficient,
)
from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.multivector import Multivector, geometric_product
from src.core.polynomial import (
    CliffordPolynomial,
    conj_derivative,
    dirac,
    paravector_power,
    poly_scale,
    restrict_real,
)


@pytest.mark.unit
class TestCoefficients:
    """Test T_s^k(n) and the rising factorial."""

    def test_pochhammer(self):
        """Test (a)_0 = 1 and (2)_3 = 24."""
        assert pochhammer(5, 0) == 1
        assert pochhammer(2, 3) == 24
        assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)

    def test_first_order_weights(self):
        """Test T_0^1(3) = 2/3 and T_1^1(3) = 1/3."""
        assert t_coefficient(3, 1, 0) == Fraction(2, 3)
        assert t_coefficient(3, 1, 1) == Fraction(1, 3)

    @pytest.mark.parametrize("n", [1, 3, 5, 7])
    def test_weights_sum_to_one(self, n):
        """Test sum_s T_s^k(n) = 1."""
        for k in range(10):
            assert sum(t_coefficient(n, k, s) for s in range(k + 1)) == 1

    def test_index_out_of_range(self):
        """Test s > k raises."""
        with pytest.raises(DomainError):
            t_coefficient(3, 2, 3)


@pytest.mark.unit
class TestAppellPolynomials:
    """Test P_k^n."""

    def test_p0_is_one(self):
        """Test P_0 = 1."""
        assert appell_polynomial(3, 0) == CliffordPolynomial.constant(3, 1)

    def test_p1_in_r3(self):
        """Test P_1^3 = x0 + x_vec / 3."""
        p1 = appell_polynomial(3, 1)
        assert p1.coefficient((1, 0, 0, 0)) == 1
        for i in range(1, 4):
            exps = tuple(1 if j == i else 0 for j in range(4))
            assert p1.coefficient(exps) == Multivector.blade(3, [i], Fraction(1, 3))

    @pytest.mark.parametrize("k", range(7))
    def test_monogenic(self, k):
        """Test D P_k = 0."""
        assert dirac(appell_polynomial(3, k)).is_zero

    @pytest.mark.parametrize("k", range(1, 7))
    def test_appell_property(self, k):
        """Test Dbar P_k = 2k P_{k-1}."""
        assert conj_derivative(appell_polynomial(3, k)) == poly_scale(appell_polynomial(3, k - 1), 2 * k)

    @pytest.mark.parametrize("k", range(6))
    def test_restriction(self, k):
        """Test P_k(x0) = x0^k."""
        assert restrict_real(appell_polynomial(5, k)) == CliffordPolynomial.x0_power(5, k)

    @pytest.mark.parametrize("k", range(6))
    def test_complex_case_is_power(self, k):
        """Test P_k^1 = x^k."""
        assert appell_polynomial(1, k) == paravector_power(1, k)

    def test_even_dimension_rejected(self):
        """Test n must be odd."""
        with pytest.raises(DomainError):
            appell_polynomial(2, 1)

    def test_exact_evaluation(self):
        """Test P_1^3(0, 3, 0, 0) = e1."""
        assert appell_evaluate(3, 1, [0, 3, 0, 0]) == Multivector.blade(3, [1])

    def test_fast_values_match_exact(self, sampler):
        """Test the slice formula against exact polynomials."""
        point = sampler.off_axis_point(3, 1.0)
        fast = appell_values(3, point, 6)
        for k in range(7):
            assert (fast[k] - appell_evaluate(3, k, point)).max_abs() < 1e-12

    def test_fast_values_at_origin(self):
        """Test P_0(0) = 1 and P_k(0) = 0 for k > 0."""
        values = appell_values(3, [0.0, 0.0, 0.0, 0.0], 4)
        assert values[0].coefficient(0) == 1.0
        assert all(v.is_zero for v in values[1:])


@pytest.mark.unit
class TestSeries:
    """Test Taylor and Appell coefficient series."""

    def test_monomial(self):
        """Test the monomial x0^3."""
        series = TaylorSeries.monomial(3, 3)
        assert series.order == 3
        assert series.support() == [3]

    def test_equality_ignores_trailing_zeros(self):
        """Test padding does not change equality."""
        series = TaylorSeries(3, (1, 2))
        assert series == series.truncate(6)

    def test_bases_do_not_mix(self):
        """Test taylor + appell raises."""
        with pytest.raises(DomainError):
            TaylorSeries(3, (1,)) + AppellSeries(3, (1,))

    def test_dimension_mismatch(self):
        """Test R_3 + R_5 raises."""
        with pytest.raises(DimensionMismatchError):
            AppellSeries(3, (1,)) + AppellSeries(5, (1,))

    def test_derivative(self):
        """Test d/dx0 (x0^3) = 3 x0^2."""
        assert TaylorSeries.monomial(3, 3).derivative() == TaylorSeries.monomial(3, 2, 3)

    def test_extend_restrict(self, sampler):
        """Test restriction inverts the GCK extension."""
        f = sampler.taylor_series(3, 5)
        assert gck_restrict(gck_extend(f)) == f

    def test_materialize_is_monogenic(self, sampler):
        """Test GCK[f] is monogenic and restricts to f."""
        f = sampler.taylor_series(3, 4)
        extension = materialize(gck_extend(f))
        assert dirac(extension).is_zero
        assert restrict_real(extension) == restrict_real(slice_extend(f))

    def test_slice_extension(self):
        """Test S[x0^2] = x^2."""
        assert slice_extend(TaylorSeries.monomial(3, 2)) == paravector_power(3, 2)

    def test_json_round_trip(self, sampler):
        """Test series survive serialization with their basis."""
        g = sampler.appell_series(3, 4)
        decoded = series_from_json(series_to_json(g))
        assert isinstance(decoded, AppellSeries)
        assert decoded == g

    def test_json_unknown_basis(self):
        """Test unknown bases are rejected."""
        with pytest.raises(DomainError):
            series_from_json({"n": 3, "basis": "fourier", "coeffs": []})


@pytest.mark.unit
class TestGckProduct:
    """Test the GCK product, inverse and division."""

    def test_monomials_multiply(self):
        """Test P_j (.) P_k = P_{j+k}."""
        product = gck_product(AppellSeries.monomial(3, 2), AppellSeries.monomial(3, 3), order=6)
        assert product == AppellSeries.monomial(3, 5)

    def test_product_order(self):
        """Test coefficients multiply in argument order."""
        e1, e2 = Multivector.blade(3, [1]), Multivector.blade(3, [2])
        a = AppellSeries(3, (e1,))
        b = AppellSeries(3, (e2,))
        assert gck_product(a, b).coefficient(0) == geometric_product(e1, e2)
        assert gck_product(b, a).coefficient(0) == geometric_product(e2, e1)

    def test_inverse(self, sampler):
        """Test a (.) a^{-1} = 1 up to the truncation order."""
        head = sampler.paravector(3)
        a = AppellSeries(3, (head,) + sampler.appell_series(3, 4).coeffs[1:])
        inverse = gck_inverse(a, 4)
        assert gck_product(a, inverse, order=4) == AppellSeries(3, (1,))

    def test_geometric_inverse(self):
        """Test (1 - P_1)^{-1} = sum_k P_k."""
        a = AppellSeries(3, (1, -1))
        assert gck_inverse(a, 5) == AppellSeries(3, (1,) * 6)

    def test_inverse_needs_constant_term(self):
        """Test a vanishing head raises."""
        with pytest.raises(DomainError):
            gck_inverse(AppellSeries.monomial(3, 1), 3)

    def test_division_by_p1(self):
        """Test P_k / P_1 = P_{k-1}."""
        assert gck_divide(AppellSeries.monomial(3, 4), AppellSeries.monomial(3, 1)) == AppellSeries.monomial(3, 3)

    def test_division_inverts_product(self, sampler):
        """Test b (.) (a / b) = a."""
        a = sampler.appell_series(3, 4)
        b = AppellSeries(3, (sampler.paravector(3),) + sampler.appell_series(3, 4).coeffs[1:])
        quotient = gck_divide(a, b)
        assert gck_product(b, quotient, order=4) == a

    def test_division_by_zero(self):
        """Test the zero divisor raises."""
        with pytest.raises(DomainError):
            gck_divide(AppellSeries(3, (1,)), AppellSeries.zero(3))

    def test_division_valuation(self):
        """Test the dividend must vanish where the divisor does."""
        with pytest.raises(DomainError):
            gck_divide(AppellSeries(3, (1, 1)), AppellSeries.monomial(3, 1))
