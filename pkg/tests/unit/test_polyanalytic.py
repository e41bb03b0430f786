"""Unit tests for the polyanalytic Fueter-Sce maps."""
from fractions import Fraction

import pytest

from src.analytics.appell import TaylorSeries, appell_polynomial, materialize
from src.analytics.fueter import fueter_sce_brute, fueter_sce_monomial, fueter_sce_series
from src.analytics.polyanalytic import (
    PolySliceFunction,
    appell_like_check,
    appell_poly,
    axial_compose,
    c_map,
    c_map_brute,
    c_map_monomial,
    global_v,
    monomial_constant,
    poly_compose,
    poly_project,
    polyanalytic_check,
    relation_check,
    tau_brute,
    tau_map,
    tau_map_monomial,
    tau_series,
    v_apply,
    v_numeric_residual,
    v_power_layers,
)
from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.polynomial import (
    CliffordPolynomial,
    conj_paravector_power,
    dirac,
    dirac_power,
    paravector_power,
    poly_mul,
    poly_scale,
)


@pytest.mark.unit
class TestPolySliceFunction:
    """Test the layered representation."""

    def test_monomial(self):
        """Test conj(x)^1 x^3 as an order-3 function."""
        f = PolySliceFunction.monomial(3, 2, 1, 3)
        assert f.m == 2
        assert f.layer(1) == TaylorSeries.monomial(3, 3)
        assert f.layer(0).is_zero
        assert f.layer(5).is_zero

    def test_monomial_layer_range(self):
        """Test k must not exceed m."""
        with pytest.raises(DomainError):
            PolySliceFunction.monomial(3, 1, 2, 0)

    def test_needs_a_layer(self):
        """Test at least one layer is required."""
        with pytest.raises(DomainError):
            PolySliceFunction(3, ())

    def test_layer_dimension(self):
        """Test layers must share n."""
        with pytest.raises(DimensionMismatchError):
            PolySliceFunction(3, (TaylorSeries.monomial(5, 1),))

    def test_compose(self):
        """Test conj(x) x composes to |x|^2."""
        composed = poly_compose(PolySliceFunction.monomial(3, 1, 1, 1))
        assert composed == poly_mul(conj_paravector_power(3, 1), paravector_power(3, 1))


@pytest.mark.unit
class TestCMap:
    """Test C_{m+1}."""

    def test_monomial_value(self):
        """Test C_2(conj(x) x^4) = -24 x0 P_2 in R_3."""
        expected = poly_mul(CliffordPolynomial.x0_power(3, 1), poly_scale(appell_polynomial(3, 2), -24))
        assert c_map_monomial(3, 1, 1, 4) == expected

    @pytest.mark.parametrize("k, j", [(0, 3), (1, 2), (2, 5), (1, 0)])
    def test_monomial_matches_brute(self, k, j):
        """Test the table against symbolic Laplacians."""
        assert c_map_monomial(3, 2, k, j) == poly_mul(CliffordPolynomial.x0_power(3, k), fueter_sce_brute(3, j))

    @pytest.mark.parametrize("n, j, expected", [(3, 2, -4), (3, 4, -24), (3, 1, 0), (1, 3, 1), (5, 4, 64)])
    def test_monomial_constant(self, n, j, expected):
        """Test the scalar in front of P_{j+1-n}."""
        assert monomial_constant(n, j) == expected

    def test_monomial_constant_negative_power(self):
        """Test negative powers raise."""
        with pytest.raises(DomainError):
            monomial_constant(3, -1)

    def test_threshold_monomial(self):
        """Test C_2(conj(x) x^2) = -4 x0 in R_3."""
        assert c_map_monomial(3, 1, 1, 2) == poly_scale(CliffordPolynomial.x0_power(3, 1), -4)

    @pytest.mark.slow
    @pytest.mark.parametrize("k, j", [(0, 5), (1, 6)])
    def test_monomial_matches_brute_r5(self, k, j):
        """Test the table against symbolic Laplacians in R_5."""
        assert c_map_monomial(5, 1, k, j) == poly_mul(CliffordPolynomial.x0_power(5, k), fueter_sce_brute(5, j))

    def test_random_function(self, sampler):
        """Test C on random data against the brute-force route."""
        f = sampler.poly_slice_function(3, 2, 4)
        assert c_map(f) == c_map_brute(f)

    def test_polyanalytic(self, sampler):
        """Test D^{m+1} C_{m+1} f = 0."""
        for m in range(3):
            assert polyanalytic_check(sampler.poly_slice_function(3, m, 4))

    def test_reduces_to_fueter_sce(self, sampler):
        """Test m = 0 gives the Fueter-Sce map."""
        layer = sampler.taylor_series(3, 6)
        assert c_map(PolySliceFunction(3, (layer,))) == materialize(fueter_sce_series(3, layer))

    def test_layer_out_of_range(self):
        """Test k > m raises."""
        with pytest.raises(DomainError):
            c_map_monomial(3, 1, 2, 3)


@pytest.mark.unit
class TestGlobalOperator:
    """Test V and the tau map."""

    def test_v_rule(self):
        """Test V(conj(x)^2 x^3) = 4 conj(x) x^3."""
        f = PolySliceFunction.monomial(3, 2, 2, 3)
        assert v_apply(f) == PolySliceFunction(3, (TaylorSeries.zero(3), TaylorSeries.monomial(3, 3, 4)))

    def test_v_numeric(self, sampler):
        """Test the pointwise operator agrees with the layer rule."""
        f = sampler.poly_slice_function(3, 2, 3)
        points = [sampler.off_axis_point(3) for _ in range(4)]
        assert v_numeric_residual(f, points) < 1e-9

    def test_v_undefined_on_axis(self):
        """Test V needs x_vec != 0."""
        with pytest.raises(DomainError):
            global_v(paravector_power(3, 2), [[0.5, 0.0, 0.0, 0.0]])

    def test_v_power(self):
        """Test V^m f = 2^m m! f_m."""
        f = PolySliceFunction.monomial(3, 2, 2, 4)
        assert v_power_layers(f) == TaylorSeries.monomial(3, 4, 8)
        assert v_power_layers(f, 3).is_zero

    def test_v_power_too_low(self):
        """Test V^m for m below the order leaves several layers."""
        with pytest.raises(DomainError):
            v_power_layers(PolySliceFunction.monomial(3, 2, 0, 1), 1)

    def test_tau_monomial(self):
        """Test tau_{m+1}(conj(x)^k x^j) vanishes unless k = m."""
        assert tau_map_monomial(3, 2, 1, 5).is_zero
        assert tau_map_monomial(3, 2, 2, 5) == poly_scale(fueter_sce_monomial(3, 5), 8)

    def test_tau_threshold_monomial(self):
        """Test tau_2(conj(x) x^2) = -8 in R_3."""
        assert tau_map_monomial(3, 1, 1, 2) == CliffordPolynomial.constant(3, -8)
        assert tau_map_monomial(3, 1, 0, 5).is_zero

    def test_tau_matches_series_route(self, sampler):
        """Test the table route against Fueter-Sce applied to V^m f."""
        for m in range(3):
            f = sampler.poly_slice_function(3, m, 5)
            assert tau_map(f) == materialize(tau_series(f))

    @pytest.mark.slow
    def test_tau_matches_brute_r5(self, sampler):
        """Test tau against symbolic Laplacians in R_5."""
        f = sampler.poly_slice_function(5, 1, 5)
        assert tau_map(f) == tau_brute(f)

    def test_tau_matches_brute(self, sampler):
        """Test tau against symbolic Laplacians of V^m f."""
        f = sampler.poly_slice_function(3, 1, 5)
        assert tau_map(f) == tau_brute(f)

    def test_tau_is_monogenic(self, sampler):
        """Test tau f is monogenic."""
        assert dirac(tau_map(sampler.poly_slice_function(3, 2, 5))).is_zero


@pytest.mark.unit
class TestRelations:
    """Test relations between the maps and the projection."""

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_relation(self, sampler, m):
        """Test D^m C_{m+1} = 2^{-m} tau_{m+1}."""
        assert relation_check(3, m, sampler.poly_slice_function(3, m, 4))

    def test_relation_on_threshold_monomial(self):
        """Test D C_2(conj(x) x^2) = -4 = tau_2(conj(x) x^2) / 2."""
        f = PolySliceFunction.monomial(3, 1, 1, 2)
        assert dirac(c_map(f)) == CliffordPolynomial.constant(3, -4)
        assert poly_scale(tau_map(f), Fraction(1, 2)) == CliffordPolynomial.constant(3, -4)
        assert relation_check(3, 1, f)

    def test_relation_order_mismatch(self, sampler):
        """Test the declared m must match the function."""
        with pytest.raises(DomainError):
            relation_check(3, 2, sampler.poly_slice_function(3, 1, 3))

    @pytest.mark.parametrize("k, s", [(0, 0), (1, 0), (0, 3), (2, 3), (4, 1)])
    def test_appell_like(self, k, s):
        """Test Dbar A_{k,s} = k A_{k-1,s} + 2s A_{k,s-1}."""
        assert appell_like_check(k, s, 3)

    def test_appell_poly(self):
        """Test A_{k,s} = x0^k P_s and D^{k+1} A_{k,s} = 0."""
        a = appell_poly(2, 3, 3)
        assert a == poly_mul(CliffordPolynomial.x0_power(3, 2), appell_polynomial(3, 3))
        assert dirac_power(a, 3).is_zero

    def test_project_round_trip(self, sampler):
        """Test poly_project inverts axial_compose on monogenic components."""
        components = [materialize(sampler.appell_series(3, 3)) for _ in range(3)]
        assert poly_project(axial_compose(3, components), 2) == components

    def test_project_rejects_higher_order(self):
        """Test x0^3 is not polyanalytic of order 2."""
        with pytest.raises(DomainError):
            poly_project(CliffordPolynomial.x0_power(3, 3), 1)

    def test_project_of_c_map(self):
        """Test the components of C(conj(x) x^4) are (0, Delta x^4)."""
        components = poly_project(c_map_monomial(3, 1, 1, 4), 1)
        assert components[0].is_zero
        assert components[1] == fueter_sce_monomial(3, 4)
