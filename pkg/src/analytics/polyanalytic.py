"""
Polyanalytic Fueter-Sce maps.

A slice polyanalytic function of order m+1 decomposes uniquely as
f = sum_{k<=m} conj(x)^k f_k(x) with slice monogenic layers f_k, each stored
as Taylor data. Two maps send it to axially polyanalytic functions:

    C_{m+1}(f)   = sum_k x0^k Delta^{(n-1)/2} f_k
    tau_{m+1}(f) = Delta^{(n-1)/2} V^m f

where V is the global operator with V(conj(x)^k f) = 2k conj(x)^{k-1} f.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from src.analytics.appell import (
    AppellSeries,
    TaylorSeries,
    appell_polynomial,
    pochhammer,
    require_odd_dimension,
    slice_extend,
)
from src.analytics.fueter import fueter_power, fueter_sce_series
from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.multivector import Multivector
from src.core.polynomial import (
    CliffordPolynomial,
    conj_derivative,
    conj_paravector_power,
    dirac_power,
    evaluate,
    laplacian_power,
    partial_derivative,
    poly_add,
    poly_mul,
    poly_scale,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolySliceFunction:
    """f = sum_{k=0}^m conj(x)^k f_k(x), layer k holding the Taylor data of f_k."""

    n: int
    layers: Tuple[TaylorSeries, ...]

    def __post_init__(self) -> None:
        if not self.layers:
            raise DomainError("A polyanalytic function needs at least one layer")
        for layer in self.layers:
            if layer.n != self.n:
                raise DimensionMismatchError(f"Layer over R_{layer.n}, function over R_{self.n}")
        object.__setattr__(self, "layers", tuple(self.layers))

    @property
    def m(self) -> int:
        """Polyanalytic order minus one."""
        return len(self.layers) - 1

    @property
    def order(self) -> int:
        return max(layer.order for layer in self.layers)

    def layer(self, k: int) -> TaylorSeries:
        if 0 <= k <= self.m:
            return self.layers[k]
        return TaylorSeries.zero(self.n)

    @classmethod
    def monomial(cls, n: int, m: int, k: int, j: int) -> "PolySliceFunction":
        """conj(x)^k x^j as a function of order m+1."""
        if not 0 <= k <= m:
            raise DomainError(f"Layer {k} out of range 0..{m}")
        layers = [TaylorSeries.zero(n) for _ in range(m + 1)]
        layers[k] = TaylorSeries.monomial(n, j)
        return cls(n, tuple(layers))


def _x0_power(n: int, k: int) -> CliffordPolynomial:
    return CliffordPolynomial.x0_power(n, k)


def poly_compose(f: PolySliceFunction) -> CliffordPolynomial:
    """sum_k conj(x)^k S[layer_k] as an explicit polynomial."""
    result = CliffordPolynomial.zero(f.n)
    for k, layer in enumerate(f.layers):
        if layer.is_zero:
            continue
        result = poly_add(result, poly_mul(conj_paravector_power(f.n, k), slice_extend(layer)))
    return result


def axial_compose(n: int, components: Sequence[CliffordPolynomial]) -> CliffordPolynomial:
    """sum_k x0^k g_k."""
    result = CliffordPolynomial.zero(n)
    for k, g in enumerate(components):
        if g.n != n:
            raise DimensionMismatchError(f"Component over R_{g.n}, expected R_{n}")
        result = poly_add(result, poly_mul(_x0_power(n, k), g))
    return result


def poly_project(p: CliffordPolynomial, m: int) -> List[CliffordPolynomial]:
    """
    Monogenic components g_0..g_m with p = sum_k x0^k g_k.

    g_k = (1/k!) sum_{s=0}^{m-k} (-x0)^{m-k-s} / (m-k-s)! D^{m-s} p, D the Dirac operator.
    """
    if m < 0:
        raise DomainError(f"Order m must be nonnegative, got {m}")
    derivatives = [p]
    for _ in range(m + 1):
        derivatives.append(dirac_power(derivatives[-1], 1))
    if not derivatives[m + 1].is_zero:
        raise DomainError(f"Input is not polyanalytic of order {m + 1}")

    components = []
    for k in range(m + 1):
        total = CliffordPolynomial.zero(p.n, p.exact)
        for s in range(m - k + 1):
            e = m - k - s
            weight = poly_scale(_x0_power(p.n, e), Fraction((-1) ** e, factorial(e) * factorial(k)))
            total = poly_add(total, poly_mul(weight, derivatives[m - s]))
        components.append(total)
    return components


def monomial_constant(n: int, j: int) -> Fraction:
    """
    Scalar in front of P_{j+1-n}^n in the polyanalytic monomial tables.

    [Gamma((n+1)/2)]^2 2^{n-1} (-1)^h (n)_s / s!, with h = (n-1)/2 and s = j+1-n;
    zero for j < n-1.
    """
    require_odd_dimension(n)
    if j < 0:
        raise DomainError(f"Power must be nonnegative, got {j}")
    s = j + 1 - n
    if s < 0:
        return Fraction(0)
    h = (n - 1) // 2
    return factorial(h) ** 2 * 2 ** (n - 1) * (-1) ** h * pochhammer(n, s) / factorial(s)


def c_map_monomial(n: int, m: int, k: int, j: int) -> CliffordPolynomial:
    """
    C_{m+1}(conj(x)^k x^j) = monomial_constant(n, j) x0^k P_{j+1-n}^n.

    For j = n-1 the constant reduces to 4^h (-1)^h [Gamma((n+1)/2)]^2.
    """
    require_odd_dimension(n)
    if not 0 <= k <= m:
        raise DomainError(f"Layer {k} out of range 0..{m}")
    constant = monomial_constant(n, j)
    if constant == 0:
        return CliffordPolynomial.zero(n)
    return poly_scale(appell_poly(k, j + 1 - n, n), constant)


def c_map(f: PolySliceFunction) -> CliffordPolynomial:
    """sum_{k,j} c_map_monomial(n, m, k, j) alpha_{k,j}."""
    result = CliffordPolynomial.zero(f.n)
    for k, layer in enumerate(f.layers):
        for j, alpha in enumerate(layer.coeffs):
            if alpha.is_zero or j < f.n - 1:
                continue
            term = poly_mul(c_map_monomial(f.n, f.m, k, j), CliffordPolynomial.constant(f.n, alpha))
            result = poly_add(result, term)
    return result


def c_map_brute(f: PolySliceFunction) -> CliffordPolynomial:
    """sum_k x0^k Delta^{(n-1)/2} S[layer_k], Laplacians taken symbolically."""
    h = fueter_power(f.n)
    components = [laplacian_power(slice_extend(layer), h) for layer in f.layers]
    return axial_compose(f.n, components)


def global_v(p: CliffordPolynomial, points: Sequence[Sequence[float]]) -> List[Multivector]:
    """
    V(p) = d/dx0 p + (x_vec / |x_vec|^2) sum_l x_l d/dx_l p at each point.

    The coefficient is not polynomial, so V is evaluated pointwise off the real axis.
    """
    d0 = partial_derivative(p, 0)
    euler = CliffordPolynomial.zero(p.n, p.exact)
    for i in range(1, p.n + 1):
        euler = poly_add(euler, poly_mul(CliffordPolynomial.variable(p.n, i, p.exact), partial_derivative(p, i)))

    values = []
    for point in points:
        if len(point) != p.n + 1:
            raise DimensionMismatchError(f"Expected {p.n + 1} coordinates, got {len(point)}")
        coords = [float(c) for c in point]
        rho = sum(c * c for c in coords[1:])
        if rho == 0:
            raise DomainError(f"V is undefined on the real axis, got {coords}")
        direction = Multivector.vector(p.n, [c / rho for c in coords[1:]], exact=False)
        value = evaluate(d0, coords).to_approx() + direction * evaluate(euler, coords).to_approx()
        values.append(value)
    return values


def v_apply(f: PolySliceFunction) -> PolySliceFunction:
    """One application of V on the layers: layer'_{k-1} = 2k layer_k."""
    if f.m == 0:
        return PolySliceFunction(f.n, (TaylorSeries.zero(f.n),))
    return PolySliceFunction(f.n, tuple(f.layers[k].scale(2 * k) for k in range(1, f.m + 1)))


def v_power_layers(f: PolySliceFunction, m: Optional[int] = None) -> TaylorSeries:
    """
    V^m f = 2^m m! f_m for f of order m+1, returned as Taylor data.

    Powers above f.m annihilate f; powers below it leave several layers and are rejected.
    """
    if m is None:
        m = f.m
    if m < f.m:
        raise DomainError(f"V^{m} of an order-{f.m + 1} function is not slice monogenic")
    if m > f.m:
        return TaylorSeries.zero(f.n)
    return f.layers[m].scale(2 ** m * factorial(m))


def v_numeric_residual(f: PolySliceFunction, points: Sequence[Sequence[float]]) -> float:
    """Largest deviation between pointwise V and the layer rule."""
    pointwise = global_v(poly_compose(f), points)
    symbolic = poly_compose(v_apply(f))
    worst = 0.0
    for point, value in zip(points, pointwise):
        expected = evaluate(symbolic, [float(c) for c in point]).to_approx()
        worst = max(worst, (value - expected).max_abs())
    return worst


def tau_map_monomial(n: int, m: int, k: int, j: int) -> CliffordPolynomial:
    """
    tau_{m+1}(conj(x)^k x^j) = delta_{mk} 2^m m! monomial_constant(n, j) P_{j+1-n}^n.

    For j = n-1 the constant is 2^{m+n-1} m! (-1)^h [Gamma((n+1)/2)]^2.
    """
    require_odd_dimension(n)
    if not 0 <= k <= m:
        raise DomainError(f"Layer {k} out of range 0..{m}")
    constant = monomial_constant(n, j)
    if k != m or constant == 0:
        return CliffordPolynomial.zero(n)
    return poly_scale(appell_polynomial(n, j + 1 - n), 2 ** m * factorial(m) * constant)


def tau_series(f: PolySliceFunction) -> AppellSeries:
    """tau_{m+1} f in the Appell basis, through the Fueter-Sce map on V^m f."""
    return fueter_sce_series(f.n, v_power_layers(f))


def tau_map(f: PolySliceFunction) -> CliffordPolynomial:
    """sum_j tau_map_monomial(n, m, m, j) alpha_{m,j}; lower layers do not contribute."""
    result = CliffordPolynomial.zero(f.n)
    for j, alpha in enumerate(f.layers[f.m].coeffs):
        if alpha.is_zero or j < f.n - 1:
            continue
        term = poly_mul(tau_map_monomial(f.n, f.m, f.m, j), CliffordPolynomial.constant(f.n, alpha))
        result = poly_add(result, term)
    return result



def tau_brute(f: PolySliceFunction) -> CliffordPolynomial:
    """Delta^{(n-1)/2} S[V^m f] with symbolic Laplacians."""
    return laplacian_power(slice_extend(v_power_layers(f)), fueter_power(f.n))


def appell_poly(k: int, s: int, n: int) -> CliffordPolynomial:
    """A_{k,s}^n = x0^k P_s^n."""
    if k < 0 or s < 0:
        raise DomainError(f"Indices must be nonnegative, got k={k}, s={s}")
    return poly_mul(_x0_power(n, k), appell_polynomial(n, s))


def appell_like_check(k: int, s: int, n: int) -> bool:
    """dbar A_{k,s} = k A_{k-1,s} + 2s A_{k,s-1}."""
    expected = CliffordPolynomial.zero(n)
    if k > 0:
        expected = poly_add(expected, poly_scale(appell_poly(k - 1, s, n), k))
    if s > 0:
        expected = poly_add(expected, poly_scale(appell_poly(k, s - 1, n), 2 * s))
    return conj_derivative(appell_poly(k, s, n)) == expected


def polyanalytic_check(f: PolySliceFunction) -> bool:
    """D^{m+1} C_{m+1}(f) = 0."""
    return dirac_power(c_map(f), f.m + 1).is_zero


def relation_check(n: int, m: int, f: PolySliceFunction) -> bool:
    """D^m C_{m+1}(f) = 2^{-m} tau_{m+1}(f)."""
    if f.n != n:
        raise DimensionMismatchError(f"Function over R_{f.n}, map on R_{n}")
    if f.m != m:
        raise DomainError(f"Function has order {f.m + 1}, expected {m + 1}")
    lhs = dirac_power(c_map(f), m)
    rhs = poly_scale(tau_map(f), Fraction(1, 2 ** m))
    if lhs != rhs:
        logger.warning("Relation mismatch for n=%d, m=%d", n, m)
        return False
    return True
