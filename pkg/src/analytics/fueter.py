"""
The Fueter-Sce map Delta^{(n-1)/2} on slice monogenic data.

On monomials the map sends x^j to a multiple of the Clifford-Appell polynomial
P_{j+1-n}^n, so on series it is a shift of Taylor coefficients into the Appell
basis. Weighted coefficient norms c_k on the slice side transport to weights
b_k on the axial side, which makes the map an isometry off its kernel.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, List, Tuple

from src.analytics.appell import (
    AppellSeries,
    TaylorSeries,
    appell_polynomial,
    gck_extend,
    materialize,
    require_odd_dimension,
    slice_extend,
    taylor_derivative,
)
from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.multivector import norm_sq
from src.core.polynomial import (
    CliffordPolynomial,
    laplacian_power,
    paravector_power,
    poly_scale,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def gamma(n: int) -> Fraction:
    """
    Fueter-Sce constant gamma_n = (-1)^h 2^{n-1} (h!)^2 / (n-1)!, h = (n-1)/2.

    gamma_1 = 1, gamma_3 = -2, gamma_5 = 8/3.
    """
    require_odd_dimension(n)
    h = (n - 1) // 2
    return Fraction((-1) ** h * 2 ** (n - 1) * factorial(h) ** 2, factorial(n - 1))


def fueter_power(n: int) -> int:
    """Power (n - 1) / 2 of the Laplacian in the Fueter-Sce map."""
    require_odd_dimension(n)
    return (n - 1) // 2


class WeightKind(str, Enum):
    HARDY = "hardy"
    BERGMAN = "bergman"
    DIRICHLET = "dirichlet"
    FOCK = "fock"
    CUSTOM = "custom"


@dataclass(frozen=True)
class WeightSequence:
    """Weights k -> c_k of a coefficient norm sum_k c_k |a_k|^2."""

    kind: WeightKind
    generator: Callable[[int], Fraction]
    label: str = ""

    def __call__(self, k: int) -> Fraction:
        if k < 0:
            raise DomainError(f"Weight index must be nonnegative, got {k}")
        return Fraction(self.generator(k))

    def values(self, upto: int) -> List[Fraction]:
        return [self(k) for k in range(upto + 1)]

    @property
    def name(self) -> str:
        return self.label or self.kind.value


_BUILTIN_GENERATORS = {
    WeightKind.HARDY: lambda k: Fraction(1),
    WeightKind.BERGMAN: lambda k: Fraction(1, k + 1),
    WeightKind.DIRICHLET: lambda k: Fraction(k),
    WeightKind.FOCK: lambda k: Fraction(factorial(k)),
}


def builtin_weights(kind: WeightKind) -> WeightSequence:
    """Hardy c_k = 1, Bergman 1/(k+1), Dirichlet k, Fock k!."""
    kind = WeightKind(kind)
    if kind not in _BUILTIN_GENERATORS:
        raise DomainError(f"No builtin weights for {kind.value}")
    return WeightSequence(kind, _BUILTIN_GENERATORS[kind])


def custom_weights(generator: Callable[[int], Fraction], label: str = "custom") -> WeightSequence:
    return WeightSequence(WeightKind.CUSTOM, generator, label)


def transport_weights(n: int, c: WeightSequence) -> WeightSequence:
    """
    Weights of the image space: b_k = c_{k+n-1} (k!)^2 / ((n+k-1)!)^2.

    For n = 1 this is the identity.
    """
    require_odd_dimension(n)

    def _b(k: int) -> Fraction:
        return c(k + n - 1) * Fraction(factorial(k) ** 2, factorial(n + k - 1) ** 2)

    return WeightSequence(c.kind, _b, f"{c.name}->n={n}")


def fueter_sce_monomial(n: int, j: int) -> CliffordPolynomial:
    """
    Closed form of Delta^{(n-1)/2} x^j.

    0 for j < n-1, the constant gamma_n (n-1)! for j = n-1 and
    gamma_n j! / (j-n+1)! P_{j+1-n}^n beyond.
    """
    require_odd_dimension(n)
    if j < 0:
        raise DomainError(f"Power must be nonnegative, got {j}")
    g = gamma(n)
    if j < n - 1:
        return CliffordPolynomial.zero(n)
    if j == n - 1:
        return CliffordPolynomial.constant(n, g * factorial(n - 1))
    return poly_scale(appell_polynomial(n, j + 1 - n), g * Fraction(factorial(j), factorial(j - n + 1)))


@lru_cache(maxsize=None)
def fueter_sce_brute(n: int, j: int) -> CliffordPolynomial:
    """Delta^{(n-1)/2} x^j by repeated symbolic Laplacians."""
    return laplacian_power(paravector_power(n, j), fueter_power(n))


def _beta_factor(n: int, k: int) -> Fraction:
    return gamma(n) * Fraction(factorial(n + k - 1), factorial(k))


def fueter_sce_series(n: int, f: TaylorSeries) -> AppellSeries:
    """
    Appell coefficients of Delta^{(n-1)/2} sum_k x^k a_k.

    beta_k = gamma_n (n+k-1)!/k! a_{k+n-1}; the first n-1 Taylor coefficients are annihilated.
    """
    require_odd_dimension(n)
    if f.n != n:
        raise DimensionMismatchError(f"Series over R_{f.n}, map on R_{n}")
    top = f.order - (n - 1)
    if top < 0:
        return AppellSeries.zero(n)
    return AppellSeries(n, tuple(f.coefficient(k + n - 1).scale(_beta_factor(n, k)) for k in range(top + 1)))


def fueter_sce_preimage(n: int, g: AppellSeries) -> TaylorSeries:
    """A Taylor series whose image is g, zero below degree n-1."""
    require_odd_dimension(n)
    if g.n != n:
        raise DimensionMismatchError(f"Series over R_{g.n}, map on R_{n}")
    zero = [g.coefficient(0).scale(0)] * (n - 1)
    lifted = [beta.scale(1 / _beta_factor(n, k)) for k, beta in enumerate(g.coeffs)]
    return TaylorSeries(n, tuple(zero + lifted))


def taylor_norm_sq(c: WeightSequence, f: TaylorSeries) -> Fraction:
    """sum_k c_k |a_k|^2."""
    return sum((c(k) * norm_sq(a) for k, a in enumerate(f.coeffs) if not a.is_zero), Fraction(0))


def appell_norm_sq(b: WeightSequence, g: AppellSeries) -> Fraction:
    """sum_k b_k |beta_k|^2."""
    return sum((b(k) * norm_sq(beta) for k, beta in enumerate(g.coeffs) if not beta.is_zero), Fraction(0))


def range_norm_identity(n: int, c: WeightSequence, f: TaylorSeries) -> Tuple[Fraction, Fraction]:
    """
    Both sides of the range norm identity.

    lhs = ||Delta^{(n-1)/2} f||_b^2
    rhs = gamma_n^2 (||f||_c^2 - sum_{k <= n-2} c_k |f^(k)(0)|^2 / (k!)^2)
    """
    lhs = appell_norm_sq(transport_weights(n, c), fueter_sce_series(n, f))
    head = sum((c(k) * norm_sq(f.coefficient(k)) for k in range(n - 1)), Fraction(0))
    rhs = gamma(n) ** 2 * (taylor_norm_sq(c, f) - head)
    return lhs, rhs


def diagram_check(n: int, f: TaylorSeries) -> bool:
    """
    Compare Delta^{(n-1)/2} S[f] with gamma_n GCK[f^{(n-1)}] as explicit polynomials.
    """
    slice_route = laplacian_power(slice_extend(f), fueter_power(n))
    gck_route = poly_scale(materialize(gck_extend(taylor_derivative(f, n - 1))), gamma(n))
    if slice_route != gck_route:
        logger.warning("Diagram mismatch for n=%d, f=%s", n, f)
        return False
    return True


def kernel_membership(n: int, f: TaylorSeries) -> bool:
    """True iff f has degree at most n-2, i.e. the map sends it to zero."""
    require_odd_dimension(n)
    return all(a.is_zero for k, a in enumerate(f.coeffs) if k >= n - 1)


def classify_domain(b: WeightSequence, sample_index: int = 1024) -> str:
    """
    Convergence domain of sum_k |x|^{2k} / b_k by the ratio b_k / b_{k+1}.

    A ratio tending to 1 gives the unit ball, one tending to 0 the whole space.
    """
    samples = [float(b(k) / b(k + 1)) for k in (sample_index, 2 * sample_index)]
    logger.debug("Weight ratios for %s: %s", b.name, samples)
    if all(s < 0.1 for s in samples) and samples[1] <= samples[0]:
        return "whole_space"
    if all(abs(s - 1.0) < 0.1 for s in samples):
        return "unit_ball"
    raise DomainError(f"Weights {b.name} give neither the unit ball nor the whole space")
