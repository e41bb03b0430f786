"""
Axially monogenic elementary functions as truncated Clifford-Appell series.

Each function is the Fueter-Sce image of a classical one, so its Appell
coefficients are gamma_n times the classical Taylor coefficients (SIN and COS
pick up an extra (-1)^{(n-1)/2}).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Sequence

import numpy as np
from scipy.special import gammaln

from src.analytics.appell import AppellSeries, appell_values, gck_product, materialize, require_odd_dimension
from src.analytics.fueter import fueter_power, gamma
from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.multivector import Multivector, norm
from src.core.polynomial import CliffordPolynomial, conj_derivative, dirac, poly_scale

logger = logging.getLogger(__name__)

MAX_ADAPTIVE_ORDER = 4096


class ElementaryKind(str, Enum):
    EXP = "exp"
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"


def _pattern(kind: ElementaryKind, n: int, k: int) -> Fraction:
    """Taylor coefficient of the classical function times the Clifford sign."""
    h = fueter_power(n)
    if kind is ElementaryKind.EXP:
        return Fraction(1, factorial(k))
    if kind is ElementaryKind.SINH:
        return Fraction(k % 2, factorial(k))
    if kind is ElementaryKind.COSH:
        return Fraction(1 - k % 2, factorial(k))
    if kind is ElementaryKind.SIN:
        if k % 2 == 0:
            return Fraction(0)
        return Fraction((-1) ** h * (-1) ** ((k - 1) // 2), factorial(k))
    if k % 2:
        return Fraction(0)
    return Fraction((-1) ** h * (-1) ** (k // 2), factorial(k))


# Partner under the conjugate Cauchy-Riemann operator: dbar F = 2 * sign * partner
DERIVATIVE_PARTNERS: Dict[ElementaryKind, tuple] = {
    ElementaryKind.EXP: (ElementaryKind.EXP, 1),
    ElementaryKind.SINH: (ElementaryKind.COSH, 1),
    ElementaryKind.COSH: (ElementaryKind.SINH, 1),
    ElementaryKind.SIN: (ElementaryKind.COS, 1),
    ElementaryKind.COS: (ElementaryKind.SIN, -1),
}

_CLASSICAL: Dict[ElementaryKind, Callable[[float], float]] = {
    ElementaryKind.EXP: np.exp,
    ElementaryKind.SIN: np.sin,
    ElementaryKind.COS: np.cos,
    ElementaryKind.SINH: np.sinh,
    ElementaryKind.COSH: np.cosh,
}


@dataclass(frozen=True)
class TruncatedMonogenic:
    """An elementary function cut after P_K."""

    kind: ElementaryKind
    n: int
    order: int
    series: AppellSeries

    def polynomial(self) -> CliffordPolynomial:
        return materialize(self.series)

    def evaluate(self, point: Sequence[float]) -> Multivector:
        """Double-precision value of the partial sum."""
        values = appell_values(self.n, point, self.order)
        total = Multivector.zero(self.n, exact=False)
        for p_k, alpha in zip(values, self.series.coeffs):
            c = alpha.coefficient(0)
            if c:
                total = total + p_k.scale(float(c))
        return total


def truncated_monogenic(kind: ElementaryKind, n: int, order: int) -> TruncatedMonogenic:
    kind = ElementaryKind(kind)
    require_odd_dimension(n)
    if order < 0:
        raise DomainError(f"Truncation order must be nonnegative, got {order}")
    g = gamma(n)
    series = AppellSeries(n, tuple(g * _pattern(kind, n, k) for k in range(order + 1)))
    return TruncatedMonogenic(kind, n, order, series)


def tail_bound(n: int, radius: float, order: int) -> float:
    """|gamma_n| e^r r^{K+1} / (K+1)!, from |P_k(x)| <= |x|^k."""
    if radius == 0:
        return 0.0
    log_bound = math.log(abs(float(gamma(n)))) + radius + (order + 1) * math.log(radius) - gammaln(order + 2)
    return float(np.exp(log_bound))


@dataclass(frozen=True)
class ElementaryValue:
    value: Multivector
    order: int
    tail_bound: float


def eval_elementary(kind: ElementaryKind, n: int, point: Sequence[float], tol: float) -> ElementaryValue:
    """
    Evaluate with a truncation order certified against tol.

    K starts at 4 and doubles until the tail bound drops below tol.
    """
    kind = ElementaryKind(kind)
    if tol <= 0:
        raise DomainError(f"Tolerance must be positive, got {tol}")
    if len(point) != n + 1:
        raise DimensionMismatchError(f"Expected {n + 1} coordinates, got {len(point)}")
    radius = float(np.linalg.norm(np.asarray(point, dtype=float)))

    order = 4
    bound = tail_bound(n, radius, order)
    while bound >= tol:
        order *= 2
        if order > MAX_ADAPTIVE_ORDER:
            raise DomainError(f"No truncation up to {MAX_ADAPTIVE_ORDER} reaches tol={tol} at |x|={radius}")
        bound = tail_bound(n, radius, order)
    logger.debug("%s at |x|=%.3g: K=%d, tail=%.3g", kind.value, radius, order, bound)

    value = truncated_monogenic(kind, n, order).evaluate([float(c) for c in point])
    return ElementaryValue(value, order, bound)


def derivative_identity_check(kind: ElementaryKind, n: int, order: int) -> bool:
    """dbar of the order-K truncation equals 2 * partner truncated at K-1."""
    kind = ElementaryKind(kind)
    if order < 2:
        raise DomainError(f"Derivative check needs K >= 2, got {order}")
    partner, sign = DERIVATIVE_PARTNERS[kind]
    lhs = conj_derivative(truncated_monogenic(kind, n, order).polynomial())
    rhs = poly_scale(truncated_monogenic(partner, n, order - 1).polynomial(), 2 * sign)
    return lhs == rhs


def parity_identity_check(n: int, order: int) -> bool:
    """COSH and SINH are the even and odd parts of EXP: (EXP(x) +- EXP(-x)) / 2."""
    if order < 0:
        raise DomainError(f"Truncation order must be nonnegative, got {order}")
    exp = truncated_monogenic(ElementaryKind.EXP, n, order).series
    # P_k(-x) = (-1)^k P_k(x)
    reflected = AppellSeries(n, tuple(c.scale((-1) ** k) for k, c in enumerate(exp.coeffs)))
    cosh = truncated_monogenic(ElementaryKind.COSH, n, order).series
    sinh = truncated_monogenic(ElementaryKind.SINH, n, order).series
    return cosh == (exp + reflected).scale(Fraction(1, 2)) and sinh == (exp - reflected).scale(Fraction(1, 2))


def pythagorean_check(n: int, order: int) -> bool:
    """COS (.) COS + SIN (.) SIN = gamma_n^2 = COSH (.) COSH - SINH (.) SINH through order K."""
    if order < 1:
        raise DomainError(f"Pythagorean check needs K >= 1, got {order}")
    series = {kind: truncated_monogenic(kind, n, order).series for kind in ElementaryKind}
    constant = AppellSeries(n, (gamma(n) ** 2,))

    trig = gck_product(series[ElementaryKind.COS], series[ElementaryKind.COS], order) + gck_product(
        series[ElementaryKind.SIN], series[ElementaryKind.SIN], order
    )
    hyperbolic = gck_product(series[ElementaryKind.COSH], series[ElementaryKind.COSH], order) - gck_product(
        series[ElementaryKind.SINH], series[ElementaryKind.SINH], order
    )
    return trig == constant and hyperbolic == constant


def monogenic_truncation_check(kind: ElementaryKind, n: int, order: int) -> bool:
    return dirac(truncated_monogenic(kind, n, order).polynomial()).is_zero


def restriction_value(kind: ElementaryKind, n: int, x0: float) -> float:
    """gamma_n f(x0), with the extra (-1)^{(n-1)/2} for SIN and COS."""
    kind = ElementaryKind(kind)
    sign = (-1) ** fueter_power(n) if kind in (ElementaryKind.SIN, ElementaryKind.COS) else 1
    return float(gamma(n)) * sign * float(_CLASSICAL[kind](x0))


def restriction_check(kind: ElementaryKind, n: int, x0: float, tol: float) -> bool:
    """On the real axis the value is the scalar gamma_n f(x0)."""
    result = eval_elementary(kind, n, [x0] + [0.0] * n, tol)
    expected = restriction_value(kind, n, x0)
    residual = (result.value - Multivector.scalar(n, expected, exact=False)).max_abs()
    return residual <= tol * max(1.0, abs(expected)) + result.tail_bound


def modulus_bound(kind: ElementaryKind, n: int, radius: float) -> float:
    """|gamma_n| e^r for EXP, |gamma_n| sinh r for SIN/SINH, |gamma_n| cosh r for COS/COSH."""
    kind = ElementaryKind(kind)
    g = abs(float(gamma(n)))
    if kind is ElementaryKind.EXP:
        return g * math.exp(radius)
    if kind in (ElementaryKind.SIN, ElementaryKind.SINH):
        return g * math.sinh(radius)
    return g * math.cosh(radius)


def bound_check(kind: ElementaryKind, n: int, point: Sequence[float], tol: float) -> bool:
    result = eval_elementary(kind, n, point, tol)
    radius = float(np.linalg.norm(np.asarray(point, dtype=float)))
    bound = modulus_bound(kind, n, radius)
    return norm(result.value) <= bound * (1 + tol) + tol
