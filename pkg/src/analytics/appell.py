"""
Clifford-Appell polynomials and the generalized CK-extension.

An axially monogenic function is determined by its restriction to the real
line. Writing that restriction as sum_k x0^k a_k (a TaylorSeries), the
extension is sum_k P_k^n(x) a_k (an AppellSeries); the extension is therefore
a relabeling of coefficients between the two bases.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, ClassVar, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.core.axial import AxialPolynomial
from src.core.exceptions import DimensionMismatchError, DomainError, ScalarKindMismatchError
from src.core.multivector import (
    Multivector,
    Number,
    geometric_product,
    multivector_from_json,
    multivector_inverse,
    multivector_to_json,
)
from src.core.polynomial import (
    CliffordPolynomial,
    materialize_axial,
    paravector_power,
    poly_add,
    poly_mul,
)

logger = logging.getLogger(__name__)


def require_odd_dimension(n: int) -> None:
    """Only odd n >= 1 make (n - 1) / 2 a nonnegative integer."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Unsupported dimension n={n}: n must be odd and >= 1")


def pochhammer(a: Number, s: int) -> Fraction:
    """Rising factorial (a)_s = a (a + 1) ... (a + s - 1), (a)_0 = 1."""
    if s < 0:
        raise DomainError(f"Pochhammer length must be nonnegative, got {s}")
    value = Fraction(a)
    result = Fraction(1)
    for i in range(s):
        result *= value + i
    return result


def t_coefficient(n: int, k: int, s: int) -> Fraction:
    """
    Weight of x^{k-s} conj(x)^s in P_k^n.

    T_s^k(n) = C(k, s) ((n+1)/2)_{k-s} ((n-1)/2)_s / (n)_k
    """
    if n < 1:
        raise DomainError(f"Dimension must be positive, got {n}")
    if not 0 <= s <= k:
        raise DomainError(f"Index s={s} out of range 0..{k}")
    numerator = comb(k, s) * pochhammer(Fraction(n + 1, 2), k - s) * pochhammer(Fraction(n - 1, 2), s)
    return numerator / pochhammer(n, k)


@lru_cache(maxsize=None)
def _axial_powers(sign: int, k: int) -> AxialPolynomial:
    if k == 0:
        return AxialPolynomial.one()
    return _axial_powers(sign, k - 1) * AxialPolynomial.paravector(sign)


@lru_cache(maxsize=None)
def appell_axial(n: int, k: int) -> AxialPolynomial:
    """P_k^n in axial form."""
    require_odd_dimension(n)
    if k < 0:
        raise DomainError(f"Appell index must be nonnegative, got {k}")
    total = AxialPolynomial()
    for s in range(k + 1):
        term = _axial_powers(1, k - s) * _axial_powers(-1, s)
        total = total + term.scale(t_coefficient(n, k, s))
    return total


@lru_cache(maxsize=None)
def appell_polynomial(n: int, k: int) -> CliffordPolynomial:
    """P_k^n(x) = sum_s T_s^k(n) x^{k-s} conj(x)^s as an exact polynomial."""
    logger.debug("Materializing P_%d^%d", k, n)
    return materialize_axial(n, appell_axial(n, k))


def appell_evaluate(n: int, k: int, point: Sequence[Number]) -> Multivector:
    """P_k^n at a point; exact for rational coordinates."""
    if len(point) != n + 1:
        raise DimensionMismatchError(f"Expected {n + 1} coordinates, got {len(point)}")
    return appell_axial(n, k).evaluate(point)


@lru_cache(maxsize=None)
def _t_table(n: int, order: int) -> np.ndarray:
    table = np.zeros((order + 1, order + 1))
    for k in range(order + 1):
        for s in range(k + 1):
            table[k, s] = float(t_coefficient(n, k, s))
    table.setflags(write=False)
    return table


def appell_values(n: int, point: Sequence[float], order: int) -> List[Multivector]:
    """
    Approximate P_0^n(x), ..., P_order^n(x).

    Uses the slice isomorphism x -> z = x0 + i|x_vec|: with w = sum_s T z^{k-s} conj(z)^s,
    P_k(x) = Re(w) + (x_vec / |x_vec|) Im(w).
    """
    require_odd_dimension(n)
    if len(point) != n + 1:
        raise DimensionMismatchError(f"Expected {n + 1} coordinates, got {len(point)}")
    x0 = float(point[0])
    vec = np.asarray([float(c) for c in point[1:]])
    radius = float(np.linalg.norm(vec))
    direction = vec / radius if radius > 0 else np.zeros(n)

    z = complex(x0, radius)
    z_powers = np.cumprod(np.concatenate(([1.0 + 0j], np.full(order, z))))
    zbar_powers = np.conj(z_powers)
    table = _t_table(n, order)

    values = []
    for k in range(order + 1):
        w = complex(np.dot(table[k, : k + 1], z_powers[k::-1] * zbar_powers[: k + 1]))
        components = {0: w.real}
        for i in range(n):
            components[1 << i] = direction[i] * w.imag
        values.append(Multivector(n, components, exact=False))
    return values


SeriesCoefficient = Union[Multivector, Number]


@dataclass(frozen=True, eq=False)
class _CoefficientSeries:
    """Finite coefficient list c_0..c_K over R_n."""

    basis: ClassVar[str] = ""

    n: int
    coeffs: Tuple[Multivector, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        """Coerces plain numbers to scalars and checks dimension and kind."""
        items = list(self.coeffs) or [0]
        exact = not any(isinstance(c, float) or (isinstance(c, Multivector) and not c.exact) for c in items)
        converted = []
        for c in items:
            if not isinstance(c, Multivector):
                c = Multivector.scalar(self.n, c, exact)
            if c.n != self.n:
                raise DimensionMismatchError(f"Coefficient in R_{c.n}, series over R_{self.n}")
            if c.exact != exact:
                raise ScalarKindMismatchError("Series coefficients must share one scalar kind")
            converted.append(c)
        object.__setattr__(self, "coeffs", tuple(converted))

    @classmethod
    def monomial(cls, n: int, k: int, coefficient: SeriesCoefficient = 1):
        return cls(n, tuple([0] * k + [coefficient]))

    @classmethod
    def zero(cls, n: int, order: int = 0):
        return cls(n, tuple([0] * (order + 1)))

    @property
    def order(self) -> int:
        """Truncation order K."""
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return self.coeffs[0].exact

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def coefficient(self, k: int) -> Multivector:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Multivector.zero(self.n, self.exact)

    def truncate(self, order: int):
        """Cut or zero-pad to order K."""
        return type(self)(self.n, tuple(self.coefficient(k) for k in range(order + 1)))

    def stripped(self) -> Tuple[Multivector, ...]:
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        return tuple(coeffs)

    def support(self) -> List[int]:
        return [k for k, c in enumerate(self.coeffs) if not c.is_zero]

    def _check_compatible(self, other: "_CoefficientSeries") -> None:
        if type(self) is not type(other):
            raise DomainError(f"Cannot combine {self.basis} and {other.basis} series")
        if self.n != other.n:
            raise DimensionMismatchError(f"Series over R_{self.n} and R_{other.n}")

    def __add__(self, other: "_CoefficientSeries"):
        self._check_compatible(other)
        order = max(self.order, other.order)
        return type(self)(self.n, tuple(self.coefficient(k) + other.coefficient(k) for k in range(order + 1)))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "_CoefficientSeries"):
        return self + (-other)

    def scale(self, factor: Number):
        return type(self)(self.n, tuple(c.scale(factor) for c in self.coeffs))

    def right_multiply(self, constant: Multivector):
        """Multiply every coefficient on the right by a Clifford constant."""
        return type(self)(self.n, tuple(geometric_product(c, constant) for c in self.coeffs))

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.n == other.n and self.stripped() == other.stripped()

    def __hash__(self) -> int:
        return hash((self.basis, self.n, self.stripped()))

    def __str__(self) -> str:
        symbol = "x0^" if self.basis == "taylor" else "P_"
        parts = [f"({c})*{symbol}{k}" for k, c in enumerate(self.coeffs) if not c.is_zero]
        return " + ".join(parts) if parts else "0"


class TaylorSeries(_CoefficientSeries):
    """Coefficients a_k of x0^k: restriction data of a slice or axial function."""

    basis: ClassVar[str] = "taylor"

    def derivative(self, order: int = 1) -> "TaylorSeries":
        """Formal d^order/dx0^order."""
        if order < 0:
            raise DomainError(f"Derivative order must be nonnegative, got {order}")
        shifted = [
            self.coeffs[k + order].scale(Fraction(factorial(k + order), factorial(k)))
            for k in range(len(self.coeffs) - order)
        ]
        return TaylorSeries(self.n, tuple(shifted) or (0,))


class AppellSeries(_CoefficientSeries):
    """Coefficients alpha_k of P_k^n: sum_k P_k^n(x) alpha_k."""

    basis: ClassVar[str] = "appell"


def taylor_derivative(f: TaylorSeries, order: int = 1) -> TaylorSeries:
    return f.derivative(order)


def gck_extend(f0: TaylorSeries) -> AppellSeries:
    """Generalized CK-extension: x0^k a_k -> P_k^n(x) a_k."""
    return AppellSeries(f0.n, f0.coeffs)


def gck_restrict(extension: AppellSeries) -> TaylorSeries:
    """Restriction to the real line, using P_k^n(x0) = x0^k."""
    return TaylorSeries(extension.n, extension.coeffs)


def materialize(series: AppellSeries) -> CliffordPolynomial:
    """sum_k P_k^n(x) alpha_k as an explicit polynomial."""
    require_odd_dimension(series.n)
    result = CliffordPolynomial.zero(series.n)
    for k, alpha in enumerate(series.coeffs):
        if alpha.is_zero:
            continue
        term = poly_mul(appell_polynomial(series.n, k), CliffordPolynomial.constant(series.n, alpha))
        result = poly_add(result, term)
    return result


def slice_extend(f0: TaylorSeries) -> CliffordPolynomial:
    """Slice extension sum_k x^k a_k."""
    result = CliffordPolynomial.zero(f0.n)
    for k, a in enumerate(f0.coeffs):
        if a.is_zero:
            continue
        result = poly_add(result, poly_mul(paravector_power(f0.n, k), CliffordPolynomial.constant(f0.n, a)))
    return result


def _cauchy_coefficient(left: _CoefficientSeries, right: _CoefficientSeries, k: int) -> Multivector:
    total = Multivector.zero(left.n, left.exact)
    for i in range(k + 1):
        a = left.coefficient(i)
        b = right.coefficient(k - i)
        if not a.is_zero and not b.is_zero:
            total = total + geometric_product(a, b)
    return total


def gck_product(a: AppellSeries, b: AppellSeries, order: Optional[int] = None) -> AppellSeries:
    """
    GCK-product: extension of the product of the two restrictions.

    Restriction coefficients multiply in argument order (a then b). Without an
    explicit order the result is truncated at min(a.order, b.order).
    """
    a._check_compatible(b)
    if order is None:
        order = min(a.order, b.order)
    return AppellSeries(a.n, tuple(_cauchy_coefficient(a, b, k) for k in range(order + 1)))


def gck_inverse(a: AppellSeries, order: int) -> AppellSeries:
    """
    Extension of 1 / (restriction of a), truncated at order K.

    The constant term must be invertible.
    """
    head = a.coefficient(0)
    if head.is_zero:
        raise DomainError("GCK inverse needs a nonzero constant term")
    head_inverse = multivector_inverse(head)

    coeffs: List[Multivector] = [head_inverse]
    for k in range(1, order + 1):
        total = Multivector.zero(a.n, a.exact)
        for i in range(1, k + 1):
            total = total + geometric_product(a.coefficient(i), coeffs[k - i])
        coeffs.append(-geometric_product(head_inverse, total))
    return AppellSeries(a.n, tuple(coeffs))


def gck_divide(a: AppellSeries, b: AppellSeries, order: Optional[int] = None) -> AppellSeries:
    """
    Left GCK-division: the series c with b (.) c = a.

    b may vanish to order v at the origin provided a does too; this gives
    P_1^{-(.)} (.) P_k = P_{k-1}.
    """
    a._check_compatible(b)
    support = b.support()
    if not support:
        raise DomainError("Cannot divide by the zero series")
    valuation = support[0]
    if any(not a.coefficient(k).is_zero for k in range(valuation)):
        raise DomainError(f"Dividend must vanish to order {valuation} at the origin")

    if order is None:
        order = a.order - valuation
    head_inverse = multivector_inverse(b.coefficient(valuation))

    coeffs: List[Multivector] = []
    for k in range(order + 1):
        total = a.coefficient(k + valuation)
        for i in range(1, k + 1):
            total = total - geometric_product(b.coefficient(i + valuation), coeffs[k - i])
        coeffs.append(geometric_product(head_inverse, total))
    return AppellSeries(a.n, tuple(coeffs))


def series_to_json(series: _CoefficientSeries) -> Dict[str, Any]:
    return {
        "n": series.n,
        "basis": series.basis,
        "coeffs": [multivector_to_json(c) for c in series.coeffs],
    }


def series_from_json(data: Mapping[str, Any]) -> _CoefficientSeries:
    try:
        n = int(data["n"])
        basis = data["basis"]
        coeffs = tuple(multivector_from_json(c) for c in data["coeffs"])
    except (KeyError, TypeError) as exc:
        raise DomainError(f"Malformed series JSON: {exc}") from exc
    if basis == "taylor":
        return TaylorSeries(n, coeffs)
    if basis == "appell":
        return AppellSeries(n, coeffs)
    raise DomainError(f"Unknown series basis: {basis}")
