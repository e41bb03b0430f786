"""
Hilbert modules of axially monogenic functions in coefficient form.

A function f = sum_k P_k^n(x) alpha_k is stored by its Appell coefficients,
and a space is fixed by weights b_k with <f, g> = sum_k b_k conj(alpha_k) beta_k.
The creation, annihilation and shift operators act on the coefficients.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence

import numpy as np
from scipy.special import gammaln

from src.analytics.appell import AppellSeries, appell_evaluate, appell_values, require_odd_dimension
from src.analytics.fueter import WeightKind, WeightSequence, builtin_weights, transport_weights
from src.core.exceptions import DimensionMismatchError, DomainError, ScalarKindMismatchError
from src.core.multivector import Multivector, Number, clifford_conjugate, geometric_product, norm, real_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CoefficientFunction:
    """Finitely supported k -> alpha_k, representing sum_k P_k^n(x) alpha_k."""

    n: int
    coeffs: Mapping[int, Multivector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[int, Multivector] = {}
        kinds = set()
        for k, alpha in self.coeffs.items():
            if k < 0:
                raise DomainError(f"Negative Appell index {k}")
            if not isinstance(alpha, Multivector):
                alpha = Multivector.scalar(self.n, alpha, not isinstance(alpha, float))
            if alpha.n != self.n:
                raise DimensionMismatchError(f"Coefficient in R_{alpha.n}, function over R_{self.n}")
            kinds.add(alpha.exact)
            if not alpha.is_zero:
                clean[int(k)] = alpha
        if len(kinds) > 1:
            raise ScalarKindMismatchError("Coefficients must share one scalar kind")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, n: int) -> "CoefficientFunction":
        return cls(n, {})

    @classmethod
    def appell(cls, n: int, k: int, coefficient: Number | Multivector = 1) -> "CoefficientFunction":
        """P_k^n alpha."""
        return cls(n, {k: coefficient})

    @classmethod
    def from_series(cls, series: AppellSeries) -> "CoefficientFunction":
        return cls(series.n, dict(enumerate(series.coeffs)))

    def to_series(self) -> AppellSeries:
        return AppellSeries(self.n, tuple(self.coefficient(k) for k in range(self.support_max + 1)))

    @property
    def exact(self) -> bool:
        return all(alpha.exact for alpha in self.coeffs.values())

    @property
    def support_max(self) -> int:
        """Largest index with a nonzero coefficient, -1 for zero."""
        return max(self.coeffs, default=-1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Multivector:
        return self.coeffs.get(k, Multivector.zero(self.n, self.exact))

    def _check_compatible(self, other: "CoefficientFunction") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"Functions over R_{self.n} and R_{other.n}")

    def __add__(self, other: "CoefficientFunction") -> "CoefficientFunction":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, alpha in other.coeffs.items():
            out[k] = out[k] + alpha if k in out else alpha
        return CoefficientFunction(self.n, out)

    def __neg__(self) -> "CoefficientFunction":
        return CoefficientFunction(self.n, {k: -a for k, a in self.coeffs.items()})

    def __sub__(self, other: "CoefficientFunction") -> "CoefficientFunction":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientFunction):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.coeffs.items(), key=lambda item: item[0]))))

    def __str__(self) -> str:
        parts = [f"P_{k}*({self.coeffs[k]})" for k in sorted(self.coeffs)]
        return " + ".join(parts) if parts else "0"


def evaluate_function(f: CoefficientFunction, point: Sequence[Number]) -> Multivector:
    """f(x); exact when f and every coordinate are rational."""
    if len(point) != f.n + 1:
        raise DimensionMismatchError(f"Expected {f.n + 1} coordinates, got {len(point)}")
    exact = f.exact and not any(isinstance(c, float) for c in point)
    if exact:
        total = Multivector.zero(f.n)
        for k, alpha in f.coeffs.items():
            total = total + geometric_product(appell_evaluate(f.n, k, point), alpha)
        return total
    values = appell_values(f.n, [float(c) for c in point], max(f.support_max, 0))
    total = Multivector.zero(f.n, exact=False)
    for k, alpha in f.coeffs.items():
        total = total + geometric_product(values[k], alpha.to_approx())
    return total


class SpaceKind(str, Enum):
    FOCK = "fock"
    HARDY = "hardy"
    FUETER_RANGE = "fueter-range"


@dataclass(frozen=True)
class SpaceConfig:
    """
    A weighted coefficient space.

    FOCK has b_k = k!, HARDY b_k = 1; FUETER_RANGE transports the slice
    weights ``base`` (Fock by default) through the Fueter-Sce map.
    """

    kind: SpaceKind
    n: int
    base: Optional[WeightSequence] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SpaceKind(self.kind))
        require_odd_dimension(self.n)

    @property
    def weights(self) -> WeightSequence:
        if self.kind is SpaceKind.FOCK:
            return builtin_weights(WeightKind.FOCK)
        if self.kind is SpaceKind.HARDY:
            return builtin_weights(WeightKind.HARDY)
        return transport_weights(self.n, self.base or builtin_weights(WeightKind.FOCK))

    def weight(self, k: int) -> Fraction:
        return self.weights(k)

    def contains(self, point: Sequence[float]) -> bool:
        if self.kind is SpaceKind.HARDY:
            return _radius(point) < 1.0
        return True


def _radius(point: Sequence[Number]) -> float:
    return float(np.linalg.norm(np.asarray([float(c) for c in point])))


def _check_space(space: SpaceConfig, f: CoefficientFunction) -> None:
    if space.n != f.n:
        raise DimensionMismatchError(f"Space over R_{space.n}, function over R_{f.n}")


def inner_product(space: SpaceConfig, f: CoefficientFunction, g: CoefficientFunction) -> Multivector:
    """sum_k b_k conj(alpha_k) beta_k."""
    _check_space(space, f)
    f._check_compatible(g)
    exact = f.exact and g.exact
    total = Multivector.zero(f.n, exact)
    for k in sorted(set(f.coeffs) & set(g.coeffs)):
        alpha, beta = f.coeffs[k], g.coeffs[k]
        if not exact:
            alpha, beta = alpha.to_approx(), beta.to_approx()
        total = total + geometric_product(clifford_conjugate(alpha), beta).scale(space.weight(k))
    return total


def norm_sq(space: SpaceConfig, f: CoefficientFunction) -> Number:
    """Re <f, f>."""
    return real_part(inner_product(space, f, f))


@dataclass(frozen=True)
class KernelValue:
    value: Multivector
    order: int
    tail_bound: Optional[float]


def kernel_tail_bound(space: SpaceConfig, x: Sequence[float], y: Sequence[float], order: int) -> Optional[float]:
    """
    Bound on the terms after P_K, using |P_k(x)| <= |x|^k.

    Fock: e^t t^{K+1} / (K+1)!, Hardy: t^{K+1} / (1 - t), t = |x||y|.
    No certified bound is given for transported weights.
    """
    t = _radius(x) * _radius(y)
    if t == 0:
        return 0.0
    if space.kind is SpaceKind.FOCK:
        return float(np.exp(t + (order + 1) * math.log(t) - gammaln(order + 2)))
    if space.kind is SpaceKind.HARDY:
        return t ** (order + 1) / (1 - t)
    return None


def kernel_eval(space: SpaceConfig, x: Sequence[float], y: Sequence[float], order: int) -> KernelValue:
    """K(x, y) = sum_{k <= K} P_k(x) conj(P_k(y)) / b_k in double precision."""
    if order < 0:
        raise DomainError(f"Truncation order must be nonnegative, got {order}")
    for point in (x, y):
        if len(point) != space.n + 1:
            raise DimensionMismatchError(f"Expected {space.n + 1} coordinates, got {len(point)}")
        if not space.contains(point):
            raise DomainError(f"Point {list(point)} lies outside the open unit ball")

    px = appell_values(space.n, [float(c) for c in x], order)
    py = appell_values(space.n, [float(c) for c in y], order)
    total = Multivector.zero(space.n, exact=False)
    for k in range(order + 1):
        term = geometric_product(px[k], clifford_conjugate(py[k]))
        total = total + term.scale(1.0 / float(space.weight(k)))
    return KernelValue(total, order, kernel_tail_bound(space, x, y, order))


def kernel_eval_certified(
    space: SpaceConfig, x: Sequence[float], y: Sequence[float], tol: float, max_order: int = 4096
) -> KernelValue:
    """kernel_eval with K doubled from 16 until the tail bound is below tol."""
    if space.kind is SpaceKind.FUETER_RANGE:
        raise DomainError("No certified tail bound for transported weights")
    order = 16
    while kernel_tail_bound(space, x, y, order) >= tol:
        order *= 2
        if order > max_order:
            raise DomainError(f"No truncation up to {max_order} reaches tol={tol}")
    return kernel_eval(space, x, y, order)


def kernel_coefficients(space: SpaceConfig, y: Sequence[Number], order: int) -> CoefficientFunction:
    """K_y as a coefficient function: alpha_k = conj(P_k(y)) / b_k."""
    if len(y) != space.n + 1:
        raise DimensionMismatchError(f"Expected {space.n + 1} coordinates, got {len(y)}")
    exact = not any(isinstance(c, float) for c in y)
    if exact:
        values = [appell_evaluate(space.n, k, y) for k in range(order + 1)]
    else:
        values = appell_values(space.n, y, order)
    coeffs = {}
    for k, p_k in enumerate(values):
        weight = space.weight(k)
        coeffs[k] = clifford_conjugate(p_k) / weight if exact else clifford_conjugate(p_k).scale(1.0 / float(weight))
    return CoefficientFunction(space.n, coeffs)


def reproducing_check(space: SpaceConfig, f: CoefficientFunction, y: Sequence[Number], order: int) -> float:
    """|<K_y, f> - f(y)|; zero in exact mode once the support of f is within K."""
    if f.support_max > order:
        raise DomainError(f"Support {f.support_max} exceeds the kernel truncation {order}")
    reproduced = inner_product(space, kernel_coefficients(space, y, order), f)
    value = evaluate_function(f, y)
    if reproduced.exact != value.exact:
        reproduced, value = reproduced.to_approx(), value.to_approx()
    return (reproduced - value).max_abs()


def pointwise_bound(space: SpaceConfig, f: CoefficientFunction, x: Sequence[float]) -> float:
    """
    Right-hand side of |f(x)| <= C(x) ||f||.

    Fock: 2^{n/2} e^{|x|^2/2}, Hardy: (1 - |x|^2)^{-1/2}; otherwise the
    finite-support form (2^n sum_{k <= support} |x|^{2k} / b_k)^{1/2}.
    """
    radius = _radius(x)
    f_norm = math.sqrt(max(float(norm_sq(space, f)), 0.0))
    if space.kind is SpaceKind.FOCK:
        return 2 ** (space.n / 2) * math.exp(radius ** 2 / 2) * f_norm
    if space.kind is SpaceKind.HARDY:
        return f_norm / math.sqrt(1 - radius ** 2)
    series = sum(radius ** (2 * k) / float(space.weight(k)) for k in range(f.support_max + 1))
    return math.sqrt(2 ** space.n * series) * f_norm


def pointwise_bound_check(space: SpaceConfig, f: CoefficientFunction, x: Sequence[float]) -> bool:
    if not space.contains(x):
        raise DomainError(f"Point {list(x)} lies outside the open unit ball")
    lhs = norm(evaluate_function(f, [float(c) for c in x]))
    return lhs <= pointwise_bound(space, f, x) * (1 + 1e-12) + 1e-12


def creation(f: CoefficientFunction) -> CoefficientFunction:
    """Multiplication by P_1 in the GCK sense: (Mf)_{k+1} = f_k."""
    return CoefficientFunction(f.n, {k + 1: alpha for k, alpha in f.coeffs.items()})


def annihilation(f: CoefficientFunction) -> CoefficientFunction:
    """dbar / 2 on coefficients: (Af)_k = (k+1) f_{k+1}."""
    return CoefficientFunction(f.n, {k - 1: alpha.scale(k) for k, alpha in f.coeffs.items() if k >= 1})


def backward_shift(f: CoefficientFunction) -> CoefficientFunction:
    """(Sf)_k = f_{k+1}."""
    return CoefficientFunction(f.n, {k - 1: alpha for k, alpha in f.coeffs.items() if k >= 1})


def p0_projection(f: CoefficientFunction) -> CoefficientFunction:
    """Keep the constant term."""
    return CoefficientFunction(f.n, {0: f.coeffs[0]} if 0 in f.coeffs else {})


def adjoint_check(space: SpaceConfig, f: CoefficientFunction, g: CoefficientFunction) -> bool:
    """
    Fock: <Af, g> = <f, Mg>. Hardy: <Sf, g> = <f, Mg>.
    """
    if space.kind is SpaceKind.FOCK:
        lhs = inner_product(space, annihilation(f), g)
    elif space.kind is SpaceKind.HARDY:
        lhs = inner_product(space, backward_shift(f), g)
    else:
        raise DomainError(f"No adjoint identity for the {space.kind.value} space")
    rhs = inner_product(space, f, creation(g))
    if lhs.exact:
        return lhs == rhs
    return (lhs - rhs).max_abs() <= 1e-12 * max(1.0, lhs.max_abs())


def commutator_check(f: CoefficientFunction) -> bool:
    """A M - M A = I."""
    return annihilation(creation(f)) - creation(annihilation(f)) == f


def shift_identity_check(f: CoefficientFunction) -> bool:
    """S M = I and M S = I - P0."""
    return backward_shift(creation(f)) == f and creation(backward_shift(f)) == f - p0_projection(f)


def kernel_symmetry_check(space: SpaceConfig, x0: float, y0: float, order: int, tol: float = 1e-12) -> bool:
    """K(x0, y0) = K(y0, x0) on the real axis."""
    zeros = [0.0] * space.n
    forward = kernel_eval(space, [x0] + zeros, [y0] + zeros, order).value
    backward = kernel_eval(space, [y0] + zeros, [x0] + zeros, order).value
    return (forward - backward).max_abs() <= tol


def containment_check(n: int, f: CoefficientFunction) -> bool:
    """The Fock norm (b_k = k!) dominates the transported Fock norm b_k = (k!)^2 / (k+n-1)!."""
    fock = SpaceConfig(SpaceKind.FOCK, n)
    fueter_fock = SpaceConfig(SpaceKind.FUETER_RANGE, n, builtin_weights(WeightKind.FOCK))
    return norm_sq(fueter_fock, f) <= norm_sq(fock, f)


@dataclass(frozen=True)
class DivergenceWitness:
    """
    Partial sums for g with alpha_k = 1 / sqrt((k+1)(k+1)!) in the Fock space.

    ||g||^2 stays below pi^2/6 while the partial sums of ||Mg||^2 and ||Ag||^2
    sit above logarithmic lower bounds.
    """

    terms: int
    g_norm_sq: float
    mg_partial: float
    ag_partial: float
    mg_lower_bound: float
    ag_lower_bound: float
    threshold: float = 10.0

    @property
    def certified(self) -> bool:
        return (
            self.g_norm_sq <= math.pi ** 2 / 6
            and self.mg_partial >= self.mg_lower_bound > self.threshold
            and self.ag_partial >= self.ag_lower_bound > self.threshold
        )


def divergence_witness(terms: int = 10 ** 6) -> DivergenceWitness:
    if terms < 1:
        raise DomainError(f"Witness needs at least one term, got {terms}")
    k = np.arange(terms, dtype=float)
    log_fock = gammaln(k + 1)

    def log_alpha_sq(index: np.ndarray) -> np.ndarray:
        return -np.log(index + 1) - gammaln(index + 2)

    g_terms = np.exp(log_fock + log_alpha_sq(k))
    # (Mg)_{k+1} = alpha_k, weight (k+1)!
    mg_terms = np.exp(gammaln(k + 2) + log_alpha_sq(k))
    # (Ag)_k = (k+1) alpha_{k+1}, weight k!
    ag_terms = np.exp(log_fock + 2 * np.log(k + 1) + log_alpha_sq(k + 1))

    mg_partial = np.cumsum(mg_terms)
    ag_partial = np.cumsum(ag_terms)
    witness = DivergenceWitness(
        terms=terms,
        g_norm_sq=float(np.sum(g_terms)),
        mg_partial=float(mg_partial[-1]),
        ag_partial=float(ag_partial[-1]),
        mg_lower_bound=math.log(terms + 1),
        ag_lower_bound=math.log(terms + 2) - math.pi ** 2 / 6,
    )
    logger.debug("Divergence witness: %s", witness)
    return witness
