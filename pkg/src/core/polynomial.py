"""
Polynomials in x0, x1, ..., xn with Clifford coefficients.

A term is stored as monomial -> coefficient with the coefficient read to the
right of the (commuting) monomial. The Dirac operator and its conjugate apply
the generators e_i from the left, so left-monogenic polynomials are the null
solutions of :func:`dirac`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from config import settings
from src.core.axial import AxialPolynomial, rho_power_terms
from src.core.exceptions import DegreeCapError, DimensionMismatchError, DomainError, ScalarKindMismatchError
from src.core.multivector import (
    Multivector,
    Number,
    Scalar,
    blade_product_sign,
    coerce_scalar,
    geometric_product,
    multivector_from_json,
    multivector_to_json,
)

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Accumulator = Dict[Exponents, Dict[int, Scalar]]


def _accumulate(acc: Accumulator, exps: Exponents, bits: int, value: Scalar) -> None:
    bucket = acc.setdefault(exps, {})
    bucket[bits] = bucket.get(bits, 0) + value


def _from_accumulator(n: int, acc: Accumulator, exact: bool) -> "CliffordPolynomial":
    terms: Dict[Exponents, Multivector] = {}
    for exps, bucket in acc.items():
        components = {bits: v for bits, v in bucket.items() if v != 0}
        if components:
            terms[exps] = Multivector._trusted(n, components, exact)
    return CliffordPolynomial._trusted(n, terms, exact)


def _check_degree(degree: int) -> None:
    if degree > settings.DEGREE_CAP:
        raise DegreeCapError(f"Total degree {degree} exceeds the cap of {settings.DEGREE_CAP}")


@dataclass(frozen=True, eq=False)
class CliffordPolynomial:
    """Sparse polynomial in n + 1 real variables with Multivector coefficients."""

    n: int
    terms: Mapping[Exponents, Multivector] = field(default_factory=dict)
    exact: bool = True

    def __post_init__(self) -> None:
        """Validates exponent vectors and coefficients, drops zero terms."""
        clean: Dict[Exponents, Multivector] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.n + 1 or any(e < 0 for e in exps):
                raise DomainError(f"Invalid exponent vector {exps} for {self.n + 1} variables")
            if coeff.n != self.n:
                raise DimensionMismatchError(f"Coefficient in R_{coeff.n}, polynomial over R_{self.n}")
            if coeff.exact != self.exact:
                raise ScalarKindMismatchError("Coefficient kind differs from polynomial kind")
            if not coeff.is_zero:
                clean[exps] = coeff
        if clean:
            _check_degree(max(sum(e) for e in clean))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _trusted(cls, n: int, terms: Dict[Exponents, Multivector], exact: bool) -> "CliffordPolynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "exact", exact)
        return obj

    # Constructors

    @classmethod
    def zero(cls, n: int, exact: bool = True) -> "CliffordPolynomial":
        return cls._trusted(n, {}, exact)

    @classmethod
    def constant(cls, n: int, value: Union[Multivector, Number], exact: bool = True) -> "CliffordPolynomial":
        if not isinstance(value, Multivector):
            value = Multivector.scalar(n, value, exact)
        return cls(n, {(0,) * (n + 1): value}, value.exact)

    @classmethod
    def variable(cls, n: int, i: int, exact: bool = True) -> "CliffordPolynomial":
        """The coordinate x_i as a polynomial (0 <= i <= n)."""
        if not 0 <= i <= n:
            raise DomainError(f"Variable index {i} out of range 0..{n}")
        exps = tuple(1 if j == i else 0 for j in range(n + 1))
        return cls(n, {exps: Multivector.scalar(n, 1, exact)}, exact)

    @classmethod
    def x0_power(cls, n: int, k: int) -> "CliffordPolynomial":
        exps = (k,) + (0,) * n
        return cls(n, {exps: Multivector.scalar(n, 1)})

    # Queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]) -> Multivector:
        return self.terms.get(tuple(exps), Multivector.zero(self.n, self.exact))

    def _check_compatible(self, other: "CliffordPolynomial") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"Polynomials over R_{self.n} and R_{other.n}")
        if self.exact != other.exact:
            raise ScalarKindMismatchError("Cannot mix exact and approximate polynomials")

    # Operators

    def __add__(self, other: Any) -> "CliffordPolynomial":
        if isinstance(other, CliffordPolynomial):
            return poly_add(self, other)
        if isinstance(other, (Multivector, int, Fraction, float)):
            return poly_add(self, CliffordPolynomial.constant(self.n, other, self.exact))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "CliffordPolynomial":
        return poly_scale(self, -1)

    def __sub__(self, other: Any) -> "CliffordPolynomial":
        if isinstance(other, (CliffordPolynomial, Multivector, int, Fraction, float)):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other: Any) -> "CliffordPolynomial":
        if isinstance(other, CliffordPolynomial):
            return poly_mul(self, other)
        if isinstance(other, Multivector):
            return poly_mul(self, CliffordPolynomial.constant(self.n, other))
        if isinstance(other, (int, Fraction, float)):
            return poly_scale(self, other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "CliffordPolynomial":
        if isinstance(other, Multivector):
            return poly_mul(CliffordPolynomial.constant(self.n, other), self)
        if isinstance(other, (int, Fraction, float)):
            return poly_scale(self, other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == CliffordPolynomial.constant(self.n, other, self.exact)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.n == other.n and self.exact == other.exact and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.exact, tuple(sorted(self.terms.items()))))

    def sorted_terms(self) -> List[Tuple[Exponents, Multivector]]:
        """Terms ordered by total degree, then by exponent vector (descending in x0)."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            monomial = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e > 0
            )
            text = str(coeff)
            if len(coeff.components) > 1:
                text = f"({text})"
            if not monomial:
                parts.append(text)
            elif text == "1":
                parts.append(monomial)
            else:
                parts.append(f"{text}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CliffordPolynomial(n={self.n}, {self})"


def poly_add(p: CliffordPolynomial, q: CliffordPolynomial) -> CliffordPolynomial:
    p._check_compatible(q)
    terms = dict(p.terms)
    for exps, coeff in q.terms.items():
        total = terms[exps] + coeff if exps in terms else coeff
        if total.is_zero:
            terms.pop(exps, None)
        else:
            terms[exps] = total
    return CliffordPolynomial._trusted(p.n, terms, p.exact)


def poly_sub(p: CliffordPolynomial, q: CliffordPolynomial) -> CliffordPolynomial:
    return poly_add(p, poly_scale(q, -1))


def poly_scale(p: CliffordPolynomial, factor: Number) -> CliffordPolynomial:
    """Multiply every coefficient by a real scalar."""
    value = coerce_scalar(factor, p.exact)
    if value == 0:
        return CliffordPolynomial.zero(p.n, p.exact)
    return CliffordPolynomial._trusted(p.n, {e: c.scale(value) for e, c in p.terms.items()}, p.exact)


def poly_mul(p: CliffordPolynomial, q: CliffordPolynomial) -> CliffordPolynomial:
    """Product pq; coefficients multiply p-then-q, variables commute with everything."""
    p._check_compatible(q)
    if p.is_zero or q.is_zero:
        return CliffordPolynomial.zero(p.n, p.exact)
    _check_degree(p.degree + q.degree)

    acc: Accumulator = {}
    for exps_p, coeff_p in p.terms.items():
        for exps_q, coeff_q in q.terms.items():
            exps = tuple(a + b for a, b in zip(exps_p, exps_q))
            bucket = acc.setdefault(exps, {})
            for bits_a, value_a in coeff_p.components.items():
                for bits_b, value_b in coeff_q.components.items():
                    term = value_a * value_b
                    if blade_product_sign(bits_a, bits_b) < 0:
                        term = -term
                    bits = bits_a ^ bits_b
                    bucket[bits] = bucket.get(bits, 0) + term
    return _from_accumulator(p.n, acc, p.exact)


def poly_power(p: CliffordPolynomial, k: int) -> CliffordPolynomial:
    if k < 0:
        raise DomainError(f"Negative power {k}")
    result = CliffordPolynomial.constant(p.n, 1, p.exact)
    for _ in range(k):
        result = poly_mul(result, p)
    return result


def partial_derivative(p: CliffordPolynomial, i: int) -> CliffordPolynomial:
    """Formal derivative with respect to x_i."""
    if not 0 <= i <= p.n:
        raise DomainError(f"Variable index {i} out of range 0..{p.n}")
    terms: Dict[Exponents, Multivector] = {}
    for exps, coeff in p.terms.items():
        power = exps[i]
        if power == 0:
            continue
        lowered = exps[:i] + (power - 1,) + exps[i + 1:]
        terms[lowered] = coeff.scale(power)
    return CliffordPolynomial._trusted(p.n, terms, p.exact)


def laplacian(p: CliffordPolynomial) -> CliffordPolynomial:
    """Sum of the second derivatives in all n + 1 variables."""
    acc: Accumulator = {}
    for exps, coeff in p.terms.items():
        for i, power in enumerate(exps):
            if power < 2:
                continue
            lowered = exps[:i] + (power - 2,) + exps[i + 1:]
            factor = power * (power - 1)
            for bits, value in coeff.components.items():
                _accumulate(acc, lowered, bits, value * factor)
    return _from_accumulator(p.n, acc, p.exact)


def laplacian_power(p: CliffordPolynomial, m: int) -> CliffordPolynomial:
    """Apply the Laplacian m times; m = 0 is the identity."""
    if m < 0:
        raise DomainError(f"Laplacian power must be nonnegative, got {m}")
    for _ in range(m):
        p = laplacian(p)
    return p


def _cauchy_riemann(p: CliffordPolynomial, vector_sign: int) -> CliffordPolynomial:
    acc: Accumulator = {}
    for exps, coeff in p.terms.items():
        if exps[0] > 0:
            lowered = (exps[0] - 1,) + exps[1:]
            for bits, value in coeff.components.items():
                _accumulate(acc, lowered, bits, value * exps[0])
        for i in range(1, p.n + 1):
            power = exps[i]
            if power == 0:
                continue
            lowered = exps[:i] + (power - 1,) + exps[i + 1:]
            generator = 1 << (i - 1)
            for bits, value in coeff.components.items():
                sign = vector_sign * blade_product_sign(generator, bits)
                _accumulate(acc, lowered, generator ^ bits, value * (sign * power))
    return _from_accumulator(p.n, acc, p.exact)


def dirac(p: CliffordPolynomial) -> CliffordPolynomial:
    """Cauchy-Riemann operator d/dx0 + sum_i e_i d/dx_i (e_i from the left)."""
    return _cauchy_riemann(p, 1)


def conj_derivative(p: CliffordPolynomial) -> CliffordPolynomial:
    """Conjugate operator d/dx0 - sum_i e_i d/dx_i (e_i from the left)."""
    return _cauchy_riemann(p, -1)


def dirac_power(p: CliffordPolynomial, m: int) -> CliffordPolynomial:
    if m < 0:
        raise DomainError(f"Dirac power must be nonnegative, got {m}")
    for _ in range(m):
        p = dirac(p)
    return p


def materialize_axial(n: int, axial: AxialPolynomial) -> CliffordPolynomial:
    """Expand A(x0, rho) + x_vec B(x0, rho) into monomials of x0..xn."""
    acc: Accumulator = {}
    for (a, j), c in axial.scalar_part.items():
        for even, multiplicity in rho_power_terms(n, j):
            _accumulate(acc, (a,) + even, 0, c * multiplicity)
    for (a, j), c in axial.vector_part.items():
        for even, multiplicity in rho_power_terms(n, j):
            for i in range(n):
                exps = (a,) + even[:i] + (even[i] + 1,) + even[i + 1:]
                _accumulate(acc, exps, 1 << i, c * multiplicity)
    if acc:
        _check_degree(max(sum(e) for e in acc))
    return _from_accumulator(n, acc, True)


@lru_cache(maxsize=None)
def paravector_power(n: int, k: int) -> CliffordPolynomial:
    """(x0 + x1 e1 + ... + xn en)^k, x^0 = 1."""
    if k < 0:
        raise DomainError(f"Negative power {k}")
    _check_degree(k)
    return materialize_axial(n, AxialPolynomial.paravector(1).power(k))


@lru_cache(maxsize=None)
def conj_paravector_power(n: int, k: int) -> CliffordPolynomial:
    """(x0 - x1 e1 - ... - xn en)^k."""
    if k < 0:
        raise DomainError(f"Negative power {k}")
    _check_degree(k)
    return materialize_axial(n, AxialPolynomial.paravector(-1).power(k))


def evaluate(p: CliffordPolynomial, point: Sequence[Number]) -> Multivector:
    """
    Substitute (x0, ..., xn) = point.

    Exact when p is exact and every coordinate is rational; otherwise the
    blade coefficients are combined in double precision.
    """
    if len(point) != p.n + 1:
        raise DimensionMismatchError(f"Expected {p.n + 1} coordinates, got {len(point)}")
    exact = p.exact and not any(isinstance(c, float) for c in point)
    coords = [coerce_scalar(c, exact) for c in point]

    degree = max(p.degree, 0)
    powers = []
    for c in coords:
        row = [coerce_scalar(1, exact)]
        for _ in range(degree):
            row.append(row[-1] * c)
        powers.append(row)

    acc: Dict[int, Scalar] = {}
    for exps, coeff in p.terms.items():
        monomial = powers[0][exps[0]]
        for i in range(1, p.n + 1):
            if exps[i]:
                monomial = monomial * powers[i][exps[i]]
        for bits, value in coeff.components.items():
            contribution = (value if exact else float(value)) * monomial
            acc[bits] = acc.get(bits, 0) + contribution
    return Multivector(p.n, acc, exact)


def restrict_real(p: CliffordPolynomial) -> CliffordPolynomial:
    """Substitute x1 = ... = xn = 0."""
    terms = {exps: c for exps, c in p.terms.items() if not any(exps[1:])}
    return CliffordPolynomial._trusted(p.n, terms, p.exact)


def slice_cr_residual(
    p: CliffordPolynomial, unit: Sequence[float], grid: Iterable[Tuple[float, float]]
) -> float:
    """
    Largest blade-wise residual of (d/du + I d/dv) p(u + I v) over the grid.

    The derivatives are taken exactly and then evaluated in double precision.
    """
    if len(unit) != p.n:
        raise DimensionMismatchError(f"Imaginary unit needs {p.n} components, got {len(unit)}")
    unit_sq = sum(float(c) * float(c) for c in unit)
    if abs(unit_sq - 1.0) > 1e-12:
        raise DomainError(f"I must be a unit vector, |I|^2 = {unit_sq}")

    imaginary = Multivector.vector(p.n, [float(c) for c in unit], exact=False)
    d0 = partial_derivative(p, 0)
    partials = [partial_derivative(p, i) for i in range(1, p.n + 1)]

    worst = 0.0
    for u, v in grid:
        if v == 0:
            raise DomainError("Slice grid points must satisfy v != 0")
        point = [float(u)] + [float(v) * float(c) for c in unit]
        along_v = Multivector.zero(p.n, exact=False)
        for c, partial in zip(unit, partials):
            along_v = along_v + evaluate(partial, point).to_approx().scale(float(c))
        residual = evaluate(d0, point).to_approx() + geometric_product(imaginary, along_v)
        worst = max(worst, residual.max_abs())
    return worst


def polynomial_to_json(p: CliffordPolynomial) -> Dict[str, Any]:
    """Serialize to {"n", "terms": [{"exps", "coeff"}]}."""
    return {
        "n": p.n,
        "terms": [{"exps": list(exps), "coeff": multivector_to_json(c)} for exps, c in p.sorted_terms()],
    }


def polynomial_from_json(data: Mapping[str, Any]) -> CliffordPolynomial:
    try:
        n = int(data["n"])
        raw_terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"Malformed polynomial JSON: {exc}") from exc

    terms = {}
    exact = True
    for term in raw_terms:
        coeff = multivector_from_json(term["coeff"])
        exact = coeff.exact
        terms[tuple(int(e) for e in term["exps"])] = coeff
    return CliffordPolynomial(n, terms, exact)
