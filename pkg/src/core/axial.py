"""
Axial-form polynomials A(x0, rho) + x_vec B(x0, rho), rho = |x_vec|^2.

Paravector powers x^k, conjugate powers and the Clifford-Appell polynomials all
live in the commutative algebra generated by x0 and x_vec (x_vec^2 = -rho), so
they are built here cheaply and expanded into full Clifford polynomials once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Mapping, Sequence, Tuple

from src.core.exceptions import DimensionMismatchError, DomainError
from src.core.multivector import Multivector, Number, Scalar, coerce_scalar

# (power of x0, power of rho)
AxialExponent = Tuple[int, int]


def _clean(part: Mapping[AxialExponent, Fraction]) -> Dict[AxialExponent, Fraction]:
    return {key: value for key, value in part.items() if value != 0}


def _add_into(target: Dict[AxialExponent, Fraction], key: AxialExponent, value: Fraction) -> None:
    target[key] = target.get(key, Fraction(0)) + value


def _multiply_parts(
    left: Mapping[AxialExponent, Fraction], right: Mapping[AxialExponent, Fraction], shift_rho: int = 0
) -> Dict[AxialExponent, Fraction]:
    out: Dict[AxialExponent, Fraction] = {}
    for (a1, j1), c1 in left.items():
        for (a2, j2), c2 in right.items():
            _add_into(out, (a1 + a2, j1 + j2 + shift_rho), c1 * c2)
    return out


@dataclass(frozen=True, eq=False)
class AxialPolynomial:
    """Exact element A(x0, rho) + x_vec B(x0, rho) of the axial algebra."""

    scalar_part: Mapping[AxialExponent, Fraction] = field(default_factory=dict)
    vector_part: Mapping[AxialExponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "scalar_part", _clean({k: Fraction(v) for k, v in self.scalar_part.items()}))
        object.__setattr__(self, "vector_part", _clean({k: Fraction(v) for k, v in self.vector_part.items()}))

    @classmethod
    def one(cls) -> "AxialPolynomial":
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def paravector(cls, sign: int = 1) -> "AxialPolynomial":
        """x = x0 + x_vec (sign=1) or its conjugate x0 - x_vec (sign=-1)."""
        return cls({(1, 0): Fraction(1)}, {(0, 0): Fraction(sign)})

    @property
    def is_zero(self) -> bool:
        return not self.scalar_part and not self.vector_part

    def __add__(self, other: "AxialPolynomial") -> "AxialPolynomial":
        scalar = dict(self.scalar_part)
        vector = dict(self.vector_part)
        for key, value in other.scalar_part.items():
            _add_into(scalar, key, value)
        for key, value in other.vector_part.items():
            _add_into(vector, key, value)
        return AxialPolynomial(scalar, vector)

    def scale(self, factor: Number) -> "AxialPolynomial":
        f = Fraction(factor)
        return AxialPolynomial(
            {k: v * f for k, v in self.scalar_part.items()},
            {k: v * f for k, v in self.vector_part.items()},
        )

    def __mul__(self, other: "AxialPolynomial") -> "AxialPolynomial":
        # (A1 + x B1)(A2 + x B2) = A1 A2 - rho B1 B2 + x (A1 B2 + B1 A2)
        scalar = _multiply_parts(self.scalar_part, other.scalar_part)
        for key, value in _multiply_parts(self.vector_part, other.vector_part, shift_rho=1).items():
            _add_into(scalar, key, -value)
        vector = _multiply_parts(self.scalar_part, other.vector_part)
        for key, value in _multiply_parts(self.vector_part, other.scalar_part).items():
            _add_into(vector, key, value)
        return AxialPolynomial(scalar, vector)

    def power(self, k: int) -> "AxialPolynomial":
        if k < 0:
            raise DomainError(f"Negative power {k}")
        result = AxialPolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AxialPolynomial):
            return NotImplemented
        return self.scalar_part == other.scalar_part and self.vector_part == other.vector_part

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.scalar_part.items())), tuple(sorted(self.vector_part.items()))))

    def evaluate(self, point: Sequence[Number]) -> Multivector:
        """
        Evaluate at (x0, x1, ..., xn).

        Exact for rational coordinates, double precision once any coordinate is a float.
        """
        if len(point) < 2:
            raise DimensionMismatchError("A point needs x0 and at least one vector coordinate")
        n = len(point) - 1
        exact = not any(isinstance(c, float) for c in point)
        coords = [coerce_scalar(c, exact) for c in point]
        x0 = coords[0]
        rho: Scalar = sum((c * c for c in coords[1:]), Fraction(0) if exact else 0.0)

        def _value(part: Mapping[AxialExponent, Fraction]) -> Scalar:
            total: Scalar = Fraction(0) if exact else 0.0
            for (a, j), c in part.items():
                coefficient = c if exact else float(c)
                total += coefficient * x0 ** a * rho ** j
            return total

        a_value = _value(self.scalar_part)
        b_value = _value(self.vector_part)
        components: Dict[int, Scalar] = {0: a_value}
        for i, c in enumerate(coords[1:]):
            components[1 << i] = b_value * c
        return Multivector(n, components, exact)


@lru_cache(maxsize=None)
def rho_power_terms(n: int, j: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """
    Multinomial expansion of (x1^2 + ... + xn^2)^j.

    Returns (exponents of x1..xn, integer coefficient) pairs.
    """
    terms: List[Tuple[Tuple[int, ...], int]] = []

    def _compositions(total: int, slots: int) -> List[Tuple[int, ...]]:
        if slots == 1:
            return [(total,)]
        out = []
        for first in range(total, -1, -1):
            for rest in _compositions(total - first, slots - 1):
                out.append((first,) + rest)
        return out

    for parts in _compositions(j, n):
        coefficient = factorial(j)
        for p in parts:
            coefficient //= factorial(p)
        terms.append((tuple(2 * p for p in parts), coefficient))
    return tuple(terms)
