"""
Multivectors of the real Clifford algebra R_n.

Generators e_1..e_n satisfy e_i^2 = -1 and anticommute pairwise. A basis blade
e_A = e_{l1}...e_{lr} (l1 < ... < lr) is encoded as the bit mask with bit (l - 1)
set for every l in A; the empty mask is the scalar blade.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from src.core.exceptions import DimensionMismatchError, DomainError, ScalarKindMismatchError

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, float]
Number = Union[int, Fraction, float]


def blade_from_indices(indices: Iterable[int]) -> int:
    """Return the bit mask of the blade e_{l1}...e_{lr} (indices are 1-based)."""
    bits = 0
    for index in indices:
        if index < 1:
            raise DomainError(f"Generator indices start at 1, got {index}")
        bits |= 1 << (index - 1)
    return bits


def blade_indices(bits: int) -> Tuple[int, ...]:
    """Return the ascending generator indices of a blade mask."""
    indices = []
    position = 1
    while bits:
        if bits & 1:
            indices.append(position)
        bits >>= 1
        position += 1
    return tuple(indices)


def blade_grade(bits: int) -> int:
    """Number of generators in a blade."""
    return bin(bits).count("1")


@lru_cache(maxsize=None)
def blade_product_sign(a: int, b: int) -> int:
    """
    Sign of e_A e_B relative to the canonical blade e_{A xor B}.

    Counts the transpositions needed to sort the concatenated generator list,
    plus one sign flip for every generator shared by A and B (e_i^2 = -1).
    """
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += blade_grade(shifted & b)
        shifted >>= 1
    swaps += blade_grade(a & b)
    return -1 if swaps & 1 else 1


def blade_name(bits: int, n: int) -> str:
    """Human readable blade name, e.g. ``e12`` (``e1_10`` once n >= 10)."""
    if bits == 0:
        return "1"
    separator = "_" if n >= 10 else ""
    return "e" + separator.join(str(i) for i in blade_indices(bits))


def coerce_scalar(value: Any, exact: bool) -> Scalar:
    """Convert a number to the requested scalar kind."""
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, float):
            raise ScalarKindMismatchError("Approximate value given where an exact rational is required")
        if isinstance(value, Rational):
            return Fraction(value.numerator, value.denominator)
        raise TypeError(f"Unsupported scalar type: {type(value).__name__}")
    if isinstance(value, (int, float, Fraction, Rational)):
        return float(value)
    raise TypeError(f"Unsupported scalar type: {type(value).__name__}")


def format_scalar(value: Scalar) -> str:
    """Format a scalar for text output."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


@dataclass(frozen=True, eq=False)
class Multivector:
    """An element of R_n stored as a sparse blade -> scalar map."""

    n: int
    components: Mapping[int, Scalar] = field(default_factory=dict)
    exact: bool = True

    def __post_init__(self) -> None:
        """Validates dimension and blades, normalizes scalars, drops zeros."""
        if self.n < 1:
            raise DomainError(f"Algebra dimension must be positive, got {self.n}")

        size = 1 << self.n
        clean: Dict[int, Scalar] = {}
        for bits, value in self.components.items():
            if not 0 <= bits < size:
                raise DomainError(f"Blade mask {bits} does not belong to R_{self.n}")
            scalar = coerce_scalar(value, self.exact)
            if scalar != 0:
                clean[bits] = scalar
        object.__setattr__(self, "components", clean)

    @classmethod
    def _trusted(cls, n: int, components: Dict[int, Scalar], exact: bool) -> "Multivector":
        """Build from already-normalized components (nonzero, correct kind)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "components", components)
        object.__setattr__(obj, "exact", exact)
        return obj

    # Constructors

    @classmethod
    def zero(cls, n: int, exact: bool = True) -> "Multivector":
        return cls(n, {}, exact)

    @classmethod
    def scalar(cls, n: int, value: Number, exact: bool = True) -> "Multivector":
        return cls(n, {0: value}, exact)

    @classmethod
    def blade(cls, n: int, indices: Sequence[int], coefficient: Number = 1, exact: bool = True) -> "Multivector":
        """Return coefficient * e_A for the generator indices A (sorted, 1-based)."""
        if any(i > n for i in indices):
            raise DomainError(f"Generator index out of range for R_{n}: {tuple(indices)}")
        if len(set(indices)) != len(indices):
            raise DomainError(f"Repeated generator in blade {tuple(indices)}")
        ordered = sorted(indices)
        sign = 1
        # bubble count for unsorted input
        for i in range(len(indices)):
            for j in range(i + 1, len(indices)):
                if indices[i] > indices[j]:
                    sign = -sign
        value = coerce_scalar(coefficient, exact)
        return cls(n, {blade_from_indices(ordered): sign * value}, exact)

    @classmethod
    def vector(cls, n: int, values: Sequence[Number], exact: bool = True) -> "Multivector":
        """Return sum_i values[i-1] e_i."""
        if len(values) != n:
            raise DimensionMismatchError(f"Expected {n} vector components, got {len(values)}")
        return cls(n, {1 << i: v for i, v in enumerate(values)}, exact)

    # Queries

    @property
    def is_zero(self) -> bool:
        return not self.components

    @property
    def grades(self) -> Tuple[int, ...]:
        return tuple(sorted({blade_grade(bits) for bits in self.components}))

    @property
    def is_scalar(self) -> bool:
        return all(bits == 0 for bits in self.components)

    def coefficient(self, bits: int) -> Scalar:
        return self.components.get(bits, Fraction(0) if self.exact else 0.0)

    def to_approx(self) -> "Multivector":
        """Return the same element with double-precision components."""
        if not self.exact:
            return self
        return Multivector(self.n, {b: float(v) for b, v in self.components.items()}, exact=False)

    def max_abs(self) -> float:
        """Largest absolute component, 0 for the zero element."""
        return max((abs(float(v)) for v in self.components.values()), default=0.0)

    # Arithmetic

    def _check_compatible(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"R_{self.n} and R_{other.n} operands")
        if self.exact != other.exact:
            raise ScalarKindMismatchError("Cannot mix exact and approximate multivectors")

    def __add__(self, other: Any) -> "Multivector":
        if not isinstance(other, Multivector):
            if isinstance(other, (int, float, Fraction)):
                other = Multivector.scalar(self.n, other, self.exact)
            else:
                return NotImplemented
        self._check_compatible(other)
        out = dict(self.components)
        for bits, value in other.components.items():
            total = out.get(bits, 0) + value
            if total == 0:
                out.pop(bits, None)
            else:
                out[bits] = total
        return Multivector._trusted(self.n, out, self.exact)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._trusted(self.n, {b: -v for b, v in self.components.items()}, self.exact)

    def __sub__(self, other: Any) -> "Multivector":
        if isinstance(other, (Multivector, int, float, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> "Multivector":
        return (-self) + other

    def scale(self, factor: Number) -> "Multivector":
        """Multiply by a real scalar."""
        value = coerce_scalar(factor, self.exact)
        if value == 0:
            return Multivector.zero(self.n, self.exact)
        return Multivector._trusted(self.n, {b: v * value for b, v in self.components.items()}, self.exact)

    def __mul__(self, other: Any) -> "Multivector":
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "Multivector":
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Any) -> "Multivector":
        if isinstance(other, (int, Fraction)) and self.exact:
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, (int, float, Fraction)):
            return self.scale(1.0 / float(other))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_scalar and self.coefficient(0) == other
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.n == other.n and self.exact == other.exact and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.n, self.exact, tuple(sorted(self.components.items()))))

    def sorted_items(self) -> List[Tuple[int, Scalar]]:
        """Components ordered by grade, then by generator indices."""
        return sorted(self.components.items(), key=lambda item: (blade_grade(item[0]), blade_indices(item[0])))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for bits, value in self.sorted_items():
            name = blade_name(bits, self.n)
            text = format_scalar(value)
            parts.append(text if bits == 0 else f"{text}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Multivector(n={self.n}, {self})"


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear Clifford product ab with e_i^2 = -1."""
    a._check_compatible(b)
    out: Dict[int, Scalar] = {}
    for bits_a, value_a in a.components.items():
        for bits_b, value_b in b.components.items():
            bits = bits_a ^ bits_b
            term = value_a * value_b
            if blade_product_sign(bits_a, bits_b) < 0:
                term = -term
            out[bits] = out.get(bits, 0) + term
    return Multivector._trusted(a.n, {k: v for k, v in out.items() if v != 0}, a.exact)


def clifford_conjugate(a: Multivector) -> Multivector:
    """
    Clifford conjugation: e_A -> (-1)^{|A|(|A|+1)/2} e_A.

    On paravectors this is x0 + x_vec -> x0 - x_vec.
    """
    out = {}
    for bits, value in a.components.items():
        grade = blade_grade(bits)
        out[bits] = -value if (grade * (grade + 1) // 2) % 2 else value
    return Multivector._trusted(a.n, out, a.exact)


def norm_sq(a: Multivector) -> Scalar:
    """Sum of squared components, exact for exact multivectors."""
    total: Scalar = Fraction(0) if a.exact else 0.0
    for value in a.components.values():
        total += value * value
    return total


def norm(a: Multivector) -> float:
    """Euclidean norm |a| = sqrt(sum_A a_A^2)."""
    return math.sqrt(float(norm_sq(a)))


def grade_projection(a: Multivector, k: int) -> Multivector:
    """Keep the components of grade k."""
    if not 0 <= k <= a.n:
        raise DomainError(f"Grade {k} out of range for R_{a.n}")
    return Multivector._trusted(
        a.n, {bits: v for bits, v in a.components.items() if blade_grade(bits) == k}, a.exact
    )


def real_part(a: Multivector) -> Scalar:
    """Scalar component [a]_0."""
    return a.coefficient(0)


def multivector_inverse(a: Multivector) -> Multivector:
    """
    Two-sided inverse when a * conj(a) is a nonzero real scalar.

    Covers nonzero scalars and paravectors, which is all the series code needs.
    """
    modulus = geometric_product(a, clifford_conjugate(a))
    if not modulus.is_scalar or modulus.is_zero:
        raise DomainError(f"Multivector {a} is not invertible by conjugation")
    s = modulus.coefficient(0)
    return clifford_conjugate(a) / s if a.exact else clifford_conjugate(a).scale(1.0 / s)


@dataclass(frozen=True)
class Paravector:
    """A point x0 + x1 e1 + ... + xn en of R^{n+1}."""

    x0: Scalar
    vec: Tuple[Scalar, ...]
    exact: bool = True

    def __post_init__(self) -> None:
        """Validates coordinates."""
        if not self.vec:
            raise DomainError("A paravector needs at least one vector coordinate")
        object.__setattr__(self, "x0", coerce_scalar(self.x0, self.exact))
        object.__setattr__(self, "vec", tuple(coerce_scalar(v, self.exact) for v in self.vec))

    @classmethod
    def from_point(cls, point: Sequence[Number]) -> "Paravector":
        """Build from (x0, x1, ..., xn); any float coordinate makes it approximate."""
        exact = not any(isinstance(c, float) for c in point)
        return cls(point[0], tuple(point[1:]), exact)

    @property
    def n(self) -> int:
        return len(self.vec)

    @property
    def coordinates(self) -> Tuple[Scalar, ...]:
        return (self.x0,) + self.vec

    def to_multivector(self) -> Multivector:
        components: Dict[int, Scalar] = {0: self.x0}
        for i, value in enumerate(self.vec):
            components[1 << i] = value
        return Multivector(self.n, components, self.exact)

    def conjugate(self) -> "Paravector":
        return Paravector(self.x0, tuple(-v for v in self.vec), self.exact)

    def vector_norm_sq(self) -> Scalar:
        total: Scalar = Fraction(0) if self.exact else 0.0
        for v in self.vec:
            total += v * v
        return total

    def modulus_sq(self) -> Scalar:
        return self.x0 * self.x0 + self.vector_norm_sq()


def multivector_to_json(a: Multivector) -> Dict[str, Any]:
    """Serialize to {"n", "kind", "terms": [{"blade", "num", "den"} | {"blade", "value"}]}."""
    terms = []
    for bits, value in a.sorted_items():
        entry: Dict[str, Any] = {"blade": list(blade_indices(bits))}
        if a.exact:
            entry["num"] = str(value.numerator)
            entry["den"] = str(value.denominator)
        else:
            entry["value"] = float(value)
        terms.append(entry)
    return {"n": a.n, "kind": "exact" if a.exact else "approx", "terms": terms}


def multivector_from_json(data: Mapping[str, Any]) -> Multivector:
    """Parse the JSON form produced by :func:`multivector_to_json`."""
    try:
        n = int(data["n"])
        terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"Malformed multivector JSON: {exc}") from exc

    kind = data.get("kind")
    if kind is None:
        kind = "approx" if any("value" in t for t in terms) else "exact"
    exact = kind == "exact"

    components: Dict[int, Scalar] = {}
    for term in terms:
        try:
            indices = [int(i) for i in term["blade"]]
            value = _parse_scalar(term, exact)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"Malformed multivector term {term!r}: {exc}") from exc
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise DomainError(f"Blade indices must be strictly ascending, got {indices}")
        if indices and indices[-1] > n:
            raise DomainError(f"Generator e_{indices[-1]} does not exist in R_{n}")
        bits = blade_from_indices(indices)
        if bits in components:
            raise DomainError(f"Blade {indices} appears twice")
        components[bits] = value
    return Multivector(n, components, exact)


def _parse_scalar(term: Mapping[str, Any], exact: bool) -> Scalar:
    if not exact:
        return float(term["value"])
    denominator = int(term["den"])
    if denominator == 0:
        raise DomainError("Zero denominator")
    return Fraction(int(term["num"]), denominator)
