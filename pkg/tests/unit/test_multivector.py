"""Unit tests for Clifford algebra multivectors."""
from fractions import Fraction

import pytest

from src.core.exceptions import DimensionMismatchError, DomainError, ScalarKindMismatchError
from src.core.multivector import (
    Multivector,
    Paravector,
    blade_from_indices,
    blade_indices,
    clifford_conjugate,
    geometric_product,
    grade_projection,
    multivector_from_json,
    multivector_inverse,
    multivector_to_json,
    norm,
    norm_sq,
    real_part,
)


@pytest.mark.unit
class TestBlades:
    """Test blade encoding."""

    def test_blade_bits_round_trip(self):
        """Test indices -> mask -> indices."""
        assert blade_from_indices([1, 3]) == 0b101
        assert blade_indices(0b101) == (1, 3)

    def test_generator_squares_to_minus_one(self):
        """Test e_i^2 = -1 for every generator."""
        for i in range(1, 4):
            e = Multivector.blade(3, [i])
            assert geometric_product(e, e) == -1

    def test_generators_anticommute(self):
        """Test e1 e2 = -e2 e1 = e12."""
        e1, e2 = Multivector.blade(3, [1]), Multivector.blade(3, [2])
        assert geometric_product(e1, e2) == Multivector.blade(3, [1, 2])
        assert geometric_product(e2, e1) == -Multivector.blade(3, [1, 2])

    def test_unsorted_blade_picks_up_sign(self):
        """Test e2 e1 written as a blade."""
        assert Multivector.blade(3, [2, 1]) == -Multivector.blade(3, [1, 2])

    def test_bivector_squares_to_minus_one(self):
        """Test e12 e12 = -1."""
        e12 = Multivector.blade(2, [1, 2])
        assert geometric_product(e12, e12) == -1

    def test_blade_out_of_range(self):
        """Test generator index above n is rejected."""
        with pytest.raises(DomainError):
            Multivector.blade(2, [3])

    def test_repeated_generator_rejected(self):
        """Test e1 e1 cannot be a blade."""
        with pytest.raises(DomainError):
            Multivector.blade(2, [1, 1])


@pytest.mark.unit
class TestMultivector:
    """Test multivector arithmetic."""

    def test_zero_components_dropped(self):
        """Test zero entries are normalized away."""
        value = Multivector(3, {0: 0, 1: Fraction(1, 2)})
        assert value.components == {1: Fraction(1, 2)}

    def test_addition_and_subtraction(self):
        """Test (1 + e1) - e1 = 1."""
        e1 = Multivector.blade(2, [1])
        assert (Multivector.scalar(2, 1) + e1) - e1 == 1

    def test_scale(self):
        """Test scaling by a rational."""
        e1 = Multivector.blade(2, [1])
        assert e1.scale(Fraction(3, 2)) == Multivector.blade(2, [1], Fraction(3, 2))

    def test_mixing_dimensions_rejected(self):
        """Test R_2 + R_3 raises."""
        with pytest.raises(DimensionMismatchError):
            Multivector.scalar(2, 1) + Multivector.scalar(3, 1)

    def test_mixing_scalar_kinds_rejected(self):
        """Test exact + approximate raises."""
        with pytest.raises(ScalarKindMismatchError):
            Multivector.scalar(2, 1) + Multivector.scalar(2, 1.0, exact=False)

    def test_float_in_exact_multivector_rejected(self):
        """Test floats are refused in exact mode."""
        with pytest.raises(ScalarKindMismatchError):
            Multivector.scalar(2, 0.5)

    def test_quaternion_table(self, quaternion_units):
        """Test ij = k, jk = i, ki = j with i=e1, j=e2, k=e12."""
        _, i, j, k = quaternion_units
        assert geometric_product(i, j) == k
        assert geometric_product(j, k) == i
        assert geometric_product(k, i) == j

    def test_associativity(self, sampler):
        """Test (ab)c = a(bc) on random exact elements."""
        for _ in range(10):
            a, b, c = (sampler.multivector(3) for _ in range(3))
            assert geometric_product(geometric_product(a, b), c) == geometric_product(a, geometric_product(b, c))

    def test_to_approx(self):
        """Test exact -> float conversion."""
        value = Multivector(2, {0: Fraction(1, 4), 3: 2}).to_approx()
        assert not value.exact
        assert value.coefficient(0) == 0.25
        assert value.coefficient(3) == 2.0

    def test_str(self):
        """Test text rendering."""
        value = Multivector(3, {0: 1, 1: Fraction(-1, 3)})
        assert str(value) == "1 - 1/3*e1"
        assert str(Multivector.zero(3)) == "0"


@pytest.mark.unit
class TestConjugationAndNorms:
    """Test conjugation, norms and inverses."""

    def test_conjugation_signs_by_grade(self):
        """Test grades 0..3 map to signs +, -, -, +."""
        value = Multivector(3, {0: 1, 0b1: 1, 0b11: 1, 0b111: 1})
        conj = clifford_conjugate(value)
        assert conj.coefficient(0) == 1
        assert conj.coefficient(0b1) == -1
        assert conj.coefficient(0b11) == -1
        assert conj.coefficient(0b111) == 1

    def test_conjugation_reverses_products(self, sampler):
        """Test conj(ab) = conj(b) conj(a)."""
        for _ in range(10):
            a, b = sampler.multivector(3), sampler.multivector(3)
            assert clifford_conjugate(geometric_product(a, b)) == geometric_product(
                clifford_conjugate(b), clifford_conjugate(a)
            )

    def test_norm_matches_conjugate_product(self, sampler):
        """Test [conj(a) a]_0 = |a|^2."""
        a = sampler.nonzero_multivector(3, max_terms=5)
        assert real_part(geometric_product(clifford_conjugate(a), a)) == norm_sq(a)

    def test_norm_value(self):
        """Test |3 + 4 e1| = 5."""
        assert norm(Multivector(2, {0: 3, 1: 4})) == pytest.approx(5.0)

    def test_grade_projection(self):
        """Test picking out the bivector part."""
        value = Multivector(3, {0: 1, 0b11: 2, 0b1: 5})
        assert grade_projection(value, 2) == Multivector.blade(3, [1, 2], 2)

    def test_paravector_inverse(self, sampler):
        """Test x x^{-1} = 1 for paravectors."""
        for _ in range(5):
            x = sampler.paravector(3)
            assert geometric_product(x, multivector_inverse(x)) == 1

    def test_non_invertible_rejected(self):
        """Test 1 + e123 has no conjugation inverse in R_3."""
        with pytest.raises(DomainError):
            multivector_inverse(Multivector(3, {0: 1, 0b111: 1}))


@pytest.mark.unit
class TestParavector:
    """Test the paravector point type."""

    def test_from_point_exact(self):
        """Test rational coordinates stay exact."""
        x = Paravector.from_point([1, Fraction(1, 2), 0, 2])
        assert x.exact
        assert x.n == 3
        assert x.modulus_sq() == Fraction(21, 4)

    def test_from_point_float(self):
        """Test one float coordinate makes the point approximate."""
        assert not Paravector.from_point([1, 0.5, 0, 0]).exact

    def test_conjugate(self):
        """Test x0 + x_vec -> x0 - x_vec agrees with Clifford conjugation."""
        x = Paravector.from_point([1, 2, 3, 4])
        assert x.conjugate().to_multivector() == clifford_conjugate(x.to_multivector())


@pytest.mark.unit
class TestMultivectorJson:
    """Test the JSON codec."""

    def test_exact_round_trip(self, sampler):
        """Test exact values survive serialization."""
        value = sampler.multivector(3, max_terms=5)
        assert multivector_from_json(multivector_to_json(value)) == value

    def test_exact_format(self):
        """Test rationals are written as numerator/denominator strings."""
        data = multivector_to_json(Multivector.blade(2, [1], Fraction(-2, 3)))
        assert data == {"n": 2, "kind": "exact", "terms": [{"blade": [1], "num": "-2", "den": "3"}]}

    @pytest.mark.parametrize(
        "data",
        [
            {"terms": []},
            {"n": 3, "kind": "exact", "terms": [{"blade": [1, 1], "num": "1", "den": "1"}]},
            {"n": 3, "kind": "exact", "terms": [{"blade": [2, 1], "num": "1", "den": "1"}]},
            {"n": 2, "kind": "exact", "terms": [{"blade": [3], "num": "1", "den": "1"}]},
            {
                "n": 3,
                "kind": "exact",
                "terms": [{"blade": [1], "num": "1", "den": "2"}, {"blade": [1], "num": "3", "den": "1"}],
            },
            {"n": 3, "kind": "exact", "terms": [{"blade": [], "num": "1", "den": "0"}]},
            {"n": 3, "kind": "exact", "terms": [{"blade": [], "num": "x", "den": "1"}]},
            {"n": 3, "kind": "approx", "terms": [{"blade": [1]}]},
        ],
    )
    def test_malformed_rejected(self, data):
        """Test missing fields, repeated generators, duplicate blades and zero denominators raise DomainError."""
        with pytest.raises(DomainError):
            multivector_from_json(data)
