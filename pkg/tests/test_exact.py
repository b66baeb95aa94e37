"""Exact scalar and univariate polynomial/series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from luinv.exact import (
    NEG_INF,
    GaussianRational,
    UniPoly,
    UniSeries,
    palindrome_check,
    poly_from_factored,
    poly_mul,
    series_from_rational,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)
small_polys = st.builds(
    UniPoly, st.lists(st.integers(min_value=-9, max_value=9), max_size=8)
)


class TestGaussianRational:
    def test_construction_and_parts(self):
        v = GaussianRational(Fraction(1, 2), 3)
        assert v.re == Fraction(1, 2) and v.im == 3
        assert GaussianRational(2) == GaussianRational(Fraction(2), 0)

    def test_i_squares_to_minus_one(self):
        i = GaussianRational.i()
        assert i * i == GaussianRational(-1)

    def test_mixed_arithmetic_with_int_and_fraction(self):
        v = GaussianRational(1, 1)
        assert v + 1 == GaussianRational(2, 1)
        assert 1 + v == GaussianRational(2, 1)
        assert v * Fraction(1, 2) == GaussianRational(Fraction(1, 2), Fraction(1, 2))
        assert 2 - v == GaussianRational(1, -1)
        assert 2 / GaussianRational(1, 1) == GaussianRational(1, -1)

    @given(gaussians, gaussians)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(gaussians, gaussians, gaussians)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(gaussians, gaussians)
    def test_division_inverts_multiplication(self, a, b):
        if bool(b):
            assert (a / b) * b == a

    @given(gaussians, gaussians)
    def test_conjugation_is_multiplicative(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()

    @given(gaussians)
    def test_norm_is_real_nonnegative(self, a):
        n = a * a.conjugate()
        assert n.is_real and n.re >= 0

    def test_is_real_and_bool(self):
        assert GaussianRational(3).is_real
        assert not GaussianRational(0, 1).is_real
        assert not bool(GaussianRational(0))
        assert bool(GaussianRational(0, Fraction(1, 7)))

    def test_complex_conversion(self):
        assert complex(GaussianRational(Fraction(1, 2), -1)) == 0.5 - 1j

    def test_immutable_and_hashable(self):
        v = GaussianRational(1, 2)
        with pytest.raises(AttributeError):
            v.re = Fraction(9)
        assert hash(GaussianRational(1, 2)) == hash(v)

    def test_str_forms(self):
        assert str(GaussianRational(Fraction(1, 3))) == "1/3"
        assert str(GaussianRational(1, -2)) == "1-2i"


class TestUniPoly:
    def test_zero_conventions(self):
        z = UniPoly.zero()
        assert z.is_zero and z.degree == NEG_INF
        assert UniPoly([0, 0, 0]) == z
        assert UniPoly([1, 0, 0]).degree == 0

    def test_coefficient_out_of_range_is_zero(self):
        p = UniPoly([5, 7])
        assert p.coefficient(0) == 5 and p.coefficient(1) == 7
        assert p.coefficient(2) == 0 and p.coefficient(-1) == 0

    def test_known_product(self):
        # (1 + t)(1 - t + t^2) = 1 + t^3
        assert UniPoly([1, 1]) * UniPoly([1, -1, 1]) == UniPoly([1, 0, 0, 1])

    @given(small_polys, small_polys)
    def test_mul_commutes_and_degree_adds(self, a, b):
        assert a * b == b * a
        assert poly_mul(a, b) == a * b
        if not a.is_zero and not b.is_zero:
            assert (a * b).degree == a.degree + b.degree

    @given(small_polys, small_polys, small_polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(small_polys, st.integers(min_value=-5, max_value=5))
    def test_evaluation_is_ring_homomorphism(self, p, t):
        q = UniPoly([2, 0, -1])
        assert (p * q)(t) == p(t) * q(t)
        assert (p + q)(t) == p(t) + q(t)

    def test_subtraction_and_negation(self):
        p = UniPoly([1, 2, 3])
        assert p - p == UniPoly.zero()
        assert -p == UniPoly.zero() - p

    def test_immutable(self):
        p = UniPoly([1])
        with pytest.raises(AttributeError):
            p.coeffs = (2,)


class TestPolyFromFactored:
    def test_single_factor(self):
        assert poly_from_factored([(3, 1)]) == UniPoly([1, 0, 0, -1])

    def test_multiplicity_against_repeated_mul(self):
        base = UniPoly([1, 0, -1])
        assert poly_from_factored([(2, 3)]) == base * base * base

    def test_one_plus_t_flag(self):
        assert poly_from_factored([], times_one_plus_t=True) == UniPoly([1, 1])
        # (1 + t)(1 - t) = 1 - t^2
        assert poly_from_factored([(1, 1)], times_one_plus_t=True) == UniPoly([1, 0, -1])

    def test_degree_is_weighted_sum(self):
        factors = [(2, 3), (5, 2), (7, 1)]
        assert poly_from_factored(factors).degree == 2 * 3 + 5 * 2 + 7 * 1

    def test_rejects_bad_factors(self):
        with pytest.raises(ValueError):
            poly_from_factored([(0, 1)])
        with pytest.raises(ValueError):
            poly_from_factored([(2, 0)])


class TestUniSeries:
    def test_length_contract(self):
        s = UniSeries(2, [1, 2, 3])
        assert s.order == 2 and s.coefficient(2) == 3
        with pytest.raises(ValueError):
            UniSeries(2, [1, 2])

    def test_truncated_product(self):
        a = UniSeries(3, [1, 1, 1, 1])
        b = UniSeries(3, [1, -1, 0, 0])
        assert (a * b).coeffs == (1, 0, 0, 0)

    @given(
        st.lists(st.integers(-5, 5), min_size=4, max_size=4),
        st.lists(st.integers(-5, 5), min_size=4, max_size=4),
    )
    def test_product_matches_polynomial_truncation(self, xs, ys):
        sa, sb = UniSeries(3, xs), UniSeries(3, ys)
        full = UniPoly(xs) * UniPoly(ys)
        assert all((sa * sb).coefficient(k) == full.coefficient(k) for k in range(4))


class TestSeriesFromRational:
    def test_geometric(self):
        s = series_from_rational(UniPoly.one(), UniPoly([1, -1]), 6)
        assert s.coeffs == (1,) * 7

    def test_odd_numbers(self):
        # (1 + t)/(1 - t)^2 = sum (2k + 1) t^k
        den = UniPoly([1, -1]) * UniPoly([1, -1])
        s = series_from_rational(UniPoly([1, 1]), den, 5)
        assert s.coeffs == (1, 3, 5, 7, 9, 11)

    def test_integer_coefficients_stay_int(self):
        s = series_from_rational(UniPoly.one(), UniPoly([1, -2]), 4)
        assert s.coeffs == (1, 2, 4, 8, 16)
        assert all(isinstance(c, int) for c in s.coeffs)

    def test_fractional_when_not_integral(self):
        s = series_from_rational(UniPoly.one(), UniPoly([2, -1]), 2)
        assert s.coeffs == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            series_from_rational(UniPoly.one(), UniPoly([0, 1]), 3)

    @given(small_polys, st.integers(min_value=0, max_value=6))
    def test_series_times_denominator_recovers_numerator(self, num, order):
        den = UniPoly([1, -1, 0, 2])
        s = series_from_rational(num, den, order)
        # multiply back and compare through the truncation order
        back = [
            sum(s.coefficient(j) * den.coefficient(k - j) for j in range(k + 1))
            for k in range(order + 1)
        ]
        assert back == [num.coefficient(k) for k in range(order + 1)]


class TestPalindromeCheck:
    def test_positive(self):
        assert palindrome_check(UniPoly([1, 2, 1]), 2)
        assert palindrome_check(UniPoly([1, 0, 0, 1]), 3)
        # trailing zeros against a higher claimed degree
        assert palindrome_check(UniPoly([0, 1, 1]), 3)

    def test_negative(self):
        assert not palindrome_check(UniPoly([1, 2, 3]), 2)
        assert not palindrome_check(UniPoly([1, 1]), 2)

    def test_degree_overflow_rejected(self):
        with pytest.raises(ValueError):
            palindrome_check(UniPoly([1, 1, 1, 1]), 2)
