from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lahbell import (
    EvaluationError,
    LengthError,
    RationalPolynomial,
    bell_from_lahbell_degenerate,
    bell_number,
    bell_polynomial,
    degenerate_bell_polynomial,
    degenerate_lah_bell_polynomial,
    degenerate_lah_bell_polynomial_via_bell,
    evaluate_degenerate,
    lah_bell_number,
    lah_bell_polynomial,
    lah_bell_series_coefficients,
    lahbell_from_bell,
    monomial,
    stirling1_signed,
    y_substitution,
)
from oracles import count_list_partitions, count_set_partitions

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=10)


class TestRationalPolynomial:
    def test_trailing_zeros_trimmed(self):
        poly = RationalPolynomial((Fraction(1), Fraction(0), Fraction(0)))
        assert poly.coefficients == (Fraction(1),)
        assert poly.degree == 0

    def test_zero_polynomial(self):
        poly = RationalPolynomial((Fraction(0), Fraction(0)))
        assert poly.coefficients == (Fraction(0),)

    def test_leading_zero_kept(self):
        poly = lah_bell_polynomial(3)
        assert poly.coefficients == (Fraction(0), Fraction(6), Fraction(6), Fraction(1))

    @given(st.lists(rationals, min_size=1, max_size=6), rationals)
    def test_evaluate_matches_power_sum(self, coeffs, x):
        poly = RationalPolynomial(tuple(coeffs))
        direct = sum(c * x**i for i, c in enumerate(coeffs))
        assert poly.evaluate(x) == direct

    def test_add_requires_same_variable(self):
        with pytest.raises(ValueError):
            monomial(1, "x") + monomial(1, "y")


class TestBellFamilies:
    def test_bell_polynomial_cubic(self):
        assert bell_polynomial(3).coefficients == (Fraction(0), Fraction(1), Fraction(3), Fraction(1))
        assert bell_polynomial(0).coefficients == (Fraction(1),)

    def test_bell_value_counts_set_partitions(self):
        for n in range(7):
            assert bell_polynomial(n).evaluate(1) == count_set_partitions(n)
            assert bell_number(n) == count_set_partitions(n)

    def test_lah_bell_polynomial_cubic(self):
        assert lah_bell_polynomial(3).coefficients == (Fraction(0), Fraction(6), Fraction(6), Fraction(1))
        assert lah_bell_polynomial(3).evaluate(2) == 44
        assert lah_bell_polynomial(0).coefficients == (Fraction(1),)

    def test_lah_bell_numbers(self):
        assert [lah_bell_number(n) for n in range(5)] == [1, 1, 3, 13, 73]

    def test_lah_bell_number_counts_list_partitions(self):
        for n in range(8):
            assert lah_bell_number(n) == count_list_partitions(n)

    def test_monomial_identity(self):
        # the signed-falling-factorial coefficients recombine Bell polynomials
        # back into plain powers
        for n in range(13):
            combo = RationalPolynomial((Fraction(0),))
            for k in range(n + 1):
                combo = combo + bell_polynomial(k).scaled(stirling1_signed(n, k))
            assert combo == monomial(n)


class TestDegenerateFamilies:
    def test_degenerate_bell_coefficients(self):
        lam = Fraction(1, 2)
        poly = degenerate_bell_polynomial(2, lam)
        assert poly.variable == "y"
        assert poly.coefficients == (Fraction(0), Fraction(1), Fraction(1, 2))
        assert degenerate_bell_polynomial(0, lam).coefficients == (Fraction(1),)

    def test_degenerate_bell_evaluation(self):
        value = evaluate_degenerate(degenerate_bell_polynomial(2, Fraction(1, 2)), 1, Fraction(1, 2))
        assert value == Fraction(8, 9)

    def test_substitution_pole(self):
        with pytest.raises(EvaluationError):
            y_substitution(-2, Fraction(1, 2))

    def test_degenerate_lah_bell_coefficients(self):
        lam = Fraction(1, 2)
        poly = degenerate_lah_bell_polynomial(2, lam)
        assert poly.variable == "y"
        assert poly.coefficients == (Fraction(0), Fraction(2), Fraction(1, 2))
        assert degenerate_lah_bell_polynomial(0, lam).coefficients == (Fraction(1),)

    def test_degenerate_lah_bell_evaluation(self):
        value = evaluate_degenerate(degenerate_lah_bell_polynomial(2, Fraction(1, 2)), 1, Fraction(1, 2))
        assert value == Fraction(14, 9)

    def test_two_constructions_agree(self):
        lams = [Fraction(1, 2), Fraction(2, 7), Fraction(3, 5), Fraction(1, 9), Fraction(5, 8)]
        for lam in lams:
            for n in range(13):
                assert degenerate_lah_bell_polynomial(n, lam) == degenerate_lah_bell_polynomial_via_bell(n, lam)

    def test_classical_limit(self):
        # errors must shrink monotonically as lam -> 0 and end below 1e-4
        n, x = 3, Fraction(1)
        target = float(lah_bell_polynomial(n).evaluate(x))
        errors = []
        for exponent in (2, 4, 6):
            lam = Fraction(1, 10**exponent)
            value = float(evaluate_degenerate(degenerate_lah_bell_polynomial(n, lam), x, lam))
            errors.append(abs(value - target))
        assert errors[0] >= errors[1] >= errors[2]
        assert errors[2] < 1e-4


class TestTransforms:
    def test_lahbell_from_bell_examples(self):
        assert lahbell_from_bell(0, [Fraction(1)]) == 1
        assert lahbell_from_bell(3, [Fraction(1), Fraction(1), Fraction(2), Fraction(5)]) == 13
        assert lahbell_from_bell(3, [Fraction(1), Fraction(2), Fraction(6), Fraction(22)]) == 44

    def test_length_error(self):
        with pytest.raises(LengthError):
            lahbell_from_bell(3, [Fraction(1), Fraction(1)])
        with pytest.raises(LengthError):
            bell_from_lahbell_degenerate(2, [Fraction(1)])

    def test_bell_from_lahbell_example(self):
        assert bell_from_lahbell_degenerate(0, [Fraction(1)]) == 1
        values = [Fraction(1), Fraction(2, 3), Fraction(14, 9)]
        assert bell_from_lahbell_degenerate(2, values) == Fraction(8, 9)

    def test_degenerate_transform_consistency(self):
        lam, x = Fraction(2, 7), Fraction(3, 2)
        bell_values = [
            evaluate_degenerate(degenerate_bell_polynomial(k, lam), x, lam) for k in range(4)
        ]
        lahbell_values = [lahbell_from_bell(n, bell_values[: n + 1]) for n in range(4)]
        recovered = bell_from_lahbell_degenerate(3, lahbell_values)
        assert recovered == bell_values[3]

    @given(st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=20),
           rationals, st.integers(0, 8))
    def test_round_trip_is_identity(self, lam, x, n):
        if 1 + lam * x == 0:
            return
        bell_values = [
            evaluate_degenerate(degenerate_bell_polynomial(k, lam), x, lam) for k in range(n + 1)
        ]
        forward = [lahbell_from_bell(m, bell_values[: m + 1]) for m in range(n + 1)]
        assert bell_from_lahbell_degenerate(n, forward) == bell_values[n]


class TestSeriesOracle:
    def test_zero_argument(self):
        assert lah_bell_series_coefficients(0, 5) == [Fraction(1)] + [Fraction(0)] * 5

    def test_unit_argument(self):
        assert lah_bell_series_coefficients(1, 4) == [1, 1, 3, 13, 73]

    def test_argument_two(self):
        assert lah_bell_series_coefficients(2, 3) == [1, 2, 8, 44]

    def test_matches_triangle_path(self):
        for x in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1, 3)):
            series = lah_bell_series_coefficients(x, 20)
            for n in range(21):
                assert series[n] == lah_bell_polynomial(n).evaluate(x)
