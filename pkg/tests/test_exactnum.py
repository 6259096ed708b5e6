"""Tests for exact rationals, polynomial arithmetic and the divisor sum."""

import math
import random
from fractions import Fraction

import pytest

from partition_polynomials.exactnum import (
    Poly,
    format_decimal,
    parse_rational,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_eval_float,
    poly_mul,
    poly_add,
    poly_sign_at,
    poly_to_string,
    round_half_away,
    sigma,
    sigma_table,
    taylor_shift,
    to_rational,
)

X = Poly.identity()


class TestParseRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-2", Fraction(-2)),
            ("0.1623", Fraction(1623, 10000)),
            ("1e-6", Fraction(1, 10**6)),
            (" 5/2 ", Fraction(5, 2)),
        ],
    )
    def test_valid_literals(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["abc", "1/0", "", "3/4/5"])
    def test_invalid_literals(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_to_rational_rejects_floats_and_bools(self):
        with pytest.raises(ValueError):
            to_rational(1.5)
        with pytest.raises(ValueError):
            to_rational(True)


class TestPoly:
    def test_trailing_zeros_are_stripped(self):
        p = Poly((1, 2, 0, 0))
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1

    def test_zero_polynomial(self):
        assert Poly().degree == -1
        assert Poly((0,)).is_zero
        assert Poly().leading_coefficient == 0

    def test_integer_form_is_sign_preserving(self):
        scale, ints = Poly((Fraction(1, 2), Fraction(-3, 4))).integer_form
        assert (scale, ints) == (Fraction(1, 4), (2, -3))
        scale, ints = Poly((-2, -4)).integer_form
        assert (scale, ints) == (Fraction(2), (-1, -2))

    def test_operators(self):
        p = Poly((1, 1))
        q = Poly((1, -1))
        assert p * q == Poly((1, 0, -1))
        assert p + q == Poly.constant(2)
        assert p - q == Poly((0, 2))
        assert -p == Poly((-1, -1))
        assert 2 * p == Poly((2, 2))
        assert p(Fraction(1, 2)) == Fraction(3, 2)

    def test_mul_with_zero(self):
        assert poly_mul(Poly(), X).is_zero

    def test_derivative(self):
        assert poly_derivative(Poly((5, 3, 1))) == Poly((3, 2))
        assert poly_derivative(Poly.constant(7)).is_zero

    def test_str(self):
        assert poly_to_string(Poly((0, Fraction(3, 2), Fraction(1, 2)))) == "1/2*x^2 + 3/2*x"
        assert str(Poly((-1, 0, 1))) == "x^2 - 1"
        assert str(Poly((0, -1))) == "-x"
        assert str(Poly()) == "0"


class TestDivmod:
    def test_exact_division(self):
        quotient, remainder = poly_divmod(Poly((-1, 0, 1)), Poly((-1, 1)))
        assert quotient == Poly((1, 1))
        assert remainder.is_zero

    def test_remainder(self):
        quotient, remainder = poly_divmod(Poly((1, 0, 1)), Poly((0, 2)))
        assert quotient == Poly((0, Fraction(1, 2)))
        assert remainder == Poly.constant(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(X, Poly())


class TestEvaluation:
    def test_exact_value(self):
        p = Poly((0, Fraction(3, 2), Fraction(1, 2)))
        assert poly_eval(p, 2) == 5
        assert poly_eval(p, "1/3") == Fraction(1, 18) + Fraction(1, 2)

    def test_sign(self):
        p = Poly((-2, 0, 1))
        assert poly_sign_at(p, 1) == -1
        assert poly_sign_at(p, Fraction(3, 2)) == 1
        assert poly_sign_at(Poly((-4, 0, 1)), 2) == 0

    def test_float_evaluation(self):
        assert poly_eval_float(Poly((1, 1)), 0.5) == 1.5

    def test_float_rejects_non_finite(self):
        with pytest.raises(ValueError):
            poly_eval_float(X, float("inf"))

    def test_float_overflow(self):
        p = Poly((0,) * 400 + (1,))
        with pytest.raises(OverflowError):
            poly_eval_float(p, 1e300)


class TestTaylorShift:
    def test_integer_shift(self):
        assert taylor_shift(Poly((0, 0, 1)), 1) == Poly((1, 2, 1))

    def test_rational_shift(self):
        assert taylor_shift(Poly((0, 0, 1)), Fraction(1, 2)) == Poly((Fraction(1, 4), 1, 1))

    def test_shift_matches_evaluation(self):
        p = Poly((3, -1, 0, 2))
        shifted = taylor_shift(p, -2)
        for x in range(-3, 4):
            assert shifted(x) == p(x - 2)


class TestRounding:
    @pytest.mark.parametrize(
        "value, places, expected",
        [
            (Fraction(1, 8), 2, "0.13"),
            (Fraction(-1, 8), 2, "-0.13"),
            (Fraction(3), 2, "3.00"),
            (Fraction(1, 3), 0, "0"),
            (Fraction(-1, 1000), 2, "0.00"),
            (Fraction(14049, 10000), 2, "1.40"),
            (Fraction(2), 12, "2.000000000000"),
        ],
    )
    def test_format_decimal(self, value, places, expected):
        assert format_decimal(value, places) == expected

    def test_round_half_away(self):
        assert round_half_away(Fraction(5, 1000), 2) == Fraction(1, 100)
        assert round_half_away(Fraction(-5, 1000), 2) == Fraction(-1, 100)
        assert round_half_away(Fraction(4999, 1000000), 2) == 0


class TestSigma:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (6, 12), (12, 28), (97, 98)])
    def test_small_values(self, n, expected):
        assert sigma(n) == expected

    def test_beyond_sieve(self):
        assert sigma(2**21) == 2**22 - 1

    def test_table(self):
        assert sigma_table(6) == (1, 3, 4, 7, 6, 12)
        assert sigma_table(0) == ()

    @pytest.mark.parametrize("n", [0, -3, 2.0, True])
    def test_invalid_arguments(self, n):
        with pytest.raises(ValueError):
            sigma(n)

    def test_negative_table_size(self):
        with pytest.raises(ValueError):
            sigma_table(-1)


def random_rational(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 20))


def random_poly(rng):
    return Poly(tuple(random_rational(rng) for _ in range(rng.randint(0, 9))))


class TestArithmeticProperties:
    def test_sum_and_product_evaluate_pointwise(self):
        rng = random.Random(20240611)
        for _ in range(200):
            p, q, x = random_poly(rng), random_poly(rng), random_rational(rng)
            assert poly_add(p, q)(x) == p(x) + q(x)
            assert (p - q)(x) == p(x) - q(x)
            assert poly_mul(p, q)(x) == p(x) * q(x)

    def test_product_rule(self):
        rng = random.Random(7)
        for _ in range(200):
            p, q = random_poly(rng), random_poly(rng)
            lhs = poly_derivative(poly_mul(p, q))
            rhs = poly_mul(poly_derivative(p), q) + poly_mul(p, poly_derivative(q))
            assert lhs == rhs

    def test_shift_then_evaluate(self):
        rng = random.Random(99)
        for _ in range(100):
            p, a, x = random_poly(rng), random_rational(rng), random_rational(rng)
            assert taylor_shift(p, a)(x) == p(x + a)

    def test_sigma_is_multiplicative(self):
        for m in range(1, 101):
            for n in range(1, 101):
                if math.gcd(m, n) == 1:
                    assert sigma(m * n) == sigma(m) * sigma(n)
