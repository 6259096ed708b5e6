"""Tests for real-root isolation, positivity certificates and the float root sweep."""

import math
import time
from fractions import Fraction

import pytest

from partition_polynomials.exactnum import Poly, poly_derivative, poly_mul
from partition_polynomials.partpoly import bo_poly, delta, prop7_poly
from partition_polynomials.roots import (
    RootInterval,
    all_roots_float,
    isolate_real_roots,
    largest_positive_real_root,
    positive_beyond,
    refine,
    root_census,
    squarefree_part,
    sturm_chain,
    sturm_count,
)

X = Poly.identity()

# Largest positive root of P_{a,b}, rows a = 1..10, columns b = 1..10, two decimals.
TABLE1 = [
    [3.00, 2.00, 2.00, 1.69, 1.74, 1.57, 1.59, 1.50, 1.51, 1.45],
    [2.00, 1.40, 1.25, 1.13, 1.09, 1.00, 1.00, 0.95, 0.92, 0.91],
    [2.00, 1.25, 1.24, 1.00, 1.05, 0.90, 0.94, 0.85, 0.87, 0.81],
    [1.69, 1.13, 1.00, 0.87, 0.86, 0.76, 0.76, 0.72, 0.69, 0.67],
    [1.74, 1.09, 1.05, 0.86, 0.88, 0.75, 0.79, 0.70, 0.71, 0.67],
    [1.57, 1.00, 0.90, 0.76, 0.75, 0.66, 0.66, 0.60, 0.60, 0.57],
    [1.59, 1.00, 0.94, 0.76, 0.79, 0.66, 0.69, 0.62, 0.63, 0.58],
    [1.50, 0.95, 0.85, 0.72, 0.70, 0.60, 0.62, 0.56, 0.55, 0.53],
    [1.51, 0.92, 0.87, 0.69, 0.71, 0.60, 0.63, 0.55, 0.56, 0.52],
    [1.45, 0.91, 0.81, 0.67, 0.67, 0.57, 0.58, 0.53, 0.52, 0.49],
]


def linear_factors(*roots):
    p = Poly.constant(1)
    for r in roots:
        p = poly_mul(p, Poly((-Fraction(r), 1)))
    return p


class TestSquarefree:
    def test_repeated_factor_removed(self):
        p = poly_mul(linear_factors(1, 1, 1), linear_factors(-2))
        assert squarefree_part(p) == linear_factors(1, -2)

    def test_constant(self):
        assert squarefree_part(Poly.constant(7)) == Poly.constant(1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(Poly())


class TestIsolation:
    def test_rational_roots_are_exact(self):
        report = isolate_real_roots(linear_factors(-2, 0, 1))
        assert report.exact_rational_roots == (-2, 0, 1)
        assert report.intervals == ()
        assert report.precision == 0

    def test_irrational_roots(self):
        report = isolate_real_roots(Poly((-2, 0, 1)), eps=Fraction(1, 10**6))
        assert report.count == 2
        lower, upper = report.intervals
        assert lower.hi < 0 < upper.lo
        assert upper.lo ** 2 < 2 < upper.hi ** 2
        assert upper.width <= Fraction(1, 10**6)

    def test_no_real_roots(self):
        assert isolate_real_roots(Poly((1, 0, 1))).count == 0

    def test_multiplicities_are_ignored(self):
        report = isolate_real_roots(poly_mul(Poly((-2, 0, 1)), Poly((-2, 0, 1))))
        assert report.count == 2

    def test_half_integer_root(self):
        report = isolate_real_roots(linear_factors(Fraction(1, 2), 3), eps=Fraction(1, 1000))
        assert report.count == 2
        roots = list(report.exact_rational_roots) + [iv.midpoint for iv in report.intervals]
        assert any(abs(r - Fraction(1, 2)) < Fraction(1, 10) for r in roots)

    def test_intervals_are_disjoint_and_avoid_exact_roots(self, cache):
        for n in (4, 9, 15):
            report = isolate_real_roots(delta(cache, n))
            for left, right in zip(report.intervals, report.intervals[1:]):
                assert left.hi <= right.lo
            for iv in report.intervals:
                assert not any(iv.lo <= r <= iv.hi for r in report.exact_rational_roots)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            isolate_real_roots(Poly())

    def test_sturm_count(self):
        p = linear_factors(-1, 2, 5)
        assert sturm_count(p, None, None) == 3
        assert sturm_count(p, 0, None) == 2
        assert sturm_count(p, 0, 2) == 1
        with pytest.raises(ValueError):
            sturm_count(p, 3, 1)


def variations_at_infinity(rows, side):
    signs = [(1 if row[-1] > 0 else -1) * side ** (len(row) - 1) for row in rows]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class TestSturmChain:
    def test_starts_with_polynomial_and_derivative(self):
        p = linear_factors(-1, 0, 1)
        rows = sturm_chain(p.integer_form[1])
        assert rows[0] == (0, -1, 0, 1)
        assert rows[1] == poly_derivative(p).integer_form[1]
        assert len(rows[-1]) == 1

    def test_rows_are_primitive(self, cache):
        for row in sturm_chain(squarefree_part(delta(cache, 12)).integer_form[1]):
            assert math.gcd(*(int(c) for c in row)) == 1

    def test_negative_leading_coefficient(self):
        # -(x - 1)(x - 2)(x + 3)(x^2 + 1)
        p = poly_mul(linear_factors(1, 2, -3), Poly((1, 0, 1))) * -1
        rows = sturm_chain(p.integer_form[1])
        assert variations_at_infinity(rows, -1) - variations_at_infinity(rows, 1) == 3

    def test_census(self):
        p = poly_mul(linear_factors(-1, 2, 5, 5), Poly((1, 0, 1)))
        census = root_census(p)
        assert (census.positive, census.real, census.distinct) == (2, 3, 5)
        assert not census.only_real

    def test_census_counts_zero_as_non_positive(self):
        census = root_census(linear_factors(0, 0, 3))
        assert (census.positive, census.real, census.distinct) == (1, 2, 2)
        assert census.only_real


class TestRefine:
    def test_width(self):
        iv = isolate_real_roots(Poly((-3, 0, 1))).intervals[-1]
        refined = refine(Poly((-3, 0, 1)), iv, Fraction(1, 10**9))
        assert refined.width <= Fraction(1, 10**9)
        assert refined.lo ** 2 < 3 < refined.hi ** 2

    def test_non_positive_eps(self):
        iv = RootInterval(Fraction(1), Fraction(2), -1, 1)
        with pytest.raises(ValueError):
            refine(Poly((-3, 0, 1)), iv, 0)

    def test_interval_validation(self):
        with pytest.raises(ValueError):
            RootInterval(Fraction(2), Fraction(1), -1, 1)
        with pytest.raises(ValueError):
            RootInterval(Fraction(1), Fraction(2), 1, 1)


class TestLargestPositiveRoot:
    def test_delta_two(self, cache):
        # 6 * Delta_2 = x * (x^2 + 6x - 1)
        root = largest_positive_real_root(delta(cache, 2))
        assert abs(root - (math.sqrt(10) - 3)) < 1e-11

    def test_exact_roots(self, cache):
        assert largest_positive_real_root(bo_poly(cache, 1, 1)) == 3
        assert largest_positive_real_root(bo_poly(cache, 2, 1)) == 2

    def test_none_without_positive_roots(self):
        assert largest_positive_real_root(linear_factors(-1, -4)) is None
        assert largest_positive_real_root(Poly.constant(5)) is None

    def test_interval_straddling_zero(self):
        # Roots -1/3 and sqrt(2)/10: the positive one must be reported.
        p = poly_mul(Poly((1, 3)), Poly((-2, 0, 100)))
        root = largest_positive_real_root(p)
        assert abs(root - math.sqrt(2) / 10) < 1e-11

    @pytest.mark.parametrize("a", range(1, 11))
    def test_table1_row(self, cache, a):
        for b in range(1, 11):
            root = largest_positive_real_root(bo_poly(cache, a, b))
            assert abs(float(root) - TABLE1[a - 1][b - 1]) <= 0.005 + 1e-9

    @pytest.mark.parametrize("a", range(1, 11))
    def test_single_positive_root(self, cache, a):
        for b in range(1, 11):
            assert root_census(bo_poly(cache, a, b)).positive == 1

    def test_degree_71_within_seconds(self, cache):
        p = bo_poly(cache, 70, 1)
        started = time.perf_counter()
        root = largest_positive_real_root(p)
        census = root_census(p)
        elapsed = time.perf_counter() - started
        assert 0 < root <= 2
        assert census.positive == 1
        assert elapsed < 60

    def test_eps_must_be_positive(self):
        with pytest.raises(ValueError):
            largest_positive_real_root(Poly((-2, 0, 1)), 0)


class TestPositiveBeyond:
    def test_descartes(self):
        cert = positive_beyond(linear_factors(-1, 2), 2)
        assert cert.method == "descartes"
        assert cert.holds_beyond
        assert not cert.holds_from
        assert cert.value_at_threshold == 0

    def test_sturm_counts_roots(self):
        cert = positive_beyond(linear_factors(1, 3, 7), 2)
        assert not cert.holds_beyond
        assert cert.roots_beyond == 2
        assert cert.method == "sturm"

    def test_negative_leading_coefficient(self):
        cert = positive_beyond(Poly((1, -1)), 5)
        assert not cert.leading_positive
        assert not cert.holds_beyond

    def test_bisection_certificate(self):
        # (x - 10)^2 + 1/100 has no real root but a negative Taylor coefficient at 0.
        p = poly_mul(Poly((-10, 1)), Poly((-10, 1))) + Poly.constant(Fraction(1, 100))
        cert = positive_beyond(p, 0)
        assert cert.holds_from
        assert cert.method in ("bisection", "sturm")

    def test_main_theorem_shape(self, cache):
        for n in (4, 10, 40):
            assert positive_beyond(delta(cache, n), 1).holds_from
            assert positive_beyond(prop7_poly(cache, n), 2).holds_from

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            positive_beyond(Poly(), 1)


class TestFloatSweep:
    def test_quadratic(self):
        roots = all_roots_float(Poly((-2, 0, 1)))
        assert [r.converged for r in roots] == [True, True]
        assert roots[0].value.real == pytest.approx(-math.sqrt(2))
        assert roots[1].value.real == pytest.approx(math.sqrt(2))

    def test_complex_pair(self):
        roots = all_roots_float(Poly((1, 0, 1)))
        assert sorted(round(r.value.imag, 8) for r in roots) == [-1.0, 1.0]

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            all_roots_float(Poly.constant(3))

    def test_agrees_with_exact_isolation(self, cache):
        for n in range(1, 31):
            p = delta(cache, n)
            roots = all_roots_float(p)
            assert len(roots) == squarefree_part(p).degree
            assert all(r.converged for r in roots)
            report = isolate_real_roots(p, eps=Fraction(1, 10**8))
            exact = [float(r) for r in report.exact_rational_roots]
            exact += [float(iv.midpoint) for iv in report.intervals]
            for value in exact:
                assert min(abs(r.value - value) for r in roots) < 1e-6

    def test_real_root_count_matches_exact(self, cache):
        for n in range(1, 31):
            p = delta(cache, n)
            real = [r for r in all_roots_float(p) if abs(r.value.imag) < 1e-6]
            assert len(real) == isolate_real_roots(p).count
