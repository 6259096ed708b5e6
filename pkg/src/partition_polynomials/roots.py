"""Real-root isolation, refinement and positivity certificates for exact polynomials.

Isolation runs on the squarefree part: rational roots 0 and small integers are
divided out exactly, the rest is bisected over rational endpoints using Sturm
counts. Sturm chains are primitive integer remainder sequences on gmpy2 integers,
so every sign that decides anything is computed in exact integer arithmetic.

:func:`all_roots_float` is separate: it approximates all complex roots in double
precision for plotting and is never used to certify a claim.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

import gmpy2
import numpy as np
import sympy

from .exactnum import (
    Poly,
    RationalLike,
    poly_divmod,
    poly_sign_at,
    shift_coefficients,
    taylor_shift,
    to_rational,
)

logger = logging.getLogger(__name__)

# Integer roots up to this size are divided out before bisection.
SMALL_ROOT_BOUND = 16

DEFAULT_ROOT_EPS = Fraction(1, 10**12)

# Bisection depth for Descartes root-free checks before falling back to Sturm counts.
DESCARTES_MAX_DEPTH = 48

FLOAT_SWEEP_MAX_ITER = 500
FLOAT_SWEEP_TOLERANCE = 1e-10

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class RootInterval:
    """Open interval (lo, hi) holding exactly one simple root.

    ``sign_lo`` and ``sign_hi`` are the signs of the squarefree part at the
    endpoints; they always differ.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"RootInterval needs lo < hi, got ({self.lo}, {self.hi})")
        if {self.sign_lo, self.sign_hi} != {-1, 1}:
            raise ValueError(
                f"RootInterval endpoint signs must be opposite and nonzero, "
                f"got ({self.sign_lo}, {self.sign_hi})"
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        return self.lo < to_rational(x) < self.hi


@dataclass(frozen=True)
class RootReport:
    """All real roots of a squarefree part, sorted.

    Attributes:
        exact_rational_roots: Roots found exactly
        intervals: Disjoint isolating intervals for the remaining roots
        precision: Largest interval width (0 when every root is exact)
    """

    exact_rational_roots: Tuple[Fraction, ...]
    intervals: Tuple[RootInterval, ...]
    precision: Fraction

    @property
    def count(self) -> int:
        return len(self.exact_rational_roots) + len(self.intervals)


@dataclass(frozen=True)
class FloatRoot:
    """One root approximation from the floating-point sweep.

    ``residual`` is the relative backward error |p(z)| / sum |a_i| |z|^i of the
    monic squarefree part.
    """

    value: complex
    residual: float
    converged: bool


@dataclass(frozen=True)
class PositivityCertificate:
    """Outcome of checking ``p > 0`` on (threshold, infinity).

    Attributes:
        threshold: Left end of the ray
        value_at_threshold: Exact p(threshold)
        roots_beyond: Distinct real roots in (threshold, infinity)
        leading_positive: Whether the leading coefficient is positive
        method: ``"descartes"``, ``"bisection"`` or ``"sturm"`` (see :func:`positive_beyond`)
    """

    threshold: Fraction
    value_at_threshold: Fraction
    roots_beyond: int
    leading_positive: bool
    method: str

    @property
    def holds_beyond(self) -> bool:
        """p > 0 on the open ray (threshold, infinity)."""
        return self.leading_positive and self.roots_beyond == 0

    @property
    def holds_from(self) -> bool:
        """p > 0 on the closed ray [threshold, infinity)."""
        return self.holds_beyond and self.value_at_threshold > 0


@dataclass(frozen=True)
class RootCensus:
    """Root counts of a polynomial from a single Sturm chain.

    Attributes:
        positive: Distinct real roots in (0, infinity)
        real: Distinct real roots
        distinct: Distinct complex roots (degree of the squarefree part)
    """

    positive: int
    real: int
    distinct: int

    @property
    def only_real(self) -> bool:
        return self.real == self.distinct


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), made monic.

    The gcd is taken on the primitive integer form, which has the same roots.

    Raises:
        ValueError: If ``p`` is the zero polynomial
    """
    if p.is_zero:
        raise ValueError("The zero polynomial has no squarefree part")
    if p.degree == 0:
        return Poly.constant(1)
    ints = p.integer_form[1]
    part = sympy.Poly(list(reversed(ints)), _X, domain=sympy.ZZ).sqf_part()
    coeffs = [int(c) for c in reversed(part.all_coeffs())]
    return Poly(tuple(Fraction(c, coeffs[-1]) for c in coeffs))


def _primitive(row: Sequence) -> List:
    content = reduce(gmpy2.gcd, row, gmpy2.mpz(0))
    return [c // content for c in row]


def _pseudo_remainder(a: List, b: List) -> List:
    """|lc(b)|^s * a mod b for some s >= 0, ascending; empty when b divides a."""
    lead = b[-1]
    k = len(b) - 1
    r = list(a)
    negate = False
    while len(r) > k:
        top = r[-1]
        shift = len(r) - 1 - k
        r = [lead * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= top * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        negate ^= lead < 0
    return [-c for c in r] if negate else r


def sturm_chain(ints: Sequence[int]) -> List[Tuple[int, ...]]:
    """Sturm chain f, f', -rem, ... of a squarefree integer polynomial.

    Every remainder is scaled by a positive factor and divided by its content,
    so the rows stay primitive and the sign pattern of the chain is unchanged.

    Args:
        ints: Ascending integer coefficients of f

    Returns:
        The chain rows as ascending tuples of gmpy2 integers
    """
    rows = [_primitive([gmpy2.mpz(c) for c in ints])]
    if len(rows[0]) > 1:
        rows.append(_primitive([i * c for i, c in enumerate(rows[0]) if i > 0]))
    while len(rows[-1]) > 1:
        remainder = _pseudo_remainder(rows[-2], rows[-1])
        if not remainder:
            break
        rows.append(_primitive([-c for c in remainder]))
    return [tuple(row) for row in rows]


class _SturmCounter:
    """Sturm chain of a squarefree polynomial, evaluated on integer rows."""

    def __init__(self, sqf: Poly):
        self.poly = sqf
        self._rows = sturm_chain(sqf.integer_form[1])

    def sign(self, x: RationalLike) -> int:
        return poly_sign_at(self.poly, x)

    def variations(self, x: Optional[Fraction], side: int = 1) -> int:
        if x is None:
            signs = [_sign(row[-1]) * (side ** (len(row) - 1)) for row in self._rows]
        else:
            signs = [_row_sign(row, x) for row in self._rows]
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
        """Distinct roots in (lo, hi]; ``None`` stands for -inf / +inf."""
        return self.variations(lo, side=-1) - self.variations(hi, side=1)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _row_sign(row: Tuple[int, ...], x: Fraction) -> int:
    u, v = x.numerator, x.denominator
    acc = row[-1]
    power = 1
    for c in reversed(row[:-1]):
        power *= v
        acc = acc * u + c * power
    return _sign(acc)


def sturm_count(p: Poly, lo: Optional[RationalLike], hi: Optional[RationalLike]) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi].

    ``None`` for ``lo`` or ``hi`` means minus or plus infinity.
    """
    lo = None if lo is None else to_rational(lo)
    hi = None if hi is None else to_rational(hi)
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"sturm_count needs lo < hi, got ({lo}, {hi})")
    return _SturmCounter(squarefree_part(p)).count(lo, hi)


def root_census(p: Poly) -> RootCensus:
    """Count positive, real and distinct roots of a nonzero ``p`` with one chain.

    Raises:
        ValueError: If ``p`` is the zero polynomial
    """
    sqf = squarefree_part(p)
    counter = _SturmCounter(sqf)
    at_minus_inf = counter.variations(None, side=-1)
    at_zero = counter.variations(Fraction(0))
    at_plus_inf = counter.variations(None, side=1)
    return RootCensus(
        positive=at_zero - at_plus_inf,
        real=at_minus_inf - at_plus_inf,
        distinct=sqf.degree,
    )


def _cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p.leading_coefficient)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


def _small_integer_candidates(constant: int) -> List[int]:
    candidates = []
    for d in range(1, SMALL_ROOT_BOUND + 1):
        if constant % d == 0:
            candidates.extend((d, -d))
    return candidates


def _peel_rational_roots(sqf: Poly) -> Tuple[List[Fraction], Poly]:
    exact: List[Fraction] = []
    rest = sqf
    if rest.degree >= 1 and rest.constant_term == 0:
        exact.append(Fraction(0))
        rest = poly_divmod(rest, Poly.identity())[0]
    if rest.degree >= 1:
        for r in _small_integer_candidates(abs(rest.integer_form[1][0])):
            if rest.degree >= 1 and poly_sign_at(rest, r) == 0:
                exact.append(Fraction(r))
                rest = poly_divmod(rest, Poly((Fraction(-r), Fraction(1))))[0]
    return exact, rest


def _tighten(counter: _SturmCounter, lo: Fraction, hi: Fraction):
    # (lo, hi] holds exactly one root; return it exactly or with nonzero end signs.
    while True:
        if counter.sign(hi) == 0:
            return hi, None
        if counter.sign(lo) != 0:
            return lo, hi
        mid = (lo + hi) / 2
        if counter.sign(mid) == 0:
            return mid, None
        if counter.count(mid, hi) == 1:
            lo = mid
        else:
            hi = mid


def _positive_eps(eps: RationalLike) -> Fraction:
    eps = to_rational(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return eps


def isolate_real_roots(p: Poly, eps: Optional[RationalLike] = None) -> RootReport:
    """Isolate every real root of the squarefree part of ``p``.

    Args:
        p: Nonzero polynomial
        eps: Optional width to refine every interval to

    Returns:
        RootReport with sorted exact roots and sorted, disjoint intervals

    Raises:
        ValueError: If ``p`` is the zero polynomial or ``eps`` is not positive
    """
    if eps is not None:
        eps = _positive_eps(eps)
    sqf = squarefree_part(p)
    exact, rest = _peel_rational_roots(sqf)
    raw_intervals: List[Tuple[Fraction, Fraction]] = []

    if rest.degree >= 1:
        counter = _SturmCounter(rest)
        bound = _cauchy_bound(rest)
        stack = [(-bound, bound, counter.variations(-bound), counter.variations(bound))]
        while stack:
            lo, hi, var_lo, var_hi = stack.pop()
            found = var_lo - var_hi
            if found == 0:
                continue
            if found == 1:
                root, upper = _tighten(counter, lo, hi)
                if upper is None:
                    exact.append(root)
                else:
                    raw_intervals.append((root, upper))
                continue
            mid = (lo + hi) / 2
            var_mid = counter.variations(mid)
            stack.append((lo, mid, var_lo, var_mid))
            stack.append((mid, hi, var_mid, var_hi))

        # A peeled root must not sit inside an interval of the remaining factor.
        separated = []
        for lo, hi in raw_intervals:
            while any(lo <= e <= hi for e in exact):
                mid = (lo + hi) / 2
                if counter.sign(mid) == 0:
                    exact.append(mid)
                    lo = hi = None
                    break
                if counter.count(mid, hi) == 1:
                    lo = mid
                else:
                    hi = mid
            if lo is not None:
                separated.append((lo, hi))
        raw_intervals = separated

    intervals = [
        RootInterval(lo, hi, poly_sign_at(sqf, lo), poly_sign_at(sqf, hi))
        for lo, hi in sorted(raw_intervals)
    ]
    if eps is not None:
        intervals = [_refine_squarefree(sqf, iv, eps) for iv in intervals]
    precision = max((iv.width for iv in intervals), default=Fraction(0))
    logger.debug(
        "Isolated %d exact and %d interval roots (degree %d)",
        len(exact),
        len(intervals),
        sqf.degree,
    )
    return RootReport(
        exact_rational_roots=tuple(sorted(exact)),
        intervals=tuple(intervals),
        precision=precision,
    )


def refine(p: Poly, iv: RootInterval, eps: RationalLike) -> RootInterval:
    """Bisect ``iv`` until its width is at most ``eps``.

    The squarefree part changes sign across the isolated root, so the half with
    a sign change is kept at every step.

    Raises:
        ValueError: If ``eps`` is not positive
    """
    return _refine_squarefree(squarefree_part(p), iv, _positive_eps(eps))


def _refine_squarefree(sqf: Poly, iv: RootInterval, eps: Fraction) -> RootInterval:
    lo, hi, sign_lo = iv.lo, iv.hi, iv.sign_lo
    while hi - lo > eps:
        mid = (lo + hi) / 2
        sign_mid = poly_sign_at(sqf, mid)
        if sign_mid == 0:
            half = min(eps, mid - lo, hi - mid) / 2
            return RootInterval(
                mid - half,
                mid + half,
                poly_sign_at(sqf, mid - half),
                poly_sign_at(sqf, mid + half),
            )
        if sign_mid == sign_lo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi, sign_lo, -sign_lo)


def largest_positive_real_root(
    p: Poly, eps: RationalLike = DEFAULT_ROOT_EPS
) -> Optional[Fraction]:
    """Largest real root > 0, exact when found exactly, else an interval midpoint.

    Only the top root is separated with Sturm counts; the other roots are never
    isolated, and the final refinement evaluates the polynomial alone.

    Returns:
        The root (within ``eps``), or None when no positive real root exists

    Raises:
        ValueError: If ``eps`` is not positive
    """
    eps = _positive_eps(eps)
    if p.degree < 1:
        return None
    exact, rest = _peel_rational_roots(squarefree_part(p))
    best_exact = max((r for r in exact if r > 0), default=None)
    if rest.degree < 1:
        return best_exact

    counter = _SturmCounter(rest)
    lo = best_exact if best_exact is not None else Fraction(0)
    hi = Fraction(1 << math.ceil(_cauchy_bound(rest)).bit_length())
    var_lo, var_hi = counter.variations(lo), counter.variations(hi)
    if var_lo == var_hi:
        return best_exact
    # (lo, hi] holds the largest root; shrink it until no other root is left inside.
    while var_lo - var_hi > 1:
        mid = (lo + hi) / 2
        var_mid = counter.variations(mid)
        if var_mid > var_hi:
            lo, var_lo = mid, var_mid
        else:
            hi, var_hi = mid, var_mid

    root, upper = _tighten(counter, lo, hi)
    if upper is None:
        return root
    iv = RootInterval(root, upper, counter.sign(root), counter.sign(upper))
    return _refine_squarefree(rest, iv, eps).midpoint


def _sign_variations(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _positive_root_bound(ints: Tuple[int, ...]) -> int:
    # Fujiwara: every root has modulus <= 2 * max |a_{d-i}/a_d|^(1/i), the last term halved.
    d = len(ints) - 1
    lead = abs(ints[-1])
    largest = 0
    for i in range(1, d + 1):
        ratio = Fraction(abs(ints[d - i]), lead)
        if i == d:
            ratio /= 2
        if ratio == 0:
            continue
        root, exact = gmpy2.iroot(gmpy2.mpz(math.ceil(ratio)), i)
        largest = max(largest, int(root) + (0 if exact else 1))
    return 2 * largest + 1


def _root_free_unit(f: List[int], depth: int) -> Optional[bool]:
    """Whether f has no root in (0, 1); None when undecided at the depth limit.

    Descartes' rule on (1 + y)^d f(1 / (1 + y)) bounds the roots in (0, 1); the
    halves are mapped back onto (0, 1) by 2^d f(x/2) and 2^d f((x + 1)/2).
    """
    variations = _sign_variations(shift_coefficients(f[::-1], 1))
    if variations == 0:
        return True
    if variations == 1:
        return False
    if depth == 0:
        return None
    d = len(f) - 1
    left = [c << (d - i) for i, c in enumerate(f)]
    if sum(left) == 0:
        return False
    outcomes = [_root_free_unit(left, depth - 1)]
    if outcomes[0] is not False:
        outcomes.append(_root_free_unit(shift_coefficients(list(left), 1), depth - 1))
    if False in outcomes:
        return False
    if None in outcomes:
        return None
    return True


def _root_free_positive(q: Poly) -> Optional[bool]:
    # No root of q in (0, infinity)? Scales the Fujiwara bound onto (0, 1).
    ints = q.integer_form[1]
    k = max(_positive_root_bound(ints) - 1, 1).bit_length()
    return _root_free_unit([c << (i * k) for i, c in enumerate(ints)], DESCARTES_MAX_DEPTH)


def positive_beyond(p: Poly, threshold: RationalLike) -> PositivityCertificate:
    """Certify whether ``p > 0`` on (threshold, infinity).

    Three methods are tried in order. ``"descartes"``: p(x + threshold) has no
    negative coefficient. ``"bisection"``: Descartes' rule on halved subintervals
    up to a root bound shows there is no root. ``"sturm"``: the roots in
    (threshold, infinity) are counted with a Sturm chain.

    Raises:
        ValueError: If ``p`` is the zero polynomial
    """
    threshold = to_rational(threshold)
    if p.is_zero:
        raise ValueError("Cannot certify positivity of the zero polynomial")
    value = p(threshold)
    leading_positive = p.leading_coefficient > 0
    if leading_positive:
        shifted = taylor_shift(p, threshold)
        if all(c >= 0 for c in shifted.coeffs):
            return PositivityCertificate(threshold, value, 0, True, "descartes")
        if _root_free_positive(shifted) is True:
            return PositivityCertificate(threshold, value, 0, True, "bisection")
    roots_beyond = sturm_count(p, threshold, None)
    logger.debug(
        "Sturm count beyond %s: degree %d, %d root(s)", threshold, p.degree, roots_beyond
    )
    return PositivityCertificate(threshold, value, roots_beyond, leading_positive, "sturm")


def all_roots_float(
    p: Poly,
    max_iter: int = FLOAT_SWEEP_MAX_ITER,
    tol: float = FLOAT_SWEEP_TOLERANCE,
) -> List[FloatRoot]:
    """Approximate every complex root of the squarefree part (Aberth-Ehrlich).

    Coefficients are made monic in exact arithmetic and rounded to doubles once.
    A root that does not reach ``tol`` within ``max_iter`` iterations is returned
    with ``converged=False``. A root at 0 is divided out exactly and reported with residual 0.

    Raises:
        ValueError: If ``p`` has degree < 1
    """
    if p.degree < 1:
        raise ValueError(f"all_roots_float needs degree >= 1, got {p.degree}")
    sqf = squarefree_part(p)
    known: List[FloatRoot] = []
    if sqf.constant_term == 0:
        known.append(FloatRoot(value=0j, residual=0.0, converged=True))
        sqf = poly_divmod(sqf, Poly.identity())[0]
        if sqf.degree == 0:
            return known
    lead = sqf.leading_coefficient
    coeffs = np.array([float(c / lead) for c in reversed(sqf.coeffs)], dtype=np.complex128)
    deriv = np.polyder(coeffs)
    abs_coeffs = np.abs(coeffs)
    n = sqf.degree

    # Fujiwara bound on the root moduli.
    radius = 2.0 * max(abs_coeffs[i] ** (1.0 / i) for i in range(1, n + 1))
    radius = max(radius, 1.0)
    z = radius * np.exp(2j * np.pi * (np.arange(n) + 0.25) / n)

    def backward_error(points: np.ndarray) -> np.ndarray:
        scale = np.polyval(abs_coeffs, np.abs(points))
        return np.abs(np.polyval(coeffs, points)) / np.where(scale > 0, scale, 1.0)

    residual = backward_error(z)
    active = residual > tol
    iterations = 0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        while active.any() and iterations < max_iter:
            iterations += 1
            ratio = np.polyval(coeffs, z) / np.polyval(deriv, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = 1.0 / diff
            np.fill_diagonal(repulsion, 0.0)
            step = ratio / (1.0 - ratio * repulsion.sum(axis=1))
            step = np.where(np.isfinite(step) & active, step, 0.0)
            z = z - step
            residual = backward_error(z)
            active = residual > tol

    if active.any():
        logger.warning(
            "Float root sweep: %d of %d roots did not converge in %d iterations",
            int(active.sum()),
            n,
            max_iter,
        )
    roots = known + [
        FloatRoot(value=complex(value), residual=float(res), converged=bool(res <= tol))
        for value, res in zip(z, residual)
    ]
    return sorted(roots, key=lambda r: (r.value.real, r.value.imag))
