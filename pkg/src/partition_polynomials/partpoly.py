"""The partition polynomials P_n(x) and the polynomials built from them.

P_0 = 1 and P_n(x) = (x/n) * sum_{k=1}^{n} sigma(k) P_{n-k}(x). For every positive
integer k, P_n(k) is the number of k-colored partitions of n.

The cache keeps n! * P_n as an integer polynomial next to the rational one: the
recurrence only ever divides by n, so the scaled form stays integral and the whole
build runs on gmpy2 integers.
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import gmpy2

from .exactnum import (
    Poly,
    RationalLike,
    poly_mul,
    poly_scale,
    poly_sub,
    sigma_table,
    to_rational,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 200


@dataclass(frozen=True)
class PolyCache:
    """Immutable table of P_0..P_max_n and sigma(1)..sigma(max_n).

    Attributes:
        max_n: Largest index held
        polys: ``polys[n]`` is P_n with rational coefficients
        sigma_table: ``sigma_table[k - 1]`` is sigma(k)
        scaled: ``scaled[n]`` holds the integer coefficients of n! * P_n
    """

    max_n: int
    polys: Tuple[Poly, ...]
    sigma_table: Tuple[int, ...]
    scaled: Tuple[Tuple[int, ...], ...]

    def poly(self, n: int) -> Poly:
        """Return P_n.

        Raises:
            IndexError: If ``n`` is outside 0..max_n
        """
        self._check_index(n)
        return self.polys[n]

    def sigma(self, k: int) -> int:
        if not 1 <= k <= self.max_n:
            raise IndexError(f"sigma({k}) is outside the cached range 1..{self.max_n}")
        return self.sigma_table[k - 1]

    def value(self, n: int, x: RationalLike) -> Fraction:
        """Exact P_n(x), evaluated on the integer form n! * P_n."""
        self._check_index(n)
        x = to_rational(x)
        coeffs = self.scaled[n]
        u, v = x.numerator, x.denominator
        acc = coeffs[-1]
        power = 1
        for c in reversed(coeffs[:-1]):
            power *= v
            acc = acc * u + c * power
        return Fraction(acc, math.factorial(n) * v**n)

    def _check_index(self, n: int) -> None:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"P_{n} is outside the cached range 0..{self.max_n}")


@dataclass(frozen=True)
class ColoredCountTable:
    """Counts p_{-k}(0..N) of k-colored partitions."""

    k: int
    counts: Tuple[int, ...]


def build_cache(max_n: int = DEFAULT_MAX_N) -> PolyCache:
    """Build P_0..P_max_n exactly from the sigma recurrence.

    With Q_n = n! * P_n the recurrence reads
    Q_n = x * sum_{k=1}^{n} sigma(k) * (n-1)!/(n-k)! * Q_{n-k},
    which involves integers only.

    Args:
        max_n: Largest index to build (>= 0)

    Returns:
        A complete, immutable PolyCache

    Raises:
        ValueError: If ``max_n`` is negative

    Example:
        >>> cache = build_cache(3)
        >>> cache.value(3, 1), cache.value(3, 2)
        (Fraction(3, 1), Fraction(10, 1))
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    started = time.perf_counter()
    sigmas = sigma_table(max_n)
    work = [(gmpy2.mpz(1),)]
    for n in range(1, max_n + 1):
        inner = [gmpy2.mpz(0)] * n
        falling = gmpy2.mpz(1)  # (n-1)! / (n-k)!
        for k in range(1, n + 1):
            if k > 1:
                falling *= n - k + 1
            weight = sigmas[k - 1] * falling
            for i, c in enumerate(work[n - k]):
                inner[i] += weight * c
        work.append((gmpy2.mpz(0), *inner))
    scaled = [tuple(int(c) for c in row) for row in work]

    polys = []
    for n, coeffs in enumerate(scaled):
        factorial = int(gmpy2.fac(n))
        polys.append(Poly(tuple(Fraction(c, factorial) for c in coeffs)))
    logger.info(
        "Built partition polynomials P_0..P_%d in %.2fs", max_n, time.perf_counter() - started
    )
    return PolyCache(
        max_n=max_n,
        polys=tuple(polys),
        sigma_table=sigmas,
        scaled=tuple(scaled),
    )


def derivative_formula(cache: PolyCache, n: int) -> Poly:
    """P_n'(x) as sum_{k=1}^{n} (sigma(k)/k) P_{n-k}(x).

    Raises:
        ValueError: If ``n`` < 1 (P_0' is the zero polynomial)
        IndexError: If ``n`` exceeds the cache
    """
    if n < 1:
        raise ValueError(f"derivative_formula needs n >= 1, got {n}")
    cache.poly(n)
    total = Poly()
    for k in range(1, n + 1):
        total = total + poly_scale(cache.polys[n - k], Fraction(cache.sigma(k), k))
    return total


def delta(cache: PolyCache, n: int) -> Poly:
    """Difference polynomial Delta_n = P_{n+1} - P_n."""
    if n < 0:
        raise ValueError(f"delta needs n >= 0, got {n}")
    return poly_sub(cache.poly(n + 1), cache.poly(n))


def bo_poly(cache: PolyCache, a: int, b: int) -> Poly:
    """P_{a,b} = P_a * P_b - P_{a+b}."""
    if a < 1 or b < 1:
        raise ValueError(f"bo_poly needs a, b >= 1, got ({a}, {b})")
    top = cache.poly(a + b)
    return poly_sub(poly_mul(cache.poly(a), cache.poly(b)), top)


def prop7_poly(cache: PolyCache, n: int) -> Poly:
    """x * P_n(x) - P_{n+1}(x), which is the same polynomial as P_{n,1}."""
    return bo_poly(cache, n, 1)


def tilde_poly(cache: PolyCache, n: int) -> Poly:
    """Normalized polynomial n! * P_n(x) / x.

    Raises:
        ValueError: If ``n`` < 1, or if the result is not monic of degree n-1 with
            positive integer coefficients
    """
    if n < 1:
        raise ValueError(f"tilde_poly needs n >= 1, got {n}")
    cache.poly(n)
    coeffs = cache.scaled[n]
    if coeffs[0] != 0:
        raise ValueError(f"n! * P_{n} has nonzero constant term {coeffs[0]}")
    body = coeffs[1:]
    if any(c <= 0 for c in body) or body[-1] != 1:
        raise ValueError(f"n! * P_{n} / x is not monic with positive integer coefficients")
    return Poly(body)


def colored_counts_oracle(k: int, N: int) -> ColoredCountTable:
    """Count k-colored partitions of 0..N from the product prod_m (1 - q^m)^(-k).

    Each factor 1/(1 - q^m) is applied k times as a running prefix sum, so this
    shares nothing with the sigma recurrence.

    Example:
        >>> colored_counts_oracle(2, 5).counts
        (1, 2, 5, 10, 20, 36)
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    series = [0] * (N + 1)
    series[0] = 1
    for m in range(1, N + 1):
        for _ in range(k):
            for i in range(m, N + 1):
                series[i] += series[i - m]
    return ColoredCountTable(k=k, counts=tuple(series))


def partition_numbers(N: int) -> Tuple[int, ...]:
    """p(0..N)."""
    return colored_counts_oracle(1, N).counts
