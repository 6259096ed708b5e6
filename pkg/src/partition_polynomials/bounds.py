"""Analytic estimates around p(n) and the growth inequalities used for P_n(x).

Boolean comparisons against transcendental quantities (exp, log, sqrt, pi) are
decided with mpmath interval arithmetic: the predicate is evaluated on certified
enclosures and the working precision is raised until the enclosures separate.
Plain high-precision values (``mu``, ``bo2_bounds``, ``lehmer_error_bound``) come
from the ``mp`` context and are for reporting only.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from mpmath import iv, mp

from .exactnum import RationalLike, sigma, to_rational
from .partpoly import PolyCache

logger = logging.getLogger(__name__)

# Working precisions (bits) tried in order: double, quadruple, then software floats.
PRECISION_LADDER = (53, 113, 256, 1024, 4096)

# Decimal digits for the reporting values.
REPORT_DPS = 40

# Constant in P_n(2) >= (13/4) * (1 + ln(2n)).
EQ_N1_CONSTANT = Fraction(13, 4)

# Relative margin above which a float comparison of sigma(m) with m(1 + ln m) is trusted.
SIGMA_FLOAT_GUARD = 1e-9


@dataclass(frozen=True)
class BoundPair:
    """Lower and upper N=1 Rademacher bounds on p(m)."""

    lower: mp.mpf
    upper: mp.mpf
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.m >= 2 and self.lower <= 0:
            raise ValueError(f"lower bound must be positive for m >= 2, got {self.lower}")


def decide(predicate: Callable[[], Optional[bool]], label: str) -> bool:
    """Run an interval predicate under increasing precision until it is definite.

    The predicate reads ``iv.prec`` implicitly and returns True, False, or None
    when its enclosures still overlap.

    Raises:
        ArithmeticError: If the predicate is undecided at the highest precision
    """
    saved = iv.prec
    try:
        for bits in PRECISION_LADDER:
            iv.prec = bits
            outcome = predicate()
            if outcome is not None:
                if bits > PRECISION_LADDER[0]:
                    logger.debug("Decided %s at %d bits", label, bits)
                return outcome
    finally:
        iv.prec = saved
    raise ArithmeticError(f"Could not decide {label} within {PRECISION_LADDER[-1]} bits")


def _greater(lhs, rhs) -> Optional[bool]:
    if lhs.a > rhs.b:
        return True
    if lhs.b <= rhs.a:
        return False
    return None


def _enclose(q: RationalLike):
    q = to_rational(q)
    return iv.mpf(q.numerator) / q.denominator


def _one_plus_log(k: int):
    return 1 + iv.log(iv.mpf(k))


def mu(n: int) -> mp.mpf:
    """pi/6 * sqrt(24n - 1)."""
    if n < 1:
        raise ValueError(f"mu needs n >= 1, got {n}")
    with mp.workdps(REPORT_DPS):
        return mp.pi / 6 * mp.sqrt(24 * n - 1)


def bo2_bounds(m: int) -> BoundPair:
    """Both sides of the N=1 sandwich (sqrt(3)/(12m)) (1 -/+ 1/sqrt(m)) e^mu(m).

    Example:
        >>> bo2_bounds(1).lower
        mpf('0.0')
    """
    if m < 1:
        raise ValueError(f"bo2_bounds needs m >= 1, got {m}")
    with mp.workdps(REPORT_DPS):
        base = mp.sqrt(3) / (12 * m) * mp.exp(mu(m))
        inverse_root = 1 / mp.sqrt(m)
        lower = mp.mpf(0) if m == 1 else base * (1 - inverse_root)
        upper = base * (1 + inverse_root)
    return BoundPair(lower=lower, upper=upper, m=m)


def lehmer_error_bound(n: int, N: int) -> mp.mpf:
    """Lehmer's bound on the Rademacher remainder after N terms."""
    if n < 1 or N < 1:
        raise ValueError(f"lehmer_error_bound needs n, N >= 1, got ({n}, {N})")
    with mp.workdps(REPORT_DPS):
        m = mu(n)
        ratio = mp.mpf(N) / m
        prefactor = mp.pi**2 * mp.power(N, mp.mpf(-2) / 3) / mp.sqrt(3)
        return prefactor * (ratio**3 * mp.sinh(m / N) + mp.mpf(1) / 6 - ratio**2)


def bo2_sandwich_holds(m: int, p_m: int) -> bool:
    """Certified lower(m) < p_m < upper(m)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def predicate():
        base = iv.sqrt(3) / (12 * m) * iv.exp(iv.pi / 6 * iv.sqrt(24 * m - 1))
        inverse_root = 1 / iv.sqrt(m)
        value = iv.mpf(p_m)
        above_lower = _greater(value, base * (1 - inverse_root))
        below_upper = _greater(base * (1 + inverse_root), value)
        if above_lower is False or below_upper is False:
            return False
        if above_lower is None or below_upper is None:
            return None
        return True

    return decide(predicate, f"bo2 sandwich at m={m}")


def wachstum_holds(a: int) -> bool:
    """e^(pi sqrt(a)/3) > 2 (1 + ln 2a)(1 + a) / (1 - 1/sqrt(a)).

    Raises:
        ValueError: If ``a`` <= 1 (the right side is undefined at a = 1)
    """
    if a <= 1:
        raise ValueError(f"wachstum_holds needs a >= 2, got {a}")

    def predicate():
        root = iv.sqrt(a)
        lhs = iv.exp(iv.pi * root / 3)
        rhs = _one_plus_log(2 * a) * (1 + a) * 2 / (1 - 1 / root)
        return _greater(lhs, rhs)

    return decide(predicate, f"growth inequality at a={a}")


def eq_n1_holds(cache: PolyCache, n: int) -> bool:
    """P_n(2) >= (13/4)(1 + ln 2n); the right side is irrational, so this is strict."""
    if n < 1:
        raise ValueError(f"eq_n1_holds needs n >= 1, got {n}")
    value = cache.value(n, 2)

    def predicate():
        return _greater(_enclose(value), _enclose(EQ_N1_CONSTANT) * _one_plus_log(2 * n))

    return decide(predicate, f"P_{n}(2) bound")


def hilfs_holds(cache: PolyCache, n: int, x: RationalLike) -> bool:
    """P_n(x) > 1 + ln(2n) for one rational x."""
    if n < 1:
        raise ValueError(f"hilfs_holds needs n >= 1, got {n}")
    value = cache.value(n, x)

    def predicate():
        return _greater(_enclose(value), _one_plus_log(2 * n))

    return decide(predicate, f"P_{n}({x}) > 1 + ln({2 * n})")


def summand_positive(p_big: Fraction, p_small: Fraction, a: int) -> bool:
    """p_big - (1 + ln 2a) * p_small > 0 for exact values p_big, p_small."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")

    def predicate():
        return _greater(_enclose(p_big), _one_plus_log(2 * a) * _enclose(p_small))

    return decide(predicate, f"summand at a={a}")


def sigma_bound_sign(m: int) -> int:
    """Certified sign of m (1 + ln m) - sigma(m).

    For m >= 2, ln m is transcendental and the sides never meet; at m = 1 both are
    exactly 1 and the sign is 0.

    Raises:
        ValueError: If ``m`` is not a positive integer
        ArithmeticError: If the comparison cannot be decided
    """
    s = sigma(m)
    if m == 1:
        return (s < 1) - (s > 1)
    bound = m * (1 + math.log(m))
    if abs(bound - s) > SIGMA_FLOAT_GUARD * bound:
        return 1 if s < bound else -1

    def predicate():
        return _greater(m * _one_plus_log(m), iv.mpf(s))

    return 1 if decide(predicate, f"sigma bound at m={m}") else -1


def sigma_bound_holds(m: int) -> bool:
    """sigma(m) <= m (1 + ln m); equality exactly at m = 1."""
    return sigma_bound_sign(m) >= 0
