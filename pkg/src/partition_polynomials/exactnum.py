"""Exact rationals, dense univariate polynomials and the divisor-sum function.

All scalars are :class:`fractions.Fraction`; polynomials keep their coefficients in
ascending degree order and are normalized on construction, so two equal
polynomials always compare equal.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, Fraction, str]

# Sieve-backed sigma values up to this bound; larger arguments are factorized.
SIGMA_SIEVE_LIMIT = 2_000_000

_sigma_sieve: List[int] = [0]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, integer or decimal text into an exact rational.

    Args:
        text: String such as ``"3/4"``, ``"-2"``, ``"0.1623"`` or ``"1e-6"``

    Returns:
        The exact rational value (decimal strings are not rounded)

    Raises:
        ValueError: If the text is not a rational literal

    Example:
        >>> parse_rational("0.25")
        Fraction(1, 4)
    """
    cleaned = text.strip()
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(
            f"Invalid rational '{text}': expected 'p/q', an integer or a decimal string"
        ) from e


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational string to :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Expected a rational value, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"Expected int, Fraction or str, got {type(value).__name__}")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zero coefficients are
    stripped, so the zero polynomial is the empty tuple and ``degree`` is -1 for it.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [to_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls((to_rational(value),))

    @classmethod
    def identity(cls) -> "Poly":
        """The polynomial ``x``."""
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @cached_property
    def integer_form(self) -> Tuple[Fraction, Tuple[int, ...]]:
        """Split into ``scale * q`` with ``q`` primitive over the integers.

        ``scale`` is always positive, so ``q`` has the same sign as the polynomial
        everywhere.
        """
        if not self.coeffs:
            return Fraction(1), ()
        denominator = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (denominator // c.denominator) for c in self.coeffs]
        content = math.gcd(*ints)
        return Fraction(content, denominator), tuple(i // content for i in ints)

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __neg__(self) -> "Poly":
        return poly_scale(self, Fraction(-1))

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, to_rational(other))

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __str__(self) -> str:
        return poly_to_string(self)


def poly_add(p: Poly, q: Poly) -> Poly:
    """Coefficientwise exact sum."""
    size = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (Fraction(0),) * (size - len(p.coeffs))
    b = q.coeffs + (Fraction(0),) * (size - len(q.coeffs))
    return Poly(tuple(x + y for x, y in zip(a, b)))


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_scale(q, Fraction(-1)))


def poly_scale(p: Poly, factor: RationalLike) -> Poly:
    factor = to_rational(factor)
    return Poly(tuple(c * factor for c in p.coeffs))


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact convolution product.

    The product is formed on the integer forms of both factors and rescaled once,
    which avoids a gcd reduction per partial product.
    """
    if p.is_zero or q.is_zero:
        return Poly()
    scale_p, ints_p = p.integer_form
    scale_q, ints_q = q.integer_form
    product = [0] * (len(ints_p) + len(ints_q) - 1)
    for i, a in enumerate(ints_p):
        if a == 0:
            continue
        for j, b in enumerate(ints_q):
            product[i + j] += a * b
    scale = scale_p * scale_q
    return Poly(tuple(scale * c for c in product))


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative."""
    return Poly(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """Exact long division ``p = quotient * q + remainder``.

    Raises:
        ZeroDivisionError: If ``q`` is the zero polynomial
    """
    if q.is_zero:
        raise ZeroDivisionError("Polynomial division by the zero polynomial")
    remainder = list(p.coeffs)
    quotient = [Fraction(0)] * max(len(remainder) - len(q.coeffs) + 1, 0)
    lead = q.leading_coefficient
    for shift in range(len(quotient) - 1, -1, -1):
        factor = remainder[shift + q.degree] / lead
        quotient[shift] = factor
        if factor:
            for i, c in enumerate(q.coeffs):
                remainder[shift + i] -= factor * c
    return Poly(tuple(quotient)), Poly(tuple(remainder))


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    """Exact value ``p(x)`` by homogeneous Horner evaluation over the integers.

    Example:
        >>> poly_eval(Poly((0, Fraction(3, 2), Fraction(1, 2))), 2)
        Fraction(5, 1)
    """
    x = to_rational(x)
    if p.is_zero:
        return Fraction(0)
    scale, ints = p.integer_form
    return scale * Fraction(_homogeneous_horner(ints, x), x.denominator ** (len(ints) - 1))


def poly_sign_at(p: Poly, x: RationalLike) -> int:
    """Sign (-1, 0 or +1) of ``p(x)`` without building the rational value."""
    x = to_rational(x)
    if p.is_zero:
        return 0
    value = _homogeneous_horner(p.integer_form[1], x)
    return (value > 0) - (value < 0)


def _homogeneous_horner(ints: Tuple[int, ...], x: Fraction) -> int:
    # Returns v**d * q(u/v) for x = u/v, d = deg q.
    u, v = x.numerator, x.denominator
    acc = ints[-1]
    power = 1
    for c in reversed(ints[:-1]):
        power *= v
        acc = acc * u + c * power
    return acc


def poly_eval_float(p: Poly, x: float) -> float:
    """Evaluate exactly at the rational value of ``x`` and round once.

    Raises:
        ValueError: If ``x`` is not finite
        OverflowError: If the exact value does not fit a double
    """
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    value = poly_eval(p, Fraction(x))
    try:
        return float(value)
    except OverflowError as e:
        raise OverflowError(f"Polynomial value at x={x!r} overflows a double") from e


def taylor_shift(p: Poly, a: RationalLike) -> Poly:
    """Return ``p(x + a)``.

    Integer shifts run on the integer form of ``p``.
    """
    a = to_rational(a)
    if p.is_zero:
        return p
    if a.denominator == 1:
        scale, ints = p.integer_form
        shifted = shift_coefficients(list(ints), a.numerator)
        return Poly(tuple(scale * c for c in shifted))
    return Poly(tuple(shift_coefficients(list(p.coeffs), a)))


def shift_coefficients(c: list, a) -> list:
    """Replace ascending coefficients ``c`` of q(x) by those of q(x + a), in place."""
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def round_half_away(q: RationalLike, places: int) -> Fraction:
    """Round to ``places`` decimals, ties away from zero, exactly."""
    q = to_rational(q)
    unit = Fraction(10) ** places
    scaled = abs(q) * unit
    whole = math.floor(scaled)
    if scaled - whole >= Fraction(1, 2):
        whole += 1
    return Fraction(whole if q >= 0 else -whole) / unit


def format_decimal(q: RationalLike, places: int) -> str:
    """Fixed-point decimal text of ``q`` with exactly ``places`` decimals.

    Example:
        >>> format_decimal(Fraction(3), 2)
        '3.00'
    """
    rounded = round_half_away(q, places)
    digits = str(abs(rounded.numerator) * (10**places // rounded.denominator))
    sign = "-" if rounded < 0 else ""
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def poly_to_string(p: Poly, var: str = "x") -> str:
    """Human-readable rendering, highest degree first."""
    if p.is_zero:
        return "0"
    terms = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power == 0:
            body = str(magnitude)
        else:
            monomial = var if power == 1 else f"{var}^{power}"
            body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def sigma_table(n: int) -> Tuple[int, ...]:
    """Return ``(sigma(1), ..., sigma(n))`` from the memoized sieve."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _ensure_sieve(n)
    return tuple(_sigma_sieve[1 : n + 1])


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``.

    Raises:
        ValueError: If ``n`` is not a positive integer
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"sigma is defined for positive integers, got {n!r}")
    if n > SIGMA_SIEVE_LIMIT:
        return int(sympy.divisor_sigma(n))
    _ensure_sieve(n)
    return _sigma_sieve[n]


def _ensure_sieve(n: int) -> None:
    global _sigma_sieve
    if n < len(_sigma_sieve):
        return
    limit = min(max(n, 2 * (len(_sigma_sieve) - 1), 1024), max(n, SIGMA_SIEVE_LIMIT // 16))
    table = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for multiple in range(d, limit + 1, d):
            table[multiple] += d
    logger.debug("Extended sigma sieve to %d", limit)
    # Readers only ever see a complete table.
    _sigma_sieve = table
