"""Exhaustive verification sweeps for the finite claims about p(n) and P_n(x).

Every sweep returns a :class:`VerificationReport`. Exceptions and equalities found
are compared with the catalog each claim is known to have; anything found but not
expected, or expected but not found, is listed in the report.

"For all x" claims are discharged with exact positivity certificates from
:mod:`.roots`; transcendental bounds go through the interval predicates of
:mod:`.bounds`. No floating-point value decides any pass/fail outcome.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from .bounds import (
    bo2_sandwich_holds,
    eq_n1_holds,
    hilfs_holds,
    sigma_bound_sign,
    summand_positive,
    wachstum_holds,
)
from .config import Suite, SweepSizes
from .exactnum import Poly, poly_derivative, poly_sign_at, poly_sub
from .partpoly import PolyCache, bo_poly, delta, partition_numbers, prop7_poly
from .roots import positive_beyond, root_census

logger = logging.getLogger(__name__)

Entry = Tuple[int, ...]

BO_SMALL_FAILURES = frozenset({(2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (5, 3)})
BO_EQUALITIES = frozenset({(6, 2), (7, 2), (4, 3)})
CFT_FAILURES = frozenset({(1, 1, 2)})
CFT_EQUALITIES = frozenset({(2, 1, 2), (3, 1, 2), (1, 1, 3)})
MAIN_EQUALITIES = frozenset({(2, 1), (3, 1)})
PROP7_EQUALITIES = frozenset({(1, 3), (2, 2), (3, 2)})
PRIME_REMARK_EXCEPTIONS = frozenset({(1,)})
EQ_N1_EXCEPTIONS = frozenset({(1,), (2,)})
COROLLARY8_EXCEPTIONS = frozenset({(2, 1)})
GROWTH_THRESHOLD = 34

# Witnesses for the prime remark are searched among 2^-1 .. 2^-WITNESS_MAX_EXPONENT.
WITNESS_MAX_EXPONENT = 256

# Parts of the monotonicity certificate, used as the second entry of its tuples.
DELTA_PART, DELTA_DERIVATIVE_PART, DERIVATIVE_SLACK_PART = 0, 1, 2


class ReportStatus(str, Enum):
    """Outcome of one sweep.

    VERIFIED: Found exceptions and equalities match the expected catalog exactly
    FAILED: A certificate that should always hold did not
    MISMATCH: The exceptions or equalities differ from the catalog
    """

    VERIFIED = "verified"
    FAILED = "failed"
    MISMATCH = "mismatch"


class ClaimKind(str, Enum):
    CATALOG = "catalog"
    CERTIFICATE = "certificate"


@dataclass(frozen=True)
class VerificationReport:
    """Result of one verification sweep.

    Attributes:
        claim_id: Short identifier of the claim
        domain_descr: Human-readable description of the range swept
        status: Verified, failed or mismatch
        exceptions: Instances where the claimed inequality fails
        equalities: Instances where both sides are equal
        witnesses: Supporting data, rendered as strings
        elapsed_ms: Wall time of the sweep
        unexpected: Entries found but not in the expected catalog
        missing: Entries in the expected catalog but not found
    """

    claim_id: str
    domain_descr: str
    status: ReportStatus
    exceptions: Tuple[Entry, ...] = ()
    equalities: Tuple[Entry, ...] = ()
    witnesses: Tuple[Tuple[str, ...], ...] = ()
    elapsed_ms: int = 0
    unexpected: Tuple[Entry, ...] = ()
    missing: Tuple[Entry, ...] = ()

    def __post_init__(self):
        if self.elapsed_ms < 0:
            raise ValueError(f"elapsed_ms must be >= 0, got {self.elapsed_ms}")

    @property
    def verified(self) -> bool:
        return self.status is ReportStatus.VERIFIED

    def to_dict(self) -> dict:
        """JSON-ready mapping with a fixed key order."""
        return {
            "claim": self.claim_id,
            "domain": self.domain_descr,
            "status": self.status.value,
            "exceptions": [list(e) for e in self.exceptions],
            "equalities": [list(e) for e in self.equalities],
            "witnesses": [list(w) for w in self.witnesses],
            "elapsed_ms": self.elapsed_ms,
            "unexpected": [list(e) for e in self.unexpected],
            "missing": [list(e) for e in self.missing],
        }


def _finish(
    claim_id: str,
    domain: str,
    kind: ClaimKind,
    started: float,
    exceptions: Iterable[Entry],
    equalities: Iterable[Entry] = (),
    expected_exceptions: FrozenSet[Entry] = frozenset(),
    expected_equalities: FrozenSet[Entry] = frozenset(),
    witnesses: Sequence[Tuple[str, ...]] = (),
) -> VerificationReport:
    found_exceptions = set(exceptions)
    found_equalities = set(equalities)
    unexpected = sorted(found_exceptions - expected_exceptions) + sorted(
        found_equalities - expected_equalities
    )
    missing = sorted(expected_exceptions - found_exceptions) + sorted(
        expected_equalities - found_equalities
    )
    if not unexpected and not missing:
        status = ReportStatus.VERIFIED
    elif kind is ClaimKind.CATALOG:
        status = ReportStatus.MISMATCH
    else:
        status = ReportStatus.FAILED
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.info(
        "%s over %s: %s (%d exceptions, %d equalities, %d ms)",
        claim_id,
        domain,
        status.value,
        len(found_exceptions),
        len(found_equalities),
        elapsed_ms,
    )
    return VerificationReport(
        claim_id=claim_id,
        domain_descr=domain,
        status=status,
        exceptions=tuple(sorted(found_exceptions)),
        equalities=tuple(sorted(found_equalities)),
        witnesses=tuple(witnesses),
        elapsed_ms=elapsed_ms,
        unexpected=tuple(unexpected),
        missing=tuple(missing),
    )


def _require_cache(cache: PolyCache, top: int, claim: str) -> None:
    if top > cache.max_n:
        raise IndexError(f"{claim} needs P_{top}, but the cache holds P_0..P_{cache.max_n}")


# Worker-process state for fan-out; installed once per worker by the pool initializer.
_worker_cache: Optional[PolyCache] = None


def _install_cache(cache: Optional[PolyCache]) -> None:
    global _worker_cache
    _worker_cache = cache


def _run_instance(task: Tuple[Callable[[Any, Any], Any], Any]) -> Any:
    func, item = task
    return func(_worker_cache, item)


def _fan_out(
    cache: Optional[PolyCache],
    func: Callable[[Any, Any], Any],
    items: Iterable[Any],
    jobs: int,
) -> List[Any]:
    """Apply ``func(cache, item)`` to every item, results in input order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(cache, item) for item in items]
    chunksize = max(1, len(items) // (jobs * 4))
    logger.debug("Fanning %d instances of %s over %d workers", len(items), func.__name__, jobs)
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_install_cache, initargs=(cache,)
    ) as executor:
        return list(executor.map(_run_instance, [(func, i) for i in items], chunksize=chunksize))


def _pairs(total_max: int, total_min: int = 2) -> List[Tuple[int, int]]:
    # All (a, b) with 1 <= b <= a and total_min <= a + b <= total_max.
    return [
        (a, b)
        for a in range(1, total_max)
        for b in range(1, a + 1)
        if total_min <= a + b <= total_max
    ]


def verify_bo_classical(cache: PolyCache, nmax: int = 50) -> VerificationReport:
    """Classify p(a)p(b) against p(a+b) for 1 <= b <= a, a+b <= nmax.

    The expected failures are every (a, 1) together with six small pairs; the
    expected equalities are (6,2), (7,2) and (4,3).
    """
    if nmax < 10:
        raise ValueError(f"verify_bo_classical needs nmax >= 10, got {nmax}")
    _require_cache(cache, nmax, "verify_bo_classical")
    started = time.perf_counter()
    p = [int(cache.value(n, 1)) for n in range(nmax + 1)]
    exceptions, equalities = [], []
    for a, b in _pairs(nmax):
        difference = p[a] * p[b] - p[a + b]
        if difference < 0:
            exceptions.append((a, b))
        elif difference == 0:
            equalities.append((a, b))
    expected_failures = BO_SMALL_FAILURES | {(a, 1) for a in range(1, nmax)}
    return _finish(
        "bo-classical",
        f"1 <= b <= a, a + b <= {nmax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        equalities,
        frozenset(expected_failures),
        BO_EQUALITIES,
    )


def verify_cft(cache: PolyCache, kmax: int = 5, nmax: int = 50) -> VerificationReport:
    """Classify p_{-k}(a) p_{-k}(b) against p_{-k}(a+b) for 2 <= k <= kmax.

    Entries are (a, b, k) with b <= a.
    """
    if kmax < 4:
        raise ValueError(f"verify_cft needs kmax >= 4, got {kmax}")
    if nmax < 8:
        raise ValueError(f"verify_cft needs nmax >= 8, got {nmax}")
    _require_cache(cache, nmax, "verify_cft")
    started = time.perf_counter()
    exceptions, equalities = [], []
    for k in range(2, kmax + 1):
        counts = [int(cache.value(n, k)) for n in range(nmax + 1)]
        for a, b in _pairs(nmax):
            difference = counts[a] * counts[b] - counts[a + b]
            if difference < 0:
                exceptions.append((a, b, k))
            elif difference == 0:
                equalities.append((a, b, k))
    return _finish(
        "cft",
        f"2 <= k <= {kmax}, 1 <= b <= a, a + b <= {nmax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        equalities,
        CFT_FAILURES,
        CFT_EQUALITIES,
    )


def _monotonicity_instance(cache: PolyCache, n: int) -> Tuple[List[Entry], List[Entry]]:
    exceptions: List[Entry] = []
    equalities: List[Entry] = []
    d = delta(cache, n)
    if not positive_beyond(d, 1).holds_from:
        exceptions.append((n, DELTA_PART))
    if not positive_beyond(poly_derivative(d), 1).holds_from:
        exceptions.append((n, DELTA_DERIVATIVE_PART))
    slack = poly_sub(poly_derivative(cache.poly(n)), Poly.constant(1))
    if slack.is_zero:
        equalities.append((n, DERIVATIVE_SLACK_PART))
    else:
        certificate = positive_beyond(slack, 1)
        if not certificate.holds_beyond or certificate.value_at_threshold < 0:
            exceptions.append((n, DERIVATIVE_SLACK_PART))
        elif certificate.value_at_threshold == 0:
            equalities.append((n, DERIVATIVE_SLACK_PART))
    return exceptions, equalities


def verify_monotonicity(cache: PolyCache, nmax: int = 100, jobs: int = 1) -> VerificationReport:
    """Certify Delta_n > 0, Delta_n' > 0 and P_n' >= 1 on [1, infinity) for 1 <= n <= nmax.

    Entries are (n, part) with part 0 for Delta_n, 1 for Delta_n' and 2 for P_n' - 1.
    The only expected equality is P_1' = 1.
    """
    if nmax < 1:
        raise ValueError(f"verify_monotonicity needs nmax >= 1, got {nmax}")
    _require_cache(cache, nmax + 1, "verify_monotonicity")
    started = time.perf_counter()
    exceptions, equalities = [], []
    for found, equal in _fan_out(cache, _monotonicity_instance, range(1, nmax + 1), jobs):
        exceptions.extend(found)
        equalities.extend(equal)
    return _finish(
        "monotonicity",
        f"1 <= n <= {nmax}, x >= 1",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
        equalities,
        expected_equalities=frozenset({(1, DERIVATIVE_SLACK_PART)}),
    )


def _prime_remark_instance(cache: PolyCache, n: int) -> Tuple[Fraction, Optional[Fraction]]:
    d = delta(cache, n)
    slope = d.coeffs[1]
    expected = Fraction(cache.sigma(n + 1), n + 1) - Fraction(cache.sigma(n), n)
    if slope != expected:
        raise ArithmeticError(
            f"Delta_{n}'(0) = {slope} disagrees with sigma(n+1)/(n+1) - sigma(n)/n = {expected}"
        )
    if slope >= 0:
        return slope, None
    for j in range(1, WITNESS_MAX_EXPONENT + 1):
        x = Fraction(1, 2**j)
        if poly_sign_at(d, x) < 0:
            return slope, x
    return slope, None


def verify_prime_remark(cache: PolyCache, nmax: int = 100, jobs: int = 1) -> VerificationReport:
    """For every prime n+1 <= nmax+1: Delta_n'(0) < 0 and some x in (0, 1) has Delta_n(x) < 0.

    n = 1 is the one expected exception: Delta_1'(0) = 1/2.
    Witnesses are ``(n, Delta_n'(0), x_n)``.
    """
    if nmax < 1:
        raise ValueError(f"verify_prime_remark needs nmax >= 1, got {nmax}")
    _require_cache(cache, nmax + 1, "verify_prime_remark")
    started = time.perf_counter()
    indices = [n for n in range(1, nmax + 1) if sympy.isprime(n + 1)]
    exceptions, witnesses = [], []
    for n, (slope, x) in zip(indices, _fan_out(cache, _prime_remark_instance, indices, jobs)):
        if x is None:
            exceptions.append((n,))
        else:
            witnesses.append((str(n), str(slope), str(x)))
    return _finish(
        "prime-remark",
        f"n + 1 prime, 1 <= n <= {nmax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        expected_exceptions=PRIME_REMARK_EXCEPTIONS,
        witnesses=witnesses,
    )


def _main_theorem_instance(cache: PolyCache, pair: Tuple[int, int]) -> Tuple[bool, Fraction]:
    certificate = positive_beyond(bo_poly(cache, *pair), 2)
    return certificate.holds_beyond, certificate.value_at_threshold


def verify_main_theorem(cache: PolyCache, nmax: int = 50, jobs: int = 1) -> VerificationReport:
    """Certify P_a P_b - P_{a+b} > 0 on (2, infinity) for 1 <= b <= a, 3 <= a+b <= nmax.

    At x = 2 the value must be positive for a + b > 4; (2,1) and (3,1) vanish there.
    """
    if nmax < 3:
        raise ValueError(f"verify_main_theorem needs nmax >= 3, got {nmax}")
    _require_cache(cache, nmax, "verify_main_theorem")
    started = time.perf_counter()
    pairs = _pairs(nmax, total_min=3)
    exceptions, equalities = [], []
    for pair, (holds, value) in zip(pairs, _fan_out(cache, _main_theorem_instance, pairs, jobs)):
        if not holds or value < 0:
            exceptions.append(pair)
        elif value == 0:
            equalities.append(pair)
    return _finish(
        "main-theorem",
        f"1 <= b <= a, 3 <= a + b <= {nmax}, x >= 2",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
        equalities,
        expected_equalities=frozenset(e for e in MAIN_EQUALITIES if sum(e) <= nmax),
    )


def _summand_instance(cache: PolyCache, a: int) -> List[Entry]:
    failures = []
    for b in range(2, a + 1):
        for k in range(1, b):
            if not summand_positive(cache.value(a + b - k, 2), cache.value(b - k, 2), a):
                failures.append((k, b, a))
    return failures


def verify_summand(cache: PolyCache, amax: int = 33, jobs: int = 1) -> VerificationReport:
    """P_{a+b-k}(2) - (1 + ln 2a) P_{b-k}(2) > 0 for 1 <= k < b <= a <= amax.

    Entries are (k, b, a).
    """
    if amax < 2:
        raise ValueError(f"verify_summand needs amax >= 2, got {amax}")
    _require_cache(cache, 2 * amax, "verify_summand")
    started = time.perf_counter()
    exceptions = []
    for failures in _fan_out(cache, _summand_instance, range(2, amax + 1), jobs):
        exceptions.extend(failures)
    return _finish(
        "summand",
        f"1 <= k < b <= a <= {amax}, x = 2",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
    )


def _prop7_instance(cache: PolyCache, n: int) -> Tuple[int, bool, Fraction]:
    threshold = 3 if n == 1 else 2
    certificate = positive_beyond(prop7_poly(cache, n), threshold)
    return threshold, certificate.holds_beyond, certificate.value_at_threshold


def verify_prop7_derivative_chain(
    cache: PolyCache, nmax: int = 50, jobs: int = 1
) -> VerificationReport:
    """Certify x P_n(x) - P_{n+1}(x) > 0 beyond x = 2 for 2 <= n <= nmax, beyond x = 3 for n = 1.

    Entries are (n, threshold). The polynomial vanishes at the threshold for n = 1, 2, 3.
    """
    if nmax < 1:
        raise ValueError(f"verify_prop7_derivative_chain needs nmax >= 1, got {nmax}")
    _require_cache(cache, nmax + 1, "verify_prop7_derivative_chain")
    started = time.perf_counter()
    exceptions, equalities = [], []
    for n, (threshold, holds, value) in zip(
        range(1, nmax + 1), _fan_out(cache, _prop7_instance, range(1, nmax + 1), jobs)
    ):
        if not holds or value < 0:
            exceptions.append((n, threshold))
        elif value == 0:
            equalities.append((n, threshold))
    return _finish(
        "prop7",
        f"1 <= n <= {nmax}, x > 2 (x > 3 for n = 1)",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
        equalities,
        expected_equalities=frozenset(e for e in PROP7_EQUALITIES if e[0] <= nmax),
    )


def verify_eq_n1(cache: PolyCache, nmax: int = 86) -> VerificationReport:
    """P_n(2) >= (13/4)(1 + ln 2n) for 1 <= n <= nmax; n = 1 and n = 2 fail."""
    if nmax < 1:
        raise ValueError(f"verify_eq_n1 needs nmax >= 1, got {nmax}")
    _require_cache(cache, nmax, "verify_eq_n1")
    started = time.perf_counter()
    exceptions = [(n,) for n in range(1, nmax + 1) if not eq_n1_holds(cache, n)]
    return _finish(
        "eq-n1",
        f"1 <= n <= {nmax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        expected_exceptions=frozenset(e for e in EQ_N1_EXCEPTIONS if e[0] <= nmax),
    )


def verify_corollary8(cache: PolyCache, nmax: int = 100) -> VerificationReport:
    """P_n(x) > 1 + ln 2n at x = 2 and at x = 1 for 2 <= n <= nmax.

    P_n has positive coefficients, so the value at x = 2 bounds every x > 2.
    Entries are (n, x); the only expected exception is (2, 1).
    """
    if nmax < 2:
        raise ValueError(f"verify_corollary8 needs nmax >= 2, got {nmax}")
    _require_cache(cache, nmax, "verify_corollary8")
    started = time.perf_counter()
    exceptions = [
        (n, x) for n in range(2, nmax + 1) for x in (1, 2) if not hilfs_holds(cache, n, x)
    ]
    return _finish(
        "corollary8",
        f"2 <= n <= {nmax}, x in {{1, 2}}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        expected_exceptions=COROLLARY8_EXCEPTIONS,
    )


def verify_bo2_sandwich(mmax: int = 1000) -> VerificationReport:
    """lower(m) < p(m) < upper(m) for 2 <= m <= mmax, with p(m) from the product oracle."""
    if mmax < 2:
        raise ValueError(f"verify_bo2_sandwich needs mmax >= 2, got {mmax}")
    started = time.perf_counter()
    p = partition_numbers(mmax)
    exceptions = [(m,) for m in range(2, mmax + 1) if not bo2_sandwich_holds(m, p[m])]
    return _finish(
        "bo2-sandwich",
        f"2 <= m <= {mmax}",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
    )


def verify_growth_threshold(amax: int = 1000) -> VerificationReport:
    """The growth inequality fails exactly for 2 <= a <= 33 within 2 <= a <= amax."""
    if amax < GROWTH_THRESHOLD:
        raise ValueError(f"verify_growth_threshold needs amax >= {GROWTH_THRESHOLD}, got {amax}")
    started = time.perf_counter()
    exceptions = [(a,) for a in range(2, amax + 1) if not wachstum_holds(a)]
    # Smallest a from which the inequality holds through amax.
    first_from = max((e[0] for e in exceptions), default=1) + 1
    witnesses = [("threshold", str(first_from))] if first_from <= amax else []
    return _finish(
        "growth-threshold",
        f"2 <= a <= {amax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        expected_exceptions=frozenset((a,) for a in range(2, GROWTH_THRESHOLD)),
        witnesses=witnesses,
    )


def verify_sigma_bound(mmax: int = 100_000) -> VerificationReport:
    """sigma(m) <= m (1 + ln m) for 1 <= m <= mmax; equality only at m = 1."""
    if mmax < 1:
        raise ValueError(f"verify_sigma_bound needs mmax >= 1, got {mmax}")
    started = time.perf_counter()
    exceptions, equalities = [], []
    for m in range(1, mmax + 1):
        sign = sigma_bound_sign(m)
        if sign < 0:
            exceptions.append((m,))
        elif sign == 0:
            equalities.append((m,))
    return _finish(
        "sigma-bound",
        f"1 <= m <= {mmax}",
        ClaimKind.CERTIFICATE,
        started,
        exceptions,
        equalities,
        expected_equalities=frozenset({(1,)}),
    )


def _pa1_instance(cache: PolyCache, a: int) -> Tuple[int, int, int]:
    census = root_census(bo_poly(cache, a, 1))
    return census.positive, census.real, census.distinct


def observe_pa1(cache: PolyCache, amax: int = 100, jobs: int = 1) -> VerificationReport:
    """Check that P_{a,1} has one positive root and only real roots, 1 <= a <= amax.

    Entries are (a,). Witnesses for any exception are
    ``(a, positive roots, real roots, distinct roots)``.
    """
    if amax < 1:
        raise ValueError(f"observe_pa1 needs amax >= 1, got {amax}")
    _require_cache(cache, amax + 1, "observe_pa1")
    started = time.perf_counter()
    exceptions, witnesses = [], []
    indices = range(1, amax + 1)
    outcomes = _fan_out(cache, _pa1_instance, indices, jobs)
    for a, (positive, real, distinct) in zip(indices, outcomes):
        if positive != 1 or real != distinct:
            exceptions.append((a,))
            witnesses.append((str(a), str(positive), str(real), str(distinct)))
    return _finish(
        "pa1-observation",
        f"1 <= a <= {amax}",
        ClaimKind.CATALOG,
        started,
        exceptions,
        witnesses=witnesses,
    )


def run_suite(
    suite: Suite, cache: PolyCache, sizes: SweepSizes, jobs: int = 1
) -> List[VerificationReport]:
    """Run one suite (or every suite for ``Suite.ALL``) in a fixed order."""
    reports: List[VerificationReport] = []
    for part in suite.expand():
        if part is Suite.BO:
            reports.append(verify_bo_classical(cache, sizes.bo_nmax))
        elif part is Suite.CFT:
            reports.append(verify_cft(cache, sizes.cft_kmax, sizes.cft_nmax))
        elif part is Suite.MONOTONE:
            reports.append(verify_monotonicity(cache, sizes.monotone_nmax, jobs))
        elif part is Suite.PRIME_REMARK:
            reports.append(verify_prime_remark(cache, sizes.prime_nmax, jobs))
        elif part is Suite.MAIN:
            reports.append(verify_main_theorem(cache, sizes.main_nmax, jobs))
        elif part is Suite.SUMMAND:
            reports.append(verify_summand(cache, sizes.summand_amax, jobs))
        elif part is Suite.PROP7:
            reports.append(verify_prop7_derivative_chain(cache, sizes.prop7_nmax, jobs))
        elif part is Suite.BOUNDS:
            reports.extend(
                [
                    verify_bo2_sandwich(sizes.bo2_mmax),
                    verify_growth_threshold(sizes.growth_amax),
                    verify_eq_n1(cache, sizes.eq_n1_nmax),
                    verify_corollary8(cache, sizes.corollary_nmax),
                    verify_sigma_bound(sizes.sigma_mmax),
                ]
            )
        elif part is Suite.PA1:
            reports.append(observe_pa1(cache, sizes.pa1_amax, jobs))
    return reports
