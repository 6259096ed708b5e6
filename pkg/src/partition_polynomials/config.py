"""Configuration classes for partition-polynomial runs."""

import dataclasses
import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from .exactnum import to_rational
from .roots import DEFAULT_ROOT_EPS

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 12


class Command(str, Enum):
    """CLI subcommands."""

    POLY = "poly"
    EVAL = "eval"
    ROOTS = "roots"
    TABLE1 = "table1"
    FIGURE1 = "figure1"
    FIGURE2 = "figure2"
    BOUNDS = "bounds"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


class RootFamily(str, Enum):
    """Polynomial families accepted by the ``roots`` command.

    DELTA: Delta_n = P_{n+1} - P_n
    BO: P_{a,b} = P_a P_b - P_{a+b}
    PROP7: x P_n - P_{n+1}
    """

    DELTA = "delta"
    BO = "bo"
    PROP7 = "prop7"


class Suite(str, Enum):
    """Verification suites.

    ALL runs every suite except PA1, which records an observation rather than a
    proven claim.
    """

    BO = "bo"
    CFT = "cft"
    MONOTONE = "monotone"
    PRIME_REMARK = "prime-remark"
    MAIN = "main"
    SUMMAND = "summand"
    PROP7 = "prop7"
    BOUNDS = "bounds"
    PA1 = "pa1"
    ALL = "all"

    def expand(self) -> List["Suite"]:
        if self is Suite.ALL:
            return [s for s in Suite if s not in (Suite.ALL, Suite.PA1)]
        return [self]


@dataclass
class SweepSizes:
    """Upper ends of every verification sweep.

    Each field is the largest index (n, a, k or m) a suite visits.
    """

    bo_nmax: int = 50
    cft_kmax: int = 5
    cft_nmax: int = 50
    main_nmax: int = 50
    monotone_nmax: int = 100
    prime_nmax: int = 100
    summand_amax: int = 33
    prop7_nmax: int = 50
    eq_n1_nmax: int = 86
    corollary_nmax: int = 100
    bo2_mmax: int = 1000
    growth_amax: int = 1000
    sigma_mmax: int = 100_000
    pa1_amax: int = 100

    def __post_init__(self):
        """Validate every size against the smallest range its claim needs."""
        minimums = {
            "bo_nmax": 10,
            "cft_kmax": 4,
            "cft_nmax": 8,
            "main_nmax": 3,
            "monotone_nmax": 1,
            "prime_nmax": 1,
            "summand_amax": 2,
            "prop7_nmax": 1,
            "eq_n1_nmax": 1,
            "corollary_nmax": 2,
            "bo2_mmax": 2,
            "growth_amax": 34,
            "sigma_mmax": 1,
            "pa1_amax": 1,
        }
        for name, minimum in minimums.items():
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            if value < minimum:
                raise ValueError(f"{name} must be >= {minimum}, got {value}")

    def required_max_n(self, suite: Suite) -> int:
        """Largest P_n index the given suite reads from the cache (0 if none)."""
        needs = {
            Suite.BO: self.bo_nmax,
            Suite.CFT: self.cft_nmax,
            Suite.MONOTONE: self.monotone_nmax + 1,
            Suite.PRIME_REMARK: self.prime_nmax + 1,
            Suite.MAIN: self.main_nmax,
            Suite.SUMMAND: 2 * self.summand_amax,
            Suite.PROP7: self.prop7_nmax + 1,
            Suite.BOUNDS: max(self.eq_n1_nmax, self.corollary_nmax),
            Suite.PA1: self.pa1_amax + 1,
        }
        return max(needs[s] for s in suite.expand())


# Parameters each command must receive, by name.
_REQUIRED_PARAMETERS = {
    Command.POLY: ("n",),
    Command.EVAL: ("n", "x"),
    Command.ROOTS: ("family",),
    Command.TABLE1: ("amax", "bmax"),
    Command.FIGURE1: ("nmax",),
    Command.FIGURE2: ("amax",),
    Command.BOUNDS: ("m",),
    Command.VERIFY: ("suite",),
}

# Integer parameters and their smallest allowed value.
_INTEGER_MINIMUMS = {
    "n": 0,
    "a": 1,
    "b": 1,
    "amax": 1,
    "bmax": 1,
    "nmax": 1,
    "m": 1,
    "lehmer": 1,
}


@dataclass
class RunConfig:
    """Everything one CLI invocation needs.

    Attributes:
        command: Subcommand to run
        parameters: Command-specific values (integers, rational strings, enums)
        output_format: text, csv or json
        output_path: File to write, or None for stdout
        precision: Decimal digits for printed approximations
        max_n: Explicit cache size, or None to infer it from the command
        jobs: Worker processes for verification sweeps
        sizes: Sweep sizes for the ``verify`` command
    """

    command: Command
    parameters: Dict[str, Any] = field(default_factory=dict)
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[str] = None
    precision: int = DEFAULT_PRECISION
    max_n: Optional[int] = None
    jobs: int = 1
    sizes: SweepSizes = field(default_factory=SweepSizes)

    def __post_init__(self):
        """Validate configuration values before any computation."""
        self.command = Command(self.command)
        self.output_format = OutputFormat(self.output_format)
        if not 0 <= self.precision <= 1000:
            raise ValueError(f"precision must be between 0 and 1000, got {self.precision}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.max_n is not None and self.max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {self.max_n}")

        missing = [p for p in _REQUIRED_PARAMETERS[self.command] if p not in self.parameters]
        if missing:
            raise ValueError(f"'{self.command.value}' needs parameter(s): {', '.join(missing)}")
        for name, minimum in _INTEGER_MINIMUMS.items():
            value = self.parameters.get(name)
            if value is not None and value < minimum:
                raise ValueError(f"{name} must be >= {minimum}, got {value}")

        if self.command is Command.ROOTS:
            family = RootFamily(self.parameters["family"])
            self.parameters["family"] = family
            needed = ("a", "b") if family is RootFamily.BO else ("n",)
            absent = [p for p in needed if self.parameters.get(p) is None]
            if absent:
                raise ValueError(f"roots --family {family.value} needs --{' --'.join(absent)}")
            eps = to_rational(self.parameters.get("eps", DEFAULT_ROOT_EPS))
            if eps <= 0:
                raise ValueError(f"eps must be positive, got {eps}")
            self.parameters["eps"] = eps
        if self.command is Command.EVAL:
            self.parameters["x"] = to_rational(self.parameters["x"])
        if self.command is Command.VERIFY:
            self.parameters["suite"] = Suite(self.parameters["suite"])

        inferred = self._inferred_max_n()
        if self.max_n is not None and self.max_n < inferred:
            raise ValueError(f"max_n={self.max_n} is too small; this command needs {inferred}")

    def _inferred_max_n(self) -> int:
        p = self.parameters
        if self.command in (Command.POLY, Command.EVAL):
            return p["n"]
        if self.command is Command.ROOTS:
            if p["family"] is RootFamily.BO:
                return p["a"] + p["b"]
            return p["n"] + 1
        if self.command is Command.TABLE1:
            return p["amax"] + p["bmax"]
        if self.command in (Command.FIGURE1, Command.FIGURE2):
            return p.get("nmax", p.get("amax", 0)) + 1
        if self.command is Command.VERIFY:
            return self.sizes.required_max_n(p["suite"])
        return 0

    def required_max_n(self) -> int:
        """Cache size for this run: the explicit ``max_n`` or the inferred one."""
        return self.max_n if self.max_n is not None else self._inferred_max_n()


class ConfigPresets:
    """Pre-configured sweep sizes.

    Available Presets:
        - desk: The standard sizes, minutes on a desktop (default)
        - quick: Small smoke-test sizes, seconds
        - extended: Larger sweeps for long unattended runs

    Examples:
        >>> ConfigPresets.list()
        ['desk', 'quick', 'extended']

        >>> sizes = ConfigPresets.custom("quick", bo_nmax=30)
        >>> sizes.bo_nmax
        30
    """

    @staticmethod
    def list() -> List[str]:
        return ["desk", "quick", "extended"]

    @staticmethod
    def desk() -> SweepSizes:
        return SweepSizes()

    @staticmethod
    def quick() -> SweepSizes:
        """Small sizes that still cover every catalogued exception and equality."""
        return SweepSizes(
            bo_nmax=20,
            cft_kmax=4,
            cft_nmax=16,
            main_nmax=16,
            monotone_nmax=20,
            prime_nmax=20,
            summand_amax=10,
            prop7_nmax=16,
            eq_n1_nmax=30,
            corollary_nmax=30,
            bo2_mmax=200,
            growth_amax=100,
            sigma_mmax=2000,
            pa1_amax=20,
        )

    @staticmethod
    def extended() -> SweepSizes:
        return SweepSizes(
            bo_nmax=120,
            cft_kmax=8,
            cft_nmax=100,
            main_nmax=80,
            monotone_nmax=150,
            prime_nmax=150,
            summand_amax=50,
            prop7_nmax=100,
            eq_n1_nmax=150,
            corollary_nmax=150,
            bo2_mmax=5000,
            growth_amax=10_000,
            sigma_mmax=1_000_000,
            pa1_amax=150,
        )

    @staticmethod
    def get(preset_name: str) -> SweepSizes:
        """Get preset sweep sizes by name.

        Raises:
            ValueError: If preset name is unknown
        """
        preset_map = {
            "desk": ConfigPresets.desk,
            "quick": ConfigPresets.quick,
            "extended": ConfigPresets.extended,
        }
        if preset_name not in preset_map:
            available = ", ".join(ConfigPresets.list())
            raise ValueError(f"Unknown preset '{preset_name}'. Available presets: {available}")
        return preset_map[preset_name]()

    @staticmethod
    def custom(base: str = "desk", **overrides: int) -> SweepSizes:
        """Start from a preset and override individual sizes.

        Raises:
            ValueError: If the preset or a size name is unknown, or a value is out of range
        """
        sizes = ConfigPresets.get(base)
        known = {f.name for f in dataclasses.fields(SweepSizes)}
        for key in overrides:
            if key not in known:
                raise ValueError(f"Unknown sweep size '{key}'. Valid: {', '.join(sorted(known))}")
        return dataclasses.replace(sizes, **overrides)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got '{raw}'") from e


def apply_environment_overrides(config: RunConfig) -> RunConfig:
    """Apply settings from environment variables.

    Supported environment variables:
        - PARTPOLY_MAX_N: Cache size
        - PARTPOLY_JOBS: Worker processes for verification sweeps
        - PARTPOLY_PRECISION: Decimal digits for printed approximations

    Returns:
        A new RunConfig; the argument is not modified

    Raises:
        ValueError: If a variable is set to something other than an integer
    """
    overrides = {}
    for variable, attribute in (
        ("PARTPOLY_MAX_N", "max_n"),
        ("PARTPOLY_JOBS", "jobs"),
        ("PARTPOLY_PRECISION", "precision"),
    ):
        value = _env_int(variable)
        if value is not None:
            overrides[attribute] = value
            logger.debug("%s=%d from environment", attribute, value)
    if not overrides:
        return config
    return dataclasses.replace(config, parameters=dict(config.parameters), **overrides)
