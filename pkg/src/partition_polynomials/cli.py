"""Command-line front end: ``partpoly <command> [options]``.

Exit codes: 0 on success (every selected suite verified), 1 when a claim fails or
cannot be decided, 2 on usage, configuration or I/O errors.
"""

import argparse
import csv
import dataclasses
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mpmath import mp

from . import __version__
from .bounds import bo2_bounds, bo2_sandwich_holds, lehmer_error_bound, mu
from .config import (
    Command,
    ConfigPresets,
    OutputFormat,
    RootFamily,
    RunConfig,
    Suite,
    apply_environment_overrides,
)
from .exactnum import Poly, format_decimal
from .partpoly import PolyCache, bo_poly, build_cache, delta, partition_numbers, prop7_poly
from .roots import all_roots_float, isolate_real_roots, largest_positive_real_root
from .verify import VerificationReport, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

TABLE1_PLACES = 2

# Float roots of Delta_n with real part at or below this are treated as the root 0.
FIGURE1_ZERO_TOLERANCE = 1e-9

_DEFAULT_FORMATS = {
    Command.TABLE1: OutputFormat.CSV,
    Command.FIGURE1: OutputFormat.CSV,
    Command.FIGURE2: OutputFormat.CSV,
    Command.VERIFY: OutputFormat.JSON,
}

# Which sweep size each verify option sets, per suite; `all` sets every one it covers.
_NMAX_FIELDS = {
    Suite.BO: "bo_nmax",
    Suite.CFT: "cft_nmax",
    Suite.MONOTONE: "monotone_nmax",
    Suite.PRIME_REMARK: "prime_nmax",
    Suite.MAIN: "main_nmax",
    Suite.PROP7: "prop7_nmax",
}
_AMAX_FIELDS = {Suite.SUMMAND: "summand_amax", Suite.PA1: "pa1_amax"}
_KMAX_FIELDS = {Suite.CFT: "cft_kmax"}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, help="cache size (default: inferred)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], help="output format")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--precision", type=int, help="decimal digits for approximations")
    common.add_argument("--jobs", type=int, help="worker processes for verification sweeps")
    common.add_argument(
        "--preset", choices=ConfigPresets.list(), default="desk", help="sweep size preset"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for details"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="partpoly",
        description="Exact partition polynomials, root tables and certified inequality sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    poly = commands.add_parser("poly", parents=[common], help="print P_n")
    poly.add_argument("--n", type=int, required=True)

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate P_n(x) exactly")
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--x", required=True, help="rational, e.g. 5/2 or 2.5")

    roots = commands.add_parser("roots", parents=[common], help="isolate real roots")
    roots.add_argument("--family", choices=[f.value for f in RootFamily], required=True)
    roots.add_argument("--n", type=int)
    roots.add_argument("--a", type=int)
    roots.add_argument("--b", type=int)
    roots.add_argument("--eps", help="interval width (default 1e-12)")

    table1 = commands.add_parser("table1", parents=[common], help="positive roots of P_{a,b}")
    table1.add_argument("--amax", type=int, default=10)
    table1.add_argument("--bmax", type=int, default=10)

    figure1 = commands.add_parser("figure1", parents=[common], help="complex roots of Delta_n")
    figure1.add_argument("--nmax", type=int, default=30)

    figure2 = commands.add_parser("figure2", parents=[common], help="positive root of P_{a,1}")
    figure2.add_argument("--amax", type=int, default=100)

    bounds = commands.add_parser("bounds", parents=[common], help="Rademacher N=1 bounds")
    bounds.add_argument("--m", type=int, required=True)
    bounds.add_argument("--lehmer", type=int, metavar="N", help="also print Lehmer's bound")

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=[s.value for s in Suite])
    verify.add_argument("--nmax", type=int)
    verify.add_argument("--amax", type=int)
    verify.add_argument("--kmax", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Translate parsed arguments into a validated RunConfig.

    Environment variables are applied first; explicit flags take precedence.

    Raises:
        ValueError: On invalid values or combinations
    """
    command = Command(args.command)
    skip = {"command", "max_n", "format", "out", "precision", "jobs", "preset", "verbose"}
    parameters = {k: v for k, v in vars(args).items() if k not in skip and v is not None}

    sizes = ConfigPresets.get(args.preset)
    if command is Command.VERIFY:
        suite = Suite(parameters["suite"])
        overrides = {}
        for option, fields in (
            ("nmax", _NMAX_FIELDS),
            ("amax", _AMAX_FIELDS),
            ("kmax", _KMAX_FIELDS),
        ):
            value = parameters.pop(option, None)
            if value is None:
                continue
            targets = [fields[part] for part in suite.expand() if part in fields]
            if not targets:
                raise ValueError(f"--{option} does not apply to suite '{suite.value}'")
            overrides.update(dict.fromkeys(targets, value))
        sizes = ConfigPresets.custom(args.preset, **overrides)

    output_format = args.format or _DEFAULT_FORMATS.get(command, OutputFormat.TEXT)
    config = apply_environment_overrides(
        RunConfig(
            command=command,
            parameters=parameters,
            output_format=output_format,
            output_path=args.out,
            sizes=sizes,
        )
    )
    flags = {"max_n": args.max_n, "precision": args.precision, "jobs": args.jobs}
    explicit = {k: v for k, v in flags.items() if v is not None}
    if explicit:
        config = dataclasses.replace(config, parameters=dict(config.parameters), **explicit)
    return config


def _render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _render_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def table1_rows(
    cache: PolyCache, amax: int, bmax: int
) -> List[Tuple[int, int, Optional[Fraction]]]:
    """Largest positive real root of P_{a,b} for every 1 <= a <= amax, 1 <= b <= bmax."""
    rows = []
    for a in range(1, amax + 1):
        for b in range(1, bmax + 1):
            rows.append((a, b, largest_positive_real_root(bo_poly(cache, a, b))))
    return rows


def cmd_poly(cache: PolyCache, config: RunConfig) -> str:
    n = config.parameters["n"]
    p = cache.poly(n)
    if config.output_format is OutputFormat.CSV:
        return _render_csv(["degree", "coefficient"], [(i, str(c)) for i, c in enumerate(p.coeffs)])
    if config.output_format is OutputFormat.JSON:
        return _render_json(
            {"n": n, "coefficients": [str(c) for c in p.coeffs], "scaled": list(cache.scaled[n])}
        )
    return f"P_{n}(x) = {p}\n"


def cmd_eval(cache: PolyCache, config: RunConfig) -> str:
    n = config.parameters["n"]
    x = config.parameters["x"]
    value = cache.value(n, x)
    approx = format_decimal(value, config.precision)
    if config.output_format is OutputFormat.CSV:
        return _render_csv(["n", "x", "value", "approx"], [(n, str(x), str(value), approx)])
    if config.output_format is OutputFormat.JSON:
        return _render_json({"n": n, "x": str(x), "value": str(value), "approx": approx})
    return f"P_{n}({x}) = {value} ~ {approx}\n"


def _family_poly(cache: PolyCache, config: RunConfig) -> Tuple[str, Poly]:
    p = config.parameters
    family = p["family"]
    if family is RootFamily.BO:
        return f"P_{{{p['a']},{p['b']}}}", bo_poly(cache, p["a"], p["b"])
    if family is RootFamily.PROP7:
        return f"x*P_{p['n']} - P_{p['n'] + 1}", prop7_poly(cache, p["n"])
    return f"Delta_{p['n']}", delta(cache, p["n"])


def cmd_roots(cache: PolyCache, config: RunConfig) -> str:
    label, p = _family_poly(cache, config)
    report = isolate_real_roots(p, eps=config.parameters["eps"])
    places = config.precision
    rows = [
        ("exact", str(r), str(r), format_decimal(r, places)) for r in report.exact_rational_roots
    ]
    rows += [
        ("interval", str(iv.lo), str(iv.hi), format_decimal(iv.midpoint, places))
        for iv in report.intervals
    ]
    rows.sort(key=lambda row: Fraction(row[1]))
    if config.output_format is OutputFormat.CSV:
        return _render_csv(["kind", "lo", "hi", "approx"], rows)
    if config.output_format is OutputFormat.JSON:
        return _render_json(
            {
                "polynomial": label,
                "exact": [str(r) for r in report.exact_rational_roots],
                "intervals": [[str(iv.lo), str(iv.hi)] for iv in report.intervals],
                "precision": str(report.precision),
            }
        )
    lines = [f"Real roots of {label}: {report.count}"]
    for kind, lo, hi, approx in rows:
        lines.append(f"  {approx}" if kind == "exact" else f"  {approx}  in ({lo}, {hi})")
    return "\n".join(lines) + "\n"


def cmd_table1(cache: PolyCache, config: RunConfig) -> str:
    amax, bmax = config.parameters["amax"], config.parameters["bmax"]
    rows = [
        (a, b, "NA" if root is None else format_decimal(root, TABLE1_PLACES))
        for a, b, root in table1_rows(cache, amax, bmax)
    ]
    if config.output_format is OutputFormat.JSON:
        return _render_json([{"a": a, "b": b, "root": root} for a, b, root in rows])
    if config.output_format is OutputFormat.TEXT:
        by_pair = {(a, b): root for a, b, root in rows}
        lines = ["a\\b " + " ".join(f"{b:>5}" for b in range(1, bmax + 1))]
        for a in range(1, amax + 1):
            lines.append(f"{a:>3} " + " ".join(f"{by_pair[a, b]:>5}" for b in range(1, bmax + 1)))
        return "\n".join(lines) + "\n"
    return _render_csv(["a", "b", "root"], rows)


def cmd_figure1(cache: PolyCache, config: RunConfig) -> str:
    places = config.precision
    rows = []
    for n in range(1, config.parameters["nmax"] + 1):
        for root in all_roots_float(delta(cache, n)):
            if root.value.real <= FIGURE1_ZERO_TOLERANCE:
                continue
            rows.append(
                (
                    n,
                    f"{root.value.real:.{places}f}",
                    f"{root.value.imag:.{places}f}",
                    f"{root.residual:.3e}",
                    "true" if root.converged else "false",
                )
            )
    header = ["n", "re", "im", "residual", "converged"]
    if config.output_format is OutputFormat.JSON:
        return _render_json([dict(zip(header, row)) for row in rows])
    return _render_csv(header, rows)


def cmd_figure2(cache: PolyCache, config: RunConfig) -> str:
    places = config.precision
    rows = []
    for a in range(1, config.parameters["amax"] + 1):
        root = largest_positive_real_root(bo_poly(cache, a, 1))
        rows.append((a, "NA" if root is None else format_decimal(root, places)))
    if config.output_format is OutputFormat.JSON:
        return _render_json([{"a": a, "root": root} for a, root in rows])
    return _render_csv(["a", "root"], rows)


def cmd_bounds(config: RunConfig) -> str:
    m = config.parameters["m"]
    lehmer = config.parameters.get("lehmer")
    digits = max(config.precision, 1)
    pair = bo2_bounds(m)
    p_m = partition_numbers(m)[m]
    fields: Dict[str, str] = {
        "m": str(m),
        "mu": mp.nstr(mu(m), digits),
        "lower": mp.nstr(pair.lower, digits),
        "p": str(p_m),
        "upper": mp.nstr(pair.upper, digits),
        "sandwich": "true" if bo2_sandwich_holds(m, p_m) else "false",
    }
    if lehmer is not None:
        fields["lehmer_n"] = str(lehmer)
        fields["lehmer_bound"] = mp.nstr(lehmer_error_bound(m, lehmer), digits)
    if config.output_format is OutputFormat.CSV:
        return _render_csv(list(fields), [list(fields.values())])
    if config.output_format is OutputFormat.JSON:
        return _render_json(fields)
    return "".join(f"{key}: {value}\n" for key, value in fields.items())


def cmd_verify(cache: PolyCache, config: RunConfig) -> Tuple[str, List[VerificationReport]]:
    reports = run_suite(config.parameters["suite"], cache, config.sizes, config.jobs)
    if config.output_format is OutputFormat.JSON:
        return _render_json([r.to_dict() for r in reports]), reports
    if config.output_format is OutputFormat.CSV:
        rows = [
            (
                r.claim_id,
                r.domain_descr,
                r.status.value,
                len(r.exceptions),
                len(r.equalities),
                r.elapsed_ms,
            )
            for r in reports
        ]
        header = ["claim", "domain", "status", "exceptions", "equalities", "elapsed_ms"]
        return _render_csv(header, rows), reports
    lines = []
    for r in reports:
        lines.append(f"{r.claim_id}: {r.status.value} ({r.domain_descr}, {r.elapsed_ms} ms)")
        if r.unexpected:
            lines.append(f"  unexpected: {list(r.unexpected)}")
        if r.missing:
            lines.append(f"  missing: {list(r.missing)}")
    return "\n".join(lines) + "\n", reports


def run(config: RunConfig) -> Tuple[str, int]:
    """Execute one configured command.

    Returns:
        The rendered output and the exit code
    """
    if config.command is Command.BOUNDS:
        return cmd_bounds(config), EXIT_OK
    cache = build_cache(config.required_max_n())
    if config.command is Command.VERIFY:
        text, reports = cmd_verify(cache, config)
        failed = [r.claim_id for r in reports if not r.verified]
        if failed:
            logger.warning("Not verified: %s", ", ".join(failed))
        return text, EXIT_FAILURE if failed else EXIT_OK
    handlers = {
        Command.POLY: cmd_poly,
        Command.EVAL: cmd_eval,
        Command.ROOTS: cmd_roots,
        Command.TABLE1: cmd_table1,
        Command.FIGURE1: cmd_figure1,
        Command.FIGURE2: cmd_figure2,
    }
    return handlers[config.command](cache, config), EXIT_OK


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    _configure_logging(args.verbose)

    try:
        config = config_from_args(args)
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print(f"partpoly: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        text, code = run(config)
    except (ValueError, IndexError) as e:
        print(f"partpoly: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        logger.error("Undecided comparison: %s", e)
        return EXIT_FAILURE

    try:
        _write_output(text, config.output_path)
    except OSError as e:
        print(f"partpoly: cannot write '{config.output_path}': {e}", file=sys.stderr)
        return EXIT_USAGE
    return code
