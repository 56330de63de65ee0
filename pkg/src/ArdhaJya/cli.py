"""Command-line interface for ArdhaJya."""

import argparse
import json
import logging
import math
import re
import sys
from typing import Optional

from .core import (
    GEOMETRY_SUITE,
    HISTORICAL_PI,
    IDENTITY_SUITE,
    PRESETS,
    TABLE_SUITE,
    Angle,
    AngleGrid,
    ArdhaJyaError,
    Denominator,
    GeneratedTable,
    IdentityDomain,
    RecursionConfig,
    RecursionMode,
    SampledPair,
    SuiteReport,
    VerificationFailure,
    build_scene,
    central_first_derivative,
    central_second_derivative,
    compare_with_reference,
    convergence_study,
    generate_half_angle_table,
    generate_recursion_table,
    half_angle_grid,
    integrate_shm,
    reference_cos,
    reference_sin,
    run_suite,
    sweep_verify,
    verify_similarity,
)
from .core.geometry import DEFAULT_POINT_TOLERANCE, DEFAULT_SWEEP_TOLERANCE
from .core.laws import ConfigDict
from .render import TABLE_FORMATS, export_table, oscillator_csv, scene_points_csv, sweep_csv

logger = logging.getLogger(__name__)

# "pi/48", "3*pi/96", "2 pi / 3", "pi"
_PI_EXPR = re.compile(r"^\s*(?:(\d+(?:\.\d*)?)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$", re.IGNORECASE)


def parse_angle(text: str, radians: bool = False) -> float:
    """Radians from ``text``: a multiple of pi, or a number in degrees (radians with --radians)."""
    m = _PI_EXPR.match(text)
    if m:
        factor = float(m.group(1)) if m.group(1) else 1.0
        divisor = float(m.group(2)) if m.group(2) else 1.0
        if divisor == 0.0:
            raise argparse.ArgumentTypeError(f"division by zero in angle {text!r}")
        return factor * math.pi / divisor
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r} (use degrees, or e.g. pi/48)") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite, got {text!r}")
    return value if radians else math.radians(value)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must not be negative, got {value}")
    return value


def finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _angle_arg(args: argparse.Namespace, name: str) -> Optional[float]:
    raw = getattr(args, name)
    return None if raw is None else parse_angle(raw, args.radians)


def build_recursion_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RecursionConfig:
    if args.preset:
        if args.epsilon is not None or args.count is not None:
            parser.error("--preset fixes the grid; drop --epsilon/--count")
        config = RecursionConfig.preset(args.preset)
        if args.mode == RecursionMode.EXACT.value:
            config = RecursionConfig.exact(config.grid)
        return config
    if args.epsilon is None or args.count is None:
        parser.error("give --preset, or both --epsilon and --count")
    try:
        epsilon = parse_angle(args.epsilon, args.radians)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    grid = AngleGrid(Angle(epsilon), args.count)
    if (args.mode or RecursionMode.HISTORICAL.value) == RecursionMode.HISTORICAL.value:
        return RecursionConfig.historical(grid, args.pi)
    return RecursionConfig.exact(grid)


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Print a sine table generated by the second-difference recursion."""
    config = build_recursion_config(args, parser)
    table, _ = generate_recursion_table(config)
    sys.stdout.write(export_table(table, args.format, wide=args.wide))
    return 0


def cmd_halfangle(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Print a sine table built by repeated halving."""
    table = generate_half_angle_table(half_angle_grid(args.k, args.count))
    sys.stdout.write(export_table(table, args.format, wide=args.wide))
    return 0


def cmd_compare(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Compare a generated table with the reference sine."""
    config = build_recursion_config(args, parser)
    table, _ = generate_recursion_table(config)
    report = compare_with_reference(table)
    if args.format == "json":
        payload = {
            "mode": report.mode,
            "passed": report.ok,
            "rule": report.rule,
            "max_abs_error": report.max_abs_error,
            "max_error_minutes": report.max_error_minutes,
            "rsine_exceedances": report.rsine_exceedances,
            "published_max_deviation": report.published_max_deviation,
            "warnings": list(report.warnings),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _rounded(value: float, digits: Optional[int]) -> float:
    return value if digits is None else round(value, digits)


def cmd_diffcalc(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Central-difference derivative estimates of sine next to their exact values."""
    theta = parse_angle(args.theta, args.radians)
    epsilon = parse_angle(args.epsilon, args.radians)
    if epsilon <= 0.0:
        parser.error("--epsilon must be positive")
    variant = Denominator.TEXTBOOK if args.textbook_denominator else Denominator.IDENTITY
    f_plus = args.f_plus if args.f_plus is not None else _rounded(reference_sin(theta + epsilon), args.sample_digits)
    f_minus = args.f_minus if args.f_minus is not None else _rounded(reference_sin(theta - epsilon), args.sample_digits)
    f_center = args.f_center if args.f_center is not None else _rounded(reference_sin(theta), args.sample_digits)

    pair = SampledPair(Angle(theta), Angle(epsilon), f_plus, f_minus)
    first = central_first_derivative(pair, variant)
    second = central_second_derivative(f_plus, f_center, f_minus, epsilon, variant)
    d = args.digits
    print(f"theta = {math.degrees(theta):.4f} deg, epsilon = {math.degrees(epsilon):.4f} deg, denominator = {variant.value}")
    print(f"samples: f(theta+eps) = {f_plus:.{max(d, 4)}f}, f(theta) = {f_center:.{max(d, 4)}f}, f(theta-eps) = {f_minus:.{max(d, 4)}f}")
    print(f"first derivative estimate : {first:.{d}f}")
    print(f"reference cos(theta)      : {reference_cos(theta):.{d}f}")
    print(f"second derivative estimate: {second:.{d}f}")
    print(f"reference -sin(theta)     : {-reference_sin(theta):.{d}f}")
    if args.study:
        def error_at(h: float) -> float:
            p = SampledPair.of_sine(theta, h)
            return central_first_derivative(p, variant) - reference_cos(theta)

        print("convergence of the first-derivative estimate:")
        print(convergence_study(error_at, epsilon, levels=args.study).to_text())
    return 0


def cmd_shm(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Oscillator y'' = -omega^2 y by the second-difference scheme, as CSV."""
    wh = args.omega * args.step
    if args.start == "cos":
        y0, y1 = 1.0, math.cos(wh)
    else:
        y0, y1 = 0.0, math.sin(wh)
    if args.y0 is not None:
        y0 = args.y0
    if args.y1 is not None:
        y1 = args.y1
    run = integrate_shm(args.omega, args.step, args.steps, y0, y1)
    sys.stdout.write(oscillator_csv(run))
    return 0


def cmd_verify_geometry(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Check the similar-triangle construction at one (theta, phi) or over a sweep."""
    if args.sweep:
        tol = DEFAULT_SWEEP_TOLERANCE if args.tol is None else args.tol
        summary = sweep_verify(args.sweep[0], args.sweep[1], tol)
        if args.format == "csv":
            sys.stdout.write(sweep_csv(summary))
        else:
            print(summary.to_text())
        return 0 if summary.ok else 1

    theta = _angle_arg(args, "theta")
    phi = _angle_arg(args, "phi")
    scene = build_scene(math.radians(50.0) if theta is None else theta, math.radians(10.0) if phi is None else phi)
    if args.dump_points:
        sys.stdout.write(scene_points_csv(scene))
        return 0
    tol = DEFAULT_POINT_TOLERANCE if args.tol is None else args.tol
    try:
        report = verify_similarity(scene, tol)
    except VerificationFailure as failure:
        print(failure.report.to_text())
        print(f"FAIL: {failure}")
        return 1
    print(report.to_text())
    print("OK")
    return 0


def cmd_laws(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    """Run a law suite."""
    config: ConfigDict = {"samples": args.samples, "seed": args.seed}
    reports: dict[str, SuiteReport]
    if args.suite == "identities":
        report = run_suite(IdentityDomain(seed=args.seed, samples=args.samples), IDENTITY_SUITE, config=config)
        reports = {"random pairs": report}
    elif args.suite == "table":
        reports = {}
        for name, cfg in (
            ("aryabhata", RecursionConfig.preset("aryabhata")),
            ("exercise1", RecursionConfig.preset("exercise1")),
            ("exact pi/48", RecursionConfig.exact(AngleGrid.quarter(48))),
            ("exact pi/96", RecursionConfig.exact(AngleGrid.quarter(96))),
        ):
            table, series = generate_recursion_table(cfg)
            reports[name] = run_suite(GeneratedTable(table, series), TABLE_SUITE)
    else:
        reports = {}
        for t, p in ((50.0, 10.0), (60.0, 15.0), (30.0, 5.0)):
            reports[f"theta={t:g}, phi={p:g}"] = run_suite(build_scene(math.radians(t), math.radians(p)), GEOMETRY_SUITE)

    all_passed = all(r.ok for r in reports.values())
    if args.format == "json":
        output = {
            "suite": args.suite,
            "passed": all_passed,
            "results": {
                name: {
                    "passed": r.ok,
                    "total_laws": len(r.results),
                    "failed_laws": [lr.law for lr in r.results if not lr.passed],
                    "violations": sum(len(lr.violations) for lr in r.results),
                }
                for name, r in reports.items()
            },
        }
        print(json.dumps(output, indent=2))
    else:
        for name, r in reports.items():
            print(f"[{name}]")
            print(r.to_text())
        print("Overall: " + ("ALL LAWS PASSED" if all_passed else "SOME LAWS FAILED"))
    return 0 if all_passed else 1


def _add_table_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", choices=sorted(PRESETS), help="Named grid: aryabhata (pi/48, 24 nodes) or exercise1 (pi/80, 40 nodes)")
    p.add_argument("--epsilon", help="Grid step in degrees (or radians with --radians, or e.g. pi/48)")
    p.add_argument("--count", type=positive_int, help="Number of nodes N")
    p.add_argument("--mode", choices=[m.value for m in RecursionMode], help="historical (default) or exact")
    p.add_argument("--pi", type=finite_float, default=HISTORICAL_PI, help="Value of pi in historical mode (default: 3.1416)")
    p.add_argument("--radians", action="store_true", help="Read plain angle numbers as radians")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ardhajya",
        description="ArdhaJya - Aryabhata's sine table by second differences",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr (-v info, -vv debug)")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    table_parser = subparsers.add_parser("table", help="Generate a sine table by the recursion")
    _add_table_options(table_parser)
    table_parser.add_argument("--format", choices=TABLE_FORMATS, default="csv", help="Output format (default: csv)")
    table_parser.add_argument("--wide", action="store_true", help="Markdown only: add degrees and versine columns")

    half_parser = subparsers.add_parser("halfangle", help="Generate a sine table by halving from 30 and 90 degrees")
    half_parser.add_argument("--k", type=positive_int, required=True, help="Halvings (1 to 10): grid step is pi/(3*2^k)")
    half_parser.add_argument("--count", type=positive_int, help="Nodes to print (default: up to 90 degrees)")
    half_parser.add_argument("--format", choices=TABLE_FORMATS, default="csv", help="Output format (default: csv)")
    half_parser.add_argument("--wide", action="store_true", help="Markdown only: add degrees and versine columns")

    compare_parser = subparsers.add_parser("compare", help="Compare a recursion table with the reference sine")
    _add_table_options(compare_parser)
    compare_parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format (default: text)")

    diff_parser = subparsers.add_parser("diffcalc", help="Central-difference derivatives of sine")
    diff_parser.add_argument("--theta", required=True, help="Centre angle (degrees unless --radians)")
    diff_parser.add_argument("--epsilon", required=True, help="Half-width (degrees unless --radians)")
    diff_parser.add_argument("--textbook-denominator", action="store_true", help="Divide by 2*eps (and eps^2) instead of 2*sin(eps)")
    diff_parser.add_argument("--radians", action="store_true", help="Read plain angle numbers as radians")
    diff_parser.add_argument("--f-plus", type=finite_float, help="Use this value for f(theta+eps)")
    diff_parser.add_argument("--f-minus", type=finite_float, help="Use this value for f(theta-eps)")
    diff_parser.add_argument("--f-center", type=finite_float, help="Use this value for f(theta)")
    diff_parser.add_argument("--sample-digits", type=non_negative_int, help="Round sampled sines to this many decimals")
    diff_parser.add_argument("--digits", type=non_negative_int, default=4, help="Decimals printed (default: 4)")
    diff_parser.add_argument("--study", type=positive_int, metavar="LEVELS", help="Also print a step-halving convergence study")

    shm_parser = subparsers.add_parser("shm", help="Simple harmonic oscillator by second differences (CSV)")
    shm_parser.add_argument("--omega", type=finite_float, required=True, help="Angular frequency")
    shm_parser.add_argument("--step", type=finite_float, required=True, help="Time step h")
    shm_parser.add_argument("--steps", type=positive_int, required=True, help="Number of steps")
    shm_parser.add_argument("--start", choices=["sin", "cos"], default="sin", help="Start on sin(omega t) or cos(omega t)")
    shm_parser.add_argument("--y0", type=finite_float, help="Override y_0")
    shm_parser.add_argument("--y1", type=finite_float, help="Override y_1")

    geo_parser = subparsers.add_parser("verify-geometry", help="Verify the similar-triangle construction")
    geo_parser.add_argument("--theta", help="theta (degrees unless --radians; default 50)")
    geo_parser.add_argument("--phi", help="phi (degrees unless --radians; default 10)")
    geo_parser.add_argument("--sweep", nargs=2, type=positive_int, metavar=("T", "P"), help="Sweep a T x P grid of the valid region")
    geo_parser.add_argument("--tol", type=finite_float, help="Tolerance (default 1e-12, or 1e-10 for sweeps)")
    geo_parser.add_argument("--radians", action="store_true", help="Read plain angle numbers as radians")
    geo_parser.add_argument("--dump-points", action="store_true", help="Print the ten construction points as CSV")
    geo_parser.add_argument("--format", choices=["text", "csv"], default="text", help="Sweep output format")

    laws_parser = subparsers.add_parser("laws", help="Run law suites")
    laws_parser.add_argument("--suite", choices=["identities", "table", "geometry"], required=True, help="Which law suite to run")
    laws_parser.add_argument("--format", choices=["json", "text"], default="text", help="Output format (default: text)")
    laws_parser.add_argument("--samples", type=positive_int, default=10_000, help="Random samples for the identity suite")
    laws_parser.add_argument("--seed", type=int, default=0, help="Random seed for the identity suite")

    return parser


COMMANDS = {
    "table": cmd_table,
    "halfangle": cmd_halfangle,
    "compare": cmd_compare,
    "diffcalc": cmd_diffcalc,
    "shm": cmd_shm,
    "verify-geometry": cmd_verify_geometry,
    "laws": cmd_laws,
}


def main(argv: Optional[list[str]] = None) -> int:
    """Main CLI entry point: 0 on success, 1 on domain failures, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 2
        if getattr(args, "sweep", None) and (args.theta is not None or args.phi is not None):
            parser.error("--sweep cannot be combined with --theta/--phi")
        if args.verbose:
            logging.basicConfig(
                stream=sys.stderr,
                level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                format="%(levelname)s %(name)s: %(message)s",
            )
        return COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except argparse.ArgumentTypeError as exc:
        print(f"ardhajya: error: {exc}", file=sys.stderr)
        return 2
    except ArdhaJyaError as exc:
        print(f"ardhajya: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
