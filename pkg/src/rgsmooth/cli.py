"""Command-line interface: smooth CSV curves, generate test signals.

Exit codes: 0 success, 1 I/O failure, 2 invalid input or parse failure,
3 step count beyond what the curve allows (without --clamp).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .chain import Polyline
from .errors import (
    ChainTooShortError,
    InvalidInputError,
    InvalidScalingError,
    ParseError,
    TooManyStepsError,
)
from .io import CsvSchema, emit_svg, read_points, write_points
from .smoothing import smooth, smooth_to_ratio

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_TOO_MANY_STEPS = 3

_INPUT_ERRORS = (ParseError, InvalidInputError, InvalidScalingError, ChainTooShortError)


def generate_points(kind: str, n_points: int, x_max: float, sigma: float, seed: int) -> Polyline:
    """Deterministic noisy test curve on a regular x grid.

    ``sine-noise`` samples sin(x) on ``n_points`` equally spaced x values
    in [0, x_max] and adds Gaussian noise of standard deviation ``sigma``
    drawn from a PCG64 generator seeded with ``seed``.
    """
    if kind != "sine-noise":
        raise InvalidInputError(f"unknown generator kind {kind!r}")
    if n_points < 2:
        raise InvalidInputError(f"need at least 2 points, got {n_points}")
    if not x_max > 0:
        raise InvalidInputError(f"x-max must be positive, got {x_max}")
    if sigma < 0:
        raise InvalidInputError(f"sigma must be non-negative, got {sigma}")
    x = np.linspace(0.0, x_max, n_points)
    y = np.sin(x) + np.random.default_rng(seed).normal(0.0, sigma, n_points)
    return Polyline(np.column_stack([x, y]))


def _steps_arg(value: str):
    if value == "max":
        return "max"
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'max', got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgsmooth",
        description="Smooth and compress ordered point sequences by iterative segment merging.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sm = sub.add_parser("smooth", help="smooth a CSV curve")
    sm.add_argument("--input", required=True, help="input CSV path")
    sm.add_argument("--output", required=True, help="output CSV path")
    amount = sm.add_mutually_exclusive_group(required=True)
    amount.add_argument("--steps", type=_steps_arg, help="number of passes, or 'max'")
    amount.add_argument("--target-cr", type=float, dest="target_cr", metavar="PCT",
                        help="smooth until this compression ratio (percent) is reached")
    sm.add_argument("--svg", help="also write an overlay plot to this path")
    sm.add_argument("--delimiter", default=",", help="CSV delimiter (default ',')")
    sm.add_argument("--header", action="store_true", help="input has a header row")
    sm.add_argument("--trace", action="store_true", help="print the per-pass schedule")
    sm.add_argument("--clamp", action="store_true",
                    help="clamp an oversized step count instead of failing")
    sm.set_defaults(func=run_smooth)

    gen = sub.add_parser("generate", help="emit a deterministic noisy test curve as CSV")
    gen.add_argument("--kind", default="sine-noise", choices=["sine-noise"])
    gen.add_argument("--n", type=int, default=101, help="number of points (default 101)")
    gen.add_argument("--x-max", type=float, default=20.0, dest="x_max",
                     help="upper end of the x grid (default 20)")
    gen.add_argument("--sigma", type=float, default=0.3, help="noise level (default 0.3)")
    gen.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    gen.add_argument("--output", help="output CSV path (default: stdout)")
    gen.set_defaults(func=run_generate)
    return parser


def run_smooth(args) -> int:
    try:
        schema = CsvSchema(delimiter=args.delimiter, has_header=args.header)
        with open(args.input, "rb") as fh:
            polyline = read_points(fh, schema)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_IO
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.svg and polyline.dimension < 2:
        print("error: SVG overlay requires at least 2 coordinate columns", file=sys.stderr)
        return EXIT_INVALID

    max_steps = polyline.n_segments - 1
    try:
        if args.steps is not None:
            steps = max_steps if args.steps == "max" else args.steps
            if steps > max_steps and args.clamp:
                print(f"warning: clamping steps from {steps} to {max_steps}", file=sys.stderr)
                steps = max_steps
            result = smooth(polyline, steps)
        else:
            try:
                result = smooth_to_ratio(polyline, args.target_cr)
            except TooManyStepsError:
                if not args.clamp:
                    raise
                print(f"warning: clamping to the maximum of {max_steps} steps", file=sys.stderr)
                result = smooth(polyline, max_steps)
    except TooManyStepsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_MANY_STEPS
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        with open(args.output, "wb") as fh:
            fh.write(write_points(result.output, schema))
        if args.svg:
            with open(args.svg, "wb") as fh:
                fh.write(emit_svg(polyline, result.output))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO

    if args.trace:
        for rec in result.trace:
            print(_trace_line(rec))
    return EXIT_OK


def run_generate(args) -> int:
    try:
        polyline = generate_points(args.kind, args.n, args.x_max, args.sigma, args.seed)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    data = write_points(polyline)
    try:
        if args.output:
            with open(args.output, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.buffer.write(data)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _trace_line(rec) -> str:
    return (
        f"p={rec.step} N={rec.n_before} "
        f"s={rec.factor.numerator}/{rec.factor.denominator} "
        f"c.r.={rec.compression_ratio_pct:.4f}%"
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
