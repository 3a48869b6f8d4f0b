"""Iterative smoothing driver.

Each pass merges segments at the smallest factor that keeps the segment
count integral, ``n / (n - 1)``, so exactly one point is removed per pass
and no tail is ever lost.  The first and last points are therefore fixed:
the first bit for bit, the last up to float rounding.  The number of
passes is the method's only tuning parameter.
"""

from __future__ import annotations

import dataclasses
import math
import operator
from fractions import Fraction

from .chain import Polyline, build_chain, reconstruct
from .errors import ChainTooShortError, InvalidInputError, TooManyStepsError
from .rescale import rescale_fractional


@dataclasses.dataclass(frozen=True)
class StepRecord:
    """What one smoothing pass did.

    ``step`` counts from 1; ``factor`` is the exact merge factor
    ``n_before / (n_before - 1)``; ``compression_ratio_pct`` is relative
    to the original input of the run.
    """

    step: int
    n_before: int
    factor: Fraction
    n_after: int
    compression_ratio_pct: float


@dataclasses.dataclass(frozen=True)
class SmoothingTrace:
    """Per-pass schedule log of one smoothing run."""

    steps: tuple[StepRecord, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@dataclasses.dataclass(frozen=True)
class SmoothingResult:
    output: Polyline
    trace: SmoothingTrace
    input_points: int
    output_points: int


def optimal_scaling(n_segments: int) -> Fraction:
    """Smallest merge factor that divides ``n_segments`` into an integer.

    Returns ``n / (n - 1)`` exactly (already reduced: consecutive integers
    are coprime).  Always in (1, 2].
    """
    n = _as_int(n_segments, "segment count")
    if n < 2:
        raise ChainTooShortError(f"need at least 2 segments to smooth further, got {n}")
    return Fraction(n, n - 1)


def compression_ratio(n_original_segments: int, n_current_segments: int) -> float:
    """Percentage of points removed relative to the original curve.

    ``(1 - (n_current + 1) / (n_original + 1)) * 100``.
    """
    n_orig = _as_int(n_original_segments, "original segment count")
    n_cur = _as_int(n_current_segments, "current segment count")
    if not 1 <= n_cur <= n_orig:
        raise InvalidInputError(
            f"current segment count must lie in [1, {n_orig}], got {n_cur}"
        )
    return (1.0 - (n_cur + 1) / (n_orig + 1)) * 100.0


def smooth(polyline: Polyline, steps: int) -> SmoothingResult:
    """Smooth a polyline by ``steps`` one-point-removal passes.

    Parameters
    ----------
    polyline : curve to smooth, at least 2 points.
    steps : number of passes, from 0 (identity) to ``n_segments - 1``
        (single remaining segment).

    Returns
    -------
    SmoothingResult with the smoothed curve and the per-pass trace.

    Raises
    ------
    InvalidInputError : negative step count.
    TooManyStepsError : ``steps > n_segments - 1``; carries the maximum.
    """
    steps = _as_int(steps, "step count")
    n_original = polyline.n_segments
    max_steps = n_original - 1
    if steps < 0:
        raise InvalidInputError(f"step count must be non-negative, got {steps}")
    if steps > max_steps:
        raise TooManyStepsError(
            f"{steps} steps requested but a curve of {n_original + 1} points "
            f"allows at most {max_steps}",
            max_steps=max_steps,
        )
    if steps == 0:
        return SmoothingResult(
            output=polyline,
            trace=SmoothingTrace(steps=()),
            input_points=n_original + 1,
            output_points=n_original + 1,
        )
    chain = build_chain(polyline)
    records = []
    for step in range(1, steps + 1):
        n_before = chain.n_segments
        factor = optimal_scaling(n_before)
        chain = rescale_fractional(chain, factor)
        records.append(
            StepRecord(
                step=step,
                n_before=n_before,
                factor=factor,
                n_after=chain.n_segments,
                compression_ratio_pct=compression_ratio(n_original, chain.n_segments),
            )
        )
    output = reconstruct(chain)
    return SmoothingResult(
        output=output,
        trace=SmoothingTrace(steps=tuple(records)),
        input_points=n_original + 1,
        output_points=output.n_points,
    )


def smooth_to_ratio(polyline: Polyline, target_cr_pct: float) -> SmoothingResult:
    """Smooth just far enough to reach a target compression ratio.

    Picks the smallest step count whose compression ratio is at least
    ``target_cr_pct`` (a percentage in [0, 100)) and runs :func:`smooth`.
    The step count is derived exactly, so a representable target is never
    missed by float noise: k = ceil((n_points) * target / 100).
    """
    target = float(target_cr_pct)
    if not 0.0 <= target < 100.0 or math.isnan(target):
        raise InvalidInputError(f"target compression ratio must lie in [0, 100), got {target}")
    n = polyline.n_segments
    k = math.ceil(Fraction(target) * (n + 1) / 100)
    if k > n - 1:
        best = compression_ratio(n, 1)
        raise TooManyStepsError(
            f"target {target}% is unreachable: {n - 1} steps reach at most {best:.4f}%",
            max_steps=n - 1,
        )
    return smooth(polyline, k)


def _as_int(value, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise InvalidInputError(f"{what} must be an integer, got {value!r}") from None
