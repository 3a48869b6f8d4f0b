"""CSV point I/O and a dependency-free SVG overlay plot.

CSV rows are points, one per line, in file order (file order is the curve
order).  Output uses LF line endings and Python's shortest round-trip
float formatting, so ``read_points(write_points(p))`` reproduces every
float64 coordinate exactly.

The SVG writer draws the original and smoothed curves on top of each
other as two polyline elements inside a viewBox fitted to the data, with
the y axis flipped so that data y grows upward.
"""

from __future__ import annotations

import csv
import dataclasses
import io as _stdio
import math

import numpy as np

from .chain import Polyline
from .errors import InvalidInputError, ParseError


@dataclasses.dataclass(frozen=True)
class CsvSchema:
    """How to interpret a CSV point file.

    ``columns`` selects which 0-based columns are coordinates (None means
    all columns, in order).  ``has_header`` skips the first row.
    """

    delimiter: str = ","
    has_header: bool = False
    columns: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise InvalidInputError(f"delimiter must be a single character, got {self.delimiter!r}")
        if self.columns is not None:
            object.__setattr__(self, "columns", tuple(self.columns))
            if any(c < 0 for c in self.columns):
                raise InvalidInputError("column indices must be non-negative")


def read_points(source, schema: CsvSchema = CsvSchema()) -> Polyline:
    """Parse a CSV stream (text, bytes, or file-like) into a polyline.

    Every data row must yield the same number of finite coordinates.
    Raises ParseError with the 1-based row and column of the first
    offending cell, or InvalidInputError when fewer than 2 points remain.
    """
    text = source.read() if hasattr(source, "read") else source
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    reader = csv.reader(_stdio.StringIO(text), delimiter=schema.delimiter)
    points: list[list[float]] = []
    dimension = None
    for row_no, row in enumerate(reader, start=1):
        if schema.has_header and row_no == 1:
            continue
        if not row or all(cell.strip() == "" for cell in row):
            continue
        if schema.columns is None:
            cells = list(enumerate(row))
        else:
            cells = []
            for col in schema.columns:
                if col >= len(row):
                    raise ParseError(
                        f"row {row_no} has {len(row)} columns, column {col + 1} requested",
                        row=row_no,
                        column=col + 1,
                    )
                cells.append((col, row[col]))
        coords = []
        for col, cell in cells:
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"row {row_no}, column {col + 1}: {cell!r} is not a number",
                    row=row_no,
                    column=col + 1,
                ) from None
            if not math.isfinite(value):
                raise ParseError(
                    f"row {row_no}, column {col + 1}: {cell!r} is not finite",
                    row=row_no,
                    column=col + 1,
                )
            coords.append(value)
        if dimension is None:
            dimension = len(coords)
        elif len(coords) != dimension:
            raise ParseError(
                f"row {row_no} has {len(coords)} coordinates, expected {dimension}",
                row=row_no,
            )
        points.append(coords)
    if len(points) < 2:
        raise InvalidInputError(f"need at least 2 data rows, got {len(points)}")
    return Polyline(np.array(points, dtype=np.float64))


def write_points(polyline: Polyline, schema: CsvSchema = CsvSchema()) -> bytes:
    """Serialize a polyline as CSV bytes, one point per row.

    Floats are written with the shortest representation that parses back
    to the same float64, making the CSV round trip lossless.  Only the
    schema's delimiter matters here; no header row is emitted.
    """
    lines = [
        schema.delimiter.join(repr(float(v)) for v in row) for row in polyline.points
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_svg(original: Polyline, smoothed: Polyline, axes: tuple[int, int] = (0, 1)) -> bytes:
    """Render an overlay of two curves as an SVG 1.1 document.

    ``axes`` picks the two coordinate columns to plot (a projection for
    curves with more than two dimensions).  The original curve is drawn
    with a light stroke under the smoothed one, and a text annotation
    reports the point-count reduction.
    """
    ax, ay = axes
    for poly, name in ((original, "original"), (smoothed, "smoothed")):
        if not (0 <= ax < poly.dimension and 0 <= ay < poly.dimension):
            raise InvalidInputError(
                f"axes {axes} out of range for {name} polyline of dimension {poly.dimension}"
            )

    xs = np.concatenate([original.points[:, ax], smoothed.points[:, ax]])
    ys = np.concatenate([original.points[:, ay], smoothed.points[:, ay]])
    x_lo, x_hi = _padded_bounds(xs.min(), xs.max())
    y_lo, y_hi = _padded_bounds(ys.min(), ys.max())
    width = x_hi - x_lo
    height = y_hi - y_lo
    stroke = 0.006 * max(width, height)

    def path(poly: Polyline) -> str:
        # Flip y inside the fixed viewBox so data y increases upward.
        return " ".join(
            f"{_num(p[ax])},{_num(y_lo + y_hi - p[ay])}" for p in poly.points
        )

    removed = original.n_points - smoothed.n_points
    ratio = (1.0 - smoothed.n_points / original.n_points) * 100.0
    label = f"steps={removed} c.r.={ratio:.2f}%"
    font = 0.045 * max(width, height)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x_lo)} {_num(y_lo)} {_num(width)} {_num(height)}">',
        f'<polyline fill="none" stroke="#b0c4de" stroke-width="{_num(stroke)}" '
        f'points="{path(original)}"/>',
        f'<polyline fill="none" stroke="#1a1a2e" stroke-width="{_num(stroke)}" '
        f'points="{path(smoothed)}"/>',
        f'<text x="{_num(x_lo + 0.02 * width)}" y="{_num(y_lo + 0.07 * height)}" '
        f'font-family="sans-serif" font-size="{_num(font)}" fill="#1a1a2e">{label}</text>',
        "</svg>",
    ]
    return ("\n".join(parts) + "\n").encode("utf-8")


def _padded_bounds(lo: float, hi: float) -> tuple[float, float]:
    """Bounds with a 5% margin; a degenerate axis falls back to unit size."""
    span = hi - lo
    if span == 0.0:
        return lo - 0.5, hi + 0.5
    pad = 0.05 * span
    return lo - pad, hi + pad


def _num(value: float) -> str:
    """Compact deterministic number formatting for SVG attributes."""
    return f"{float(value):.6g}"
