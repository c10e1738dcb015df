"""Circle quality measurement.

Per-pixel radial error, aggregate reports over a rasterized circle, a
midpoint-circle reference rasterizer, and set-difference statistics for
comparing the two.  Error values are floating point for reporting only; the
drawing path stays integer-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .rasterizer import (
    Algo,
    CircleSpec,
    Pixel,
    PixelSet,
    arc_pixels,
    derive_params,
    rasterize_circle,
)

#: Below this radius the envelope frame is too coarse for the fixed
#: calibration ratios; output is still produced but reports flag it.
DEGENERATE_RADIUS = 8


class EmptyPixelSetError(ValueError):
    """No pixels to aggregate over."""


@dataclass(frozen=True)
class ErrorReport:
    """Aggregate radial error of one rasterized circle."""

    radius_px: int
    average_error_px: float
    maximum_error_px: float
    pixel_count: int
    corrected: bool
    algo: Algo
    degenerate: bool

    def to_json_dict(self) -> dict:
        """Mapping with the stable field order of the JSON report schema."""
        return {
            "radius_px": self.radius_px,
            "algo": self.algo,
            "corrected": self.corrected,
            "pixel_count": self.pixel_count,
            "average_error_px": self.average_error_px,
            "maximum_error_px": self.maximum_error_px,
            "degenerate": self.degenerate,
        }


def radial_error(p: Pixel, spec: CircleSpec) -> float:
    """Absolute deviation of the pixel's distance from center vs the radius."""
    return abs(math.hypot(p[0] - spec.xx, p[1] - spec.yy) - spec.rr)


def error_report(
    spec: CircleSpec,
    algo: Algo = "two",
    correct: bool = True,
    arc_only: bool = False,
) -> ErrorReport:
    """Rasterize one circle and aggregate its per-pixel radial error.

    Default aggregation covers the full circle after symmetry duplication;
    ``arc_only`` restricts it to the computed arc.  Pixels are visited in
    sorted order so the float aggregates are reproducible bit for bit.
    """
    if arc_only:
        params = derive_params(spec, algo)
        pixels: PixelSet = {p for _, p in arc_pixels(params, correct)}
    else:
        pixels = rasterize_circle(spec, algo=algo, correct=correct)
    if not pixels:
        raise EmptyPixelSetError(f"no pixels produced for {spec}")
    errors = [radial_error(p, spec) for p in sorted(pixels)]
    return ErrorReport(
        radius_px=spec.rr,
        average_error_px=sum(errors) / len(errors),
        maximum_error_px=max(errors),
        pixel_count=len(pixels),
        corrected=correct,
        algo=algo,
        degenerate=spec.rr < DEGENERATE_RADIUS,
    )


def error_growth(
    small_rr: int = 100, large_rr: int = 1000, algo: Algo = "two"
) -> tuple[float, float]:
    """Uncorrected average errors at two radii; the larger radius drifts more."""
    small = error_report(CircleSpec(0, 0, small_rr), algo=algo, correct=False)
    large = error_report(CircleSpec(0, 0, large_rr), algo=algo, correct=False)
    return small.average_error_px, large.average_error_px


def midpoint_octant(rr: int) -> list[Pixel]:
    """Center-relative pixels of one midpoint-circle octant (x <= y half).

    The full reference circle is this octant mirrored eight ways; mirroring
    preserves distance from center, so the octant already carries the whole
    circle's radial-error profile.
    """
    if rr < 0:
        raise ValueError(f"radius must be >= 0, got {rr}")
    if rr == 0:
        return [(0, 0)]
    pts = []
    x, y, d = 0, rr, 1 - rr
    while x <= y:
        pts.append((x, y))
        if d < 0:
            d += 2 * x + 3
        else:
            d += 2 * (x - y) + 5
            y -= 1
        x += 1
    return pts


def midpoint_reference(spec: CircleSpec) -> PixelSet:
    """Standard midpoint-circle pixel set; comparison reference only."""
    xx, yy = spec.xx, spec.yy
    if spec.rr == 0:
        return {(xx, yy)}
    pixels: PixelSet = set()
    for x, y in midpoint_octant(spec.rr):
        pixels |= {
            (xx + x, yy + y),
            (xx - x, yy + y),
            (xx + x, yy - y),
            (xx - x, yy - y),
            (xx + y, yy + x),
            (xx - y, yy + x),
            (xx + y, yy - x),
            (xx - y, yy - x),
        }
    return pixels


class SetComparison(NamedTuple):
    only_a: int
    only_b: int
    both: int
    jaccard: float


def compare_sets(a: PixelSet, b: PixelSet) -> SetComparison:
    """Exact set-difference counts and Jaccard similarity of two pixel sets."""
    union = len(a | b)
    if union == 0:
        raise ValueError("jaccard undefined: both sets are empty")
    both = len(a & b)
    return SetComparison(len(a) - both, len(b) - both, both, both / union)
