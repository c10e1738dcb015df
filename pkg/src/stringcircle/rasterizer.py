"""Circle rasterization from adjacent-chord intersections.

``rasterize_circle`` computes one arc of intersection pixels with integer-only
arithmetic, then expands it by symmetry: quarter arc with 4-fold duplication
(algorithm "one") or octant with 8-fold duplication (algorithm "two", the
default).  Arc indices are independent of one another, so the loop can be
partitioned across workers; the result is a set union and never depends on
evaluation order or worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .intmath import MAX_RADIUS, div_round_half, long_divide

Algo = Literal["one", "two"]
Pixel = tuple[int, int]
PixelSet = set[Pixel]


class InvalidRadiusError(ValueError):
    """Radius below one pixel."""


class RadiusOverflowError(ValueError):
    """Radius beyond the supported bit-width guard."""


@dataclass(frozen=True)
class Calibration:
    """Fixed ratios mapping a requested circle onto the envelope frame.

    These were measured once at a 200 px reference scale and hold for every
    radius; they are not tunable per circle.
    """

    radius_ratio: tuple[int, int] = (5, 4)  # envelope-frame radius : circle radius
    width_ratio: tuple[int, int] = (41, 40)  # duplication half-extent : circle radius
    dd_ratio: tuple[int, int] = (10, 1)  # frame radius : arc-window margin
    disp: int = 3  # axis displacement at reference scale
    arc_span: tuple[int, int] = (160, 37)  # reference arc : usable window


CALIBRATION = Calibration()


@dataclass(frozen=True)
class CircleSpec:
    """Requested circle: center column/row and radius, in pixels.

    Screen convention: origin at the top left, y growing downward.
    """

    xx: int
    yy: int
    rr: int


@dataclass(frozen=True)
class DerivedParams:
    """Working parameters for the arc loop, derived from a ``CircleSpec``."""

    r: int  # envelope-frame radius
    x: int  # frame extent; equals r
    width: int  # half-extent of the duplication frame
    xoffset: int
    yoffset: int
    dist: int  # last arc index (inclusive)
    i0: int  # first arc index


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def derive_params(spec: CircleSpec, algo: Algo = "two") -> DerivedParams:
    """Derive the arc-loop parameters for one circle.

    Unmarked ratio divisions round to nearest (ties up); the loop bounds use
    the explicit floor/ceiling forms.
    """
    if spec.rr < 1:
        raise InvalidRadiusError(f"invalid radius {spec.rr}: must be >= 1")
    if spec.rr > MAX_RADIUS:
        raise RadiusOverflowError(
            f"invalid radius {spec.rr}: exceeds supported maximum {MAX_RADIUS}"
        )
    rnum, rden = CALIBRATION.radius_ratio
    wnum, wden = CALIBRATION.width_ratio
    mnum, mden = CALIBRATION.dd_ratio

    r = div_round_half(spec.rr * rnum, rden)
    x = r
    width = div_round_half(spec.rr * wnum, wden)
    i0 = (r * mden) // mnum + 1
    if algo == "two":
        dist = _ceil_div(x, 2) + 2
    elif algo == "one":
        dist = _ceil_div(mnum * x - r * mden, mnum) + 2
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return DerivedParams(
        r=r,
        x=x,
        width=width,
        xoffset=spec.xx - width,
        yoffset=spec.yy - width,
        dist=dist,
        i0=i0,
    )


def _arc_pixel(params: DerivedParams, i: int, correct: bool) -> Pixel | None:
    """Translated intersection pixel for arc index ``i``.

    The adjacent pair at index ``i`` has intercepts ``x2 = x - i``,
    ``x4 = x2 + 1`` and ``y3 = i - 1``.  Both coordinates are exact integer
    numerators and denominators put through one rounding division each; the
    rounded x feeds the y formula.  With ``correct``, y becomes the truncated
    quotient plus one instead of the rounded quotient.  Returns None when the
    pair degenerates (``x4 < 1``; reachable only for radii below three).
    """
    x4 = params.x - i + 1
    if x4 < 1:
        return None
    x2 = x4 - 1
    y3 = i - 1
    px = div_round_half(x2 * (x2 + 1), y3 + x4)
    ynum = y3 * (x4 - px)
    if correct:
        py = long_divide(ynum, x4).quotient + 1
    else:
        py = div_round_half(ynum, x4)
    return (px + params.xoffset, py + params.yoffset)


def arc_pixels(params: DerivedParams, correct: bool) -> list[tuple[int, Pixel]]:
    """All ``(index, pixel)`` pairs of the arc loop, in index order."""
    out = []
    for i in range(params.i0, params.dist + 1):
        p = _arc_pixel(params, i, correct)
        if p is not None:
            out.append((i, p))
    return out


def quadrant_expand(p: Pixel, params: DerivedParams) -> PixelSet:
    """Mirror a translated arc pixel into all four quadrants of the frame."""
    x = p[0] - params.xoffset
    y = p[1] - params.yoffset
    w2 = 2 * params.width
    cols = (x + params.xoffset, w2 - x + params.xoffset)
    rows = (y + params.yoffset, w2 - y + params.yoffset)
    return {(c, r) for c in cols for r in rows}


def octant_expand(p: Pixel, spec: CircleSpec) -> PixelSet:
    """A plotted pixel plus its seven dihedral mirrors about the center."""
    xx, yy = spec.xx, spec.yy
    dx = xx - p[0]
    dy = yy - p[1]
    return {
        p,
        (xx + dx, yy + dy),
        (xx - dx, yy + dy),
        (xx + dx, yy - dy),
        (xx + dy, yy + dx),
        (xx - dy, yy + dx),
        (xx + dy, yy - dx),
        (xx - dy, yy - dx),
    }


def _expand_chunk(
    spec: CircleSpec,
    params: DerivedParams,
    algo: Algo,
    correct: bool,
    indices: Iterable[int],
) -> PixelSet:
    pixels: PixelSet = set()
    for i in indices:
        p = _arc_pixel(params, i, correct)
        if p is None:
            continue
        if algo == "two":
            pixels |= octant_expand(p, spec)
        else:
            pixels |= quadrant_expand(p, params)
    return pixels


def _partition(indices: Sequence[int], workers: int) -> list[Sequence[int]]:
    step = max(1, _ceil_div(len(indices), workers))
    return [indices[k : k + step] for k in range(0, len(indices), step)]


def rasterize_circle(
    spec: CircleSpec,
    algo: Algo = "two",
    correct: bool = True,
    workers: int = 1,
) -> PixelSet:
    """Full pixel set of one circle.

    ``workers`` splits the arc loop into contiguous chunks evaluated
    concurrently; the merged set is identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    params = derive_params(spec, algo)
    indices = range(params.i0, params.dist + 1)
    if workers == 1 or len(indices) <= 1:
        return _expand_chunk(spec, params, algo, correct, indices)
    pixels: PixelSet = set()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = _partition(indices, workers)
        for part in pool.map(
            lambda ch: _expand_chunk(spec, params, algo, correct, ch), chunks
        ):
            pixels |= part
    return pixels
