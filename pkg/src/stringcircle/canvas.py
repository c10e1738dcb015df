"""Binary canvas, plain-PBM encoding, and the string-art chord renderer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .envelope import chord_family
from .intmath import div_round_half
from .rasterizer import Pixel


class InvalidCanvasError(ValueError):
    """Canvas dimensions below one pixel."""


@dataclass
class Canvas:
    """Row-major binary raster; 1 = plotted, 0 = background."""

    width_px: int
    height_px: int
    bits: bytearray

    @classmethod
    def blank(cls, width_px: int, height_px: int) -> "Canvas":
        if width_px < 1 or height_px < 1:
            raise InvalidCanvasError(
                f"canvas dimensions must be >= 1, got {width_px}x{height_px}"
            )
        return cls(width_px, height_px, bytearray(width_px * height_px))

    def contains(self, px: int, py: int) -> bool:
        return 0 <= px < self.width_px and 0 <= py < self.height_px

    def get(self, px: int, py: int) -> int:
        return self.bits[py * self.width_px + px]

    def plot(self, px: int, py: int) -> None:
        self.bits[py * self.width_px + px] = 1


def render_to_canvas(
    pixels: Iterable[Pixel], width_px: int, height_px: int
) -> tuple[Canvas, int]:
    """Plot pixels on a fresh canvas; returns it plus the out-of-bounds count."""
    canvas = Canvas.blank(width_px, height_px)
    clipped = 0
    for px, py in pixels:
        if canvas.contains(px, py):
            canvas.plot(px, py)
        else:
            clipped += 1
    return canvas, clipped


def write_pbm(canvas: Canvas) -> bytes:
    """Encode as plain PBM (P1), byte-for-byte deterministic.

    Header line, dimension line, then one line per row of space-separated
    0/1 tokens, with a trailing newline.
    """
    lines = [b"P1", f"{canvas.width_px} {canvas.height_px}".encode("ascii")]
    for row in range(canvas.height_px):
        start = row * canvas.width_px
        cells = canvas.bits[start : start + canvas.width_px]
        lines.append(b" ".join(b"1" if v else b"0" for v in cells))
    return b"\n".join(lines) + b"\n"


def read_pbm(data: bytes) -> Canvas:
    """Decode a plain PBM (P1) stream; inverse of ``write_pbm``."""
    tokens = data.split()
    if not tokens or tokens[0] != b"P1":
        raise ValueError("not a plain PBM (P1) stream")
    if len(tokens) < 3:
        raise ValueError("truncated PBM header")
    width, height = int(tokens[1]), int(tokens[2])
    values = tokens[3:]
    if len(values) != width * height:
        raise ValueError(
            f"expected {width * height} raster tokens, got {len(values)}"
        )
    bits = bytearray(1 if t == b"1" else 0 for t in values)
    return Canvas(width, height, bits)


def _draw_chord(canvas: Canvas, c: int, d: int) -> None:
    """Rasterize the segment from (0, c) to (d, 0) with nearest-pixel stepping.

    Steps along the longer axis and rounds the other coordinate (ties up),
    so the plotted set is independent of endpoint order and maps onto itself
    under axis exchange.
    """
    if d >= c:
        for px in range(d + 1):
            canvas.plot(px, div_round_half(c * (d - px), d))
    else:
        for py in range(c + 1):
            canvas.plot(div_round_half(d * (c - py), c), py)


def render_string_art(n: int, cell_px: int) -> Canvas:
    """Draw all n family chords scaled by ``cell_px`` on a square canvas.

    Canvas side is ``n * cell_px + 1``; the unplotted region around the
    origin is bounded by the family's parabolic envelope.
    """
    if cell_px < 1:
        raise ValueError(f"cell_px must be >= 1, got {cell_px}")
    family = chord_family(n)
    side = n * cell_px + 1
    canvas = Canvas.blank(side, side)
    for ch in family:
        _draw_chord(canvas, ch.y_intercept * cell_px, ch.x_intercept * cell_px)
    return canvas
