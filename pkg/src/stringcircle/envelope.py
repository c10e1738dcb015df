"""Chord family construction and adjacent-chord intersections.

A chord joins a point ``(0, c)`` on the vertical axis to ``(d, 0)`` on the
horizontal axis.  The family built by ``chord_family`` steps both intercepts
by one per member; the intersections of adjacent members trace a parabolic
envelope arc.  ``intersect_exact`` solves the general two-line system over
exact rationals, while ``intersect_adjacent_fast`` evaluates the reduced
closed form that is valid when the intercept gaps are exactly one.
"""

from __future__ import annotations

from typing import NamedTuple

from .intmath import Rational

Point = tuple[int, int]


class EmptyFamilyError(ValueError):
    """Requested a chord family with no members."""


class ParallelChordsError(ValueError):
    """The two chords have equal slopes and never intersect."""


class CoincidentChordsError(ValueError):
    """The two chords lie on the same line."""


class NotAdjacentError(ValueError):
    """The chord pair is not adjacent (axis-intercept gaps differ from one)."""


class Chord(NamedTuple):
    """Axis-to-axis segment from ``(0, c)`` to ``(d, 0)`` with ``c, d >= 1``."""

    y_end: Point
    x_end: Point

    @property
    def y_intercept(self) -> int:
        return self.y_end[1]

    @property
    def x_intercept(self) -> int:
        return self.x_end[0]


class ExactLine(NamedTuple):
    """Carrier line ``y = slope * x + intercept`` with rational coefficients."""

    slope: Rational
    intercept: Rational


class RationalPoint(NamedTuple):
    x: Rational
    y: Rational


class AdjacentPair(NamedTuple):
    """Normal form of two adjacent chords: ``((0, y3+1), (x2, 0))`` and ``((0, y3), (x4, 0))``.

    ``x2`` is the horizontal intercept of the steeper chord, ``x4 = x2 + 1``
    that of the shallower one, and ``y3`` the shallower chord's vertical
    intercept (zero allowed).
    """

    x2: int
    y3: int
    x4: int


def chord(c: int, d: int) -> Chord:
    """Chord from ``(0, c)`` down to ``(d, 0)``."""
    if c < 1 or d < 1:
        raise ValueError(f"chord intercepts must be >= 1, got ({c}, {d})")
    return Chord((0, c), (d, 0))


def chord_family(n: int) -> list[Chord]:
    """The n chords joining ``(0, n-j+1)`` to ``(j, 0)`` for ``j = 1..n``."""
    if n < 1:
        raise EmptyFamilyError(f"chord family needs n >= 1, got {n}")
    return [chord(n - j + 1, j) for j in range(1, n + 1)]


def line_through(ch: Chord) -> ExactLine:
    """Exact slope and intercept of a chord's carrier line."""
    c, d = ch.y_intercept, ch.x_intercept
    return ExactLine(Rational(-c, d), Rational(c))


def intersect_exact(a: Chord, b: Chord) -> RationalPoint:
    """Intersection of two chords' carrier lines, solved exactly over rationals."""
    la, lb = line_through(a), line_through(b)
    if la.slope == lb.slope:
        if la.intercept == lb.intercept:
            raise CoincidentChordsError(f"chords {a} and {b} are the same line")
        raise ParallelChordsError(f"chords {a} and {b} are parallel")
    x = (la.intercept - lb.intercept) / (lb.slope - la.slope)
    y = lb.slope * x + lb.intercept
    return RationalPoint(x, y)


def intersect_adjacent_fast(pair: AdjacentPair) -> RationalPoint:
    """Closed-form intersection for an adjacent pair, exact over rationals.

    ``x = x2 * (x2 + 1) / (y3 + x4)`` and ``y = y3 * (x4 - x) / x4``; equals
    ``intersect_exact`` of the corresponding chords.
    """
    x2, y3, x4 = pair
    if x4 != x2 + 1 or x2 < 1 or y3 < 0:
        raise ValueError(f"not a valid adjacent pair: {pair}")
    denom = y3 + x4
    if denom == 0:
        raise ZeroDivisionError("degenerate adjacent pair: y3 + x4 is zero")
    x = Rational(x2 * (x2 + 1), denom)
    y = Rational(y3, x4) * (x4 - x)
    return RationalPoint(x, y)


def normalize_adjacent_pair(a: Chord, b: Chord) -> AdjacentPair:
    """Orient two adjacent chords into ``AdjacentPair`` form, order-insensitively.

    The chord with the smaller horizontal intercept must carry the larger
    vertical intercept, and both gaps must be exactly one.
    """
    steeper, shallower = (a, b) if a.x_intercept < b.x_intercept else (b, a)
    if shallower.x_intercept != steeper.x_intercept + 1:
        raise NotAdjacentError(
            f"horizontal intercepts of {a} and {b} do not differ by one"
        )
    if steeper.y_intercept != shallower.y_intercept + 1:
        raise NotAdjacentError(
            f"vertical intercepts of {a} and {b} do not differ by one"
        )
    return AdjacentPair(
        x2=steeper.x_intercept,
        y3=shallower.y_intercept,
        x4=shallower.x_intercept,
    )
