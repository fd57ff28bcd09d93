"""Exact arithmetic on rational angles of R/Z and chords/arcs of the unit disk.

Angles are reduced fractions in [0, 1); all arithmetic is exact.  Everything
here is immutable and hashable, so values can be shared freely between
threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

AngleLike = Union["Angle", Fraction, int, str]

ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


@total_ordering
class Angle:
    """A point of R/Z stored as a reduced fraction in [0, 1)."""

    __slots__ = ("frac",)

    def __init__(self, numerator, denominator=None):
        if denominator is not None:
            value = Fraction(numerator, denominator)
        elif isinstance(numerator, Angle):
            value = numerator.frac
        elif isinstance(numerator, str):
            value = Fraction(numerator)
        else:
            value = Fraction(numerator)
        self.frac = value % 1

    @property
    def numerator(self) -> int:
        return self.frac.numerator

    @property
    def denominator(self) -> int:
        return self.frac.denominator

    @staticmethod
    def parse(text: str) -> "Angle":
        """Parse the "num/den" turn-fraction text format, e.g. "1/6"."""
        return Angle(Fraction(text.strip()))

    def __add__(self, other: AngleLike) -> "Angle":
        return Angle(self.frac + _as_fraction(other))

    __radd__ = __add__

    def __sub__(self, other: AngleLike) -> "Angle":
        return Angle(self.frac - _as_fraction(other))

    def __rsub__(self, other: AngleLike) -> "Angle":
        return Angle(_as_fraction(other) - self.frac)

    def __mul__(self, k: int) -> "Angle":
        return Angle(self.frac * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Angle) and self.frac == other.frac

    def __lt__(self, other: "Angle") -> bool:
        return self.frac < other.frac

    def __hash__(self):
        return hash(self.frac)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Angle({self.numerator}/{self.denominator})"

    def __float__(self) -> float:
        return float(self.frac)


def _as_fraction(x: AngleLike) -> Fraction:
    if isinstance(x, Angle):
        return x.frac
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def ccw_dist(a: Angle, b: Angle) -> Fraction:
    """Length of the positively oriented arc from a to b, in [0, 1)."""
    return (b.frac - a.frac) % 1


def in_open_arc(x: Angle, start: Angle, end: Angle) -> bool:
    """Is x strictly inside the positively oriented arc (start, end)?"""
    span = ccw_dist(start, end)
    d = ccw_dist(start, x)
    return 0 < d < span


class Arc:
    """An arc of the circle traversed positively from start to end.

    Endpoint membership is governed by the closed flags.  Degenerate arcs
    (start == end) are rejected: a full circle is never a legal arc here.
    """

    __slots__ = ("start", "end", "closed")

    def __init__(self, start: Angle, end: Angle, closed=(True, True)):
        if start == end:
            raise ValueError("degenerate arc: start == end")
        self.start = start
        self.end = end
        self.closed = (bool(closed[0]), bool(closed[1]))

    @property
    def length(self) -> Fraction:
        return ccw_dist(self.start, self.end)

    def contains(self, x: Angle) -> bool:
        if x == self.start:
            return self.closed[0]
        if x == self.end:
            return self.closed[1]
        return in_open_arc(x, self.start, self.end)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Arc)
            and self.start == other.start
            and self.end == other.end
            and self.closed == other.closed
        )

    def __hash__(self):
        return hash((self.start, self.end, self.closed))

    def __repr__(self) -> str:
        lb = "[" if self.closed[0] else "("
        rb = "]" if self.closed[1] else ")"
        return f"Arc{lb}{self.start}, {self.end}{rb}"


class Chord:
    """An unordered pair of distinct angles; the smaller one is stored first."""

    __slots__ = ("a", "b")

    def __init__(self, a: Angle, b: Angle):
        a, b = Angle(a), Angle(b)
        if a == b:
            raise ValueError("degenerate chord")
        if b < a:
            a, b = b, a
        self.a = a
        self.b = b

    @property
    def length(self) -> Fraction:
        d = ccw_dist(self.a, self.b)
        return min(d, 1 - d)

    def endpoints(self) -> tuple[Angle, Angle]:
        return (self.a, self.b)

    def has_endpoint(self, x: Angle) -> bool:
        return x == self.a or x == self.b

    def is_critical(self, d: int = 3) -> bool:
        return sigma(d, self.a) == sigma(d, self.b)

    def image(self, d: int = 3) -> "Chord":
        """The chord joining the sigma_d images (undefined for critical chords)."""
        return Chord(sigma(d, self.a), sigma(d, self.b))

    def __eq__(self, other) -> bool:
        return isinstance(other, Chord) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Chord({self.a}, {self.b})"


def sigma(d: int, theta: Angle) -> Angle:
    """The angle d-tupling map theta -> d*theta mod 1, for d in {2, 3}."""
    if d not in (2, 3):
        raise ValueError("sigma is only provided for d = 2 and d = 3")
    return Angle(theta.frac * d)


def orbit_period(d: int, theta: Angle) -> tuple[int, int]:
    """(preperiod, period) of theta under sigma_d.

    Rational angles are always eventually periodic; theta is periodic iff
    the preperiod is 0.
    """
    seen: dict[Angle, int] = {}
    x = Angle(theta)
    i = 0
    while x not in seen:
        seen[x] = i
        x = sigma(d, x)
        i += 1
    first = seen[x]
    return first, i - first


def forward_orbit(d: int, theta: Angle) -> list[Angle]:
    """The full forward orbit of theta (preperiodic stem plus one cycle)."""
    pre, per = orbit_period(d, theta)
    out = []
    x = Angle(theta)
    for _ in range(pre + per):
        out.append(x)
        x = sigma(d, x)
    return out


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """True iff the chords cross inside the open disk.

    Chords sharing an endpoint never cross; the test is strict interleaving
    of endpoint pairs on the circle.
    """
    if c1.has_endpoint(c2.a) or c1.has_endpoint(c2.b):
        return False
    first = in_open_arc(c2.a, c1.a, c1.b)
    second = in_open_arc(c2.b, c1.a, c1.b)
    return first != second


def critical_chord(theta: Angle) -> Chord:
    """The critical chord joining theta + 1/3 and theta + 2/3.

    Both endpoints share their image 3*theta; the chord splits the circle
    into arcs of length exactly 1/3 and 2/3.
    """
    return Chord(theta + ONE_THIRD, theta + TWO_THIRDS)


def sort_circular(angles: Iterable[Angle]) -> list[Angle]:
    """Sort angles by their representatives in [0, 1)."""
    return sorted(angles, key=lambda t: t.frac)
