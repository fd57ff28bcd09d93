"""Holes of the principal quadratic parameter gap, up to a period bound.

A hole of period q is an open arc (theta1, theta2) whose associated chord
((theta1+1/3)(theta2+2/3)) is the periodic major of a quadratic invariant
gap.  Majors are enumerated exactly over the denominator 3^q - 1.

The hole behind a period-q major always has length 3^(q-1)/(3^q - 1): the
major hole maps over the circle once onto a short hole, short holes triple
in length until they return to the major after q steps, and solving the
resulting linear relation pins the length.  This turns enumeration into a
single pass over periodic angles: for each alpha of exact period q the only
possible partner is beta = alpha + 3^(q-1)/(3^q - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .angles import Angle, Chord, in_open_arc
from .errors import BoundExceededError

MAX_PERIOD_GUARD = 12

ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class QHole:
    """One hole (theta1, theta2) of the principal gap, with its major."""

    theta1: Angle
    theta2: Angle
    period: int
    major: Chord

    @property
    def major_arc(self) -> tuple[Angle, Angle]:
        """The major hole oriented positively: (theta1 + 1/3, theta2 + 2/3)."""
        return (self.theta1 + ONE_THIRD, self.theta2 + TWO_THIRDS)

    def contains(self, theta: Angle) -> bool:
        return in_open_arc(theta, self.theta1, self.theta2)

    @property
    def length(self) -> Fraction:
        return (self.theta2.frac - self.theta1.frac) % 1

    def as_dict(self) -> dict:
        return {
            "theta1": str(self.theta1),
            "theta2": str(self.theta2),
            "period": self.period,
            "major": [str(self.major.a), str(self.major.b)],
        }


@dataclass(frozen=True)
class QAtlas:
    """All holes of period <= max_period, sorted by theta1."""

    max_period: int
    holes: tuple[QHole, ...]

    def as_dict(self) -> dict:
        return {
            "max_period": self.max_period,
            "holes": [h.as_dict() for h in self.holes],
        }


def _exact_period_mask(q: int, n: int) -> np.ndarray:
    """Boolean mask over j in [0, 3^q - 1): does j/(3^q - 1) have exact period q?"""
    j = np.arange(n, dtype=np.int64)
    mask = np.ones(n, dtype=bool)
    for d in range(1, q):
        if q % d == 0:
            mask &= (j * pow(3, d, n)) % n != j
    return mask


@lru_cache(maxsize=None)
def _holes_of_period(q: int) -> tuple[QHole, ...]:
    """All holes of exact period q, by exhaustive scan over 3^q - 1."""
    n = 3 ** q - 1
    half = 3 ** (q - 1)  # integer hole length of the major arc
    j = np.arange(n, dtype=np.int64)
    exact = _exact_period_mask(q, n)

    alpha = j[exact]
    beta = (alpha + half) % n
    # both endpoints must have exact period q
    exact_beta = exact[beta]
    alpha, beta = alpha[exact_beta], beta[exact_beta]

    # orbit matrix: row k holds 3^k * alpha mod n
    orbits_a = np.empty((q, alpha.size), dtype=np.int64)
    orbits_b = np.empty((q, alpha.size), dtype=np.int64)
    orbits_a[0] = alpha
    orbits_b[0] = beta
    for k in range(1, q):
        orbits_a[k] = (orbits_a[k - 1] * 3) % n
        orbits_b[k] = (orbits_b[k - 1] * 3) % n

    # arc k of the hole orbit starts at 3^k*alpha; its integer length is
    # 3^(q-1) for k = 0 and 3^(k-1) for k >= 1
    ok = np.ones(alpha.size, dtype=bool)
    for k in range(q):
        start = orbits_a[k]
        span = half if k == 0 else 3 ** (k - 1)
        for row in range(q):
            for orb in (orbits_a, orbits_b):
                d = (orb[row] - start) % n
                ok &= ~((d > 0) & (d < span))
    alpha, beta = alpha[ok], beta[ok]

    holes = []
    for a, b in zip(alpha.tolist(), beta.tolist()):
        a_ang = Angle(a, n)
        b_ang = Angle(b, n)
        holes.append(
            QHole(
                theta1=a_ang - ONE_THIRD,
                theta2=b_ang - TWO_THIRDS,
                period=q,
                major=Chord(a_ang, b_ang),
            )
        )
    return tuple(holes)


def enumerate_holes(max_period: int, threads: int = 1) -> QAtlas:
    """Enumerate every hole of period <= max_period.

    Raises BoundExceededError above the guard (the scan is exhaustive over
    denominators 3^q - 1).
    """
    if not 1 <= max_period:
        raise ValueError("max_period must be >= 1")
    if max_period > MAX_PERIOD_GUARD:
        raise BoundExceededError(
            f"max_period {max_period} exceeds guard {MAX_PERIOD_GUARD}"
        )
    periods = range(1, max_period + 1)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_period = list(pool.map(_holes_of_period, periods))
    else:
        per_period = [_holes_of_period(q) for q in periods]
    holes = [h for chunk in per_period for h in chunk]
    holes.sort(key=lambda h: h.theta1.frac)
    return QAtlas(max_period=max_period, holes=tuple(holes))


def hole_containing(atlas: QAtlas, theta: Angle) -> Optional[QHole]:
    """The unique hole whose open arc contains theta, if any in the atlas.

    None signals that theta lies in the principal Cantor set up to the
    atlas period bound.
    """
    for hole in atlas.holes:
        if hole.contains(theta):
            return hole
    return None


def hole_with_endpoint(atlas: QAtlas, theta: Angle) -> Optional[QHole]:
    for hole in atlas.holes:
        if theta in (hole.theta1, hole.theta2):
            return hole
    return None


def hole_with_major(atlas: QAtlas, major: Chord, oriented_start: Angle = None) -> Optional[QHole]:
    """Find the hole carrying this major chord.

    The chord 0-1/2 is the major of two distinct holes; pass oriented_start
    (the first endpoint of the major hole arc) to disambiguate.
    """
    for hole in atlas.holes:
        if hole.major == major:
            if oriented_start is None or hole.major_arc[0] == oriented_start:
                return hole
    return None


def render_q(atlas: QAtlas, size: int = 512) -> str:
    """An SVG drawing of the unit circle with one chord per hole."""
    if size < 64:
        raise ValueError("size must be >= 64")
    import math

    def xy(theta: Angle) -> tuple[float, float]:
        t = 2 * math.pi * float(theta)
        return (math.cos(t), -math.sin(t))  # svg y-axis points down

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="-1.1 -1.1 2.2 2.2">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.01"/>',
    ]
    for hole in atlas.holes:
        (x1, y1), (x2, y2) = xy(hole.theta1), xy(hole.theta2)
        lines.append(
            f'<line x1="{x1:.6f}" y1="{y1:.6f}" x2="{x2:.6f}" y2="{y2:.6f}" '
            'stroke="steelblue" stroke-width="0.005"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines)
