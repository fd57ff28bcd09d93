"""Finite invariant gaps under angle tripling: types A, B and D.

A finite invariant gap is the convex hull of finitely many periodic angles
permuted by tripling with a constant circular shift.  Majors are read off
the counting device used for type D: the edge whose hole contains 0 and the
edge whose hole contains 1/2.  Type A has one major, type B two majors in a
single edge orbit, type D two majors with disjoint edge orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .angles import Angle, Chord, in_open_arc, sigma, sort_circular
from .atlas import QAtlas, QHole, hole_with_major
from .errors import NotAnOrbitError, NotFoundError, WrongTypeError

TYPE_D_GUARD = 9

ONE_HALF = Angle(1, 2)
ZERO = Angle(0)


def rotation_number(orbit: Iterable[Angle]) -> Optional[tuple[int, int]]:
    """Reduced rotation number of a finite tripling-invariant set.

    Returns (p, q) when tripling shifts the circularly sorted set by a
    constant offset, None otherwise.  Raises NotAnOrbitError if the set is
    not closed under tripling.
    """
    pts = sort_circular(set(orbit))
    if not pts:
        raise NotAnOrbitError("empty input")
    index = {a: i for i, a in enumerate(pts)}
    size = len(pts)
    shift = None
    for i, a in enumerate(pts):
        img = sigma(3, a)
        if img not in index:
            raise NotAnOrbitError(f"{a} maps outside the set")
        s = (index[img] - i) % size
        if shift is None:
            shift = s
        elif s != shift:
            return None
    g = gcd(shift, size)
    return (shift // g, size // g)


@dataclass(frozen=True)
class FiniteGap:
    """Convex hull of periodic angles invariant under tripling.

    majors holds the oriented major holes as (start, end) angle pairs; the
    positively oriented open arc (start, end) contains no vertex.  For the
    degenerate rotation-0 object (the diameter 0-1/2) both entries carry the
    same chord viewed from its two sides.
    """

    vertices: tuple[Angle, ...]
    gap_type: str  # "A" | "B" | "D"
    rotation: tuple[int, int]
    majors: tuple[tuple[Angle, Angle], ...]

    @property
    def major_chords(self) -> tuple[Chord, ...]:
        return tuple(Chord(a, b) for a, b in self.majors)

    def as_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "type": self.gap_type,
            "rotation": f"{self.rotation[0]}/{self.rotation[1]}",
            "majors": [[str(a), str(b)] for a, b in self.majors],
        }


DEGENERATE_LEAF = FiniteGap(
    vertices=(ZERO, ONE_HALF),
    gap_type="D",
    rotation=(0, 1),
    majors=((ZERO, ONE_HALF), (ONE_HALF, ZERO)),
)


def _edges(pts: list[Angle]) -> list[tuple[Angle, Angle]]:
    return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


def _edge_orbits(pts: list[Angle], shift: int) -> list[set[int]]:
    size = len(pts)
    orbits, seen = [], set()
    for i in range(size):
        if i in seen:
            continue
        orb, j = set(), i
        while j not in orb:
            orb.add(j)
            j = (j + shift) % size
        seen |= orb
        orbits.append(orb)
    return orbits


def classify_finite(vertex_set: Iterable[Angle]) -> FiniteGap:
    """Classify the convex hull of a tripling-invariant rotational set."""
    pts = sort_circular(set(vertex_set))
    rot = rotation_number(pts)
    if rot is None:
        raise NotAnOrbitError("tripling does not act as a circular rotation")
    if len(pts) < 3:
        if set(pts) == {ZERO, ONE_HALF}:
            return DEGENERATE_LEAF
        raise WrongTypeError("fewer than 3 vertices and not the 0-1/2 leaf")
    index = {a: i for i, a in enumerate(pts)}
    shift = (index[sigma(3, pts[0])] - 0) % len(pts)
    edges = _edges(pts)
    hole0 = next(i for i, (a, b) in enumerate(edges) if in_open_arc(ZERO, a, b))
    hole_half = next(i for i, (a, b) in enumerate(edges) if in_open_arc(ONE_HALF, a, b))
    if hole0 == hole_half:
        gap_type = "A"
        majors = (edges[hole0],)
    else:
        orbits = _edge_orbits(pts, shift)
        same = any(hole0 in orb and hole_half in orb for orb in orbits)
        gap_type = "B" if same else "D"
        majors = (edges[hole0], edges[hole_half])
    return FiniteGap(tuple(pts), gap_type, rot, tuple(majors))


def _rotational_orbits(p: int, q: int) -> list[tuple[Angle, ...]]:
    """All period-q tripling orbits with rotation number p/q."""
    n = 3 ** q - 1
    seen = set()
    orbits = []
    for j in range(n):
        if j in seen:
            continue
        orb, x = [], j
        while x not in orb:
            orb.append(x)
            x = (x * 3) % n
        seen.update(orb)
        if len(orb) != q:
            continue
        angles = tuple(Angle(k, n) for k in orb)
        if rotation_number(angles) == (p, q):
            orbits.append(angles)
    return orbits


def enumerate_invariant_gaps(p: int, q: int) -> list[FiniteGap]:
    """Finite invariant gaps of rotation number p/q: single rotational
    orbits (types A/B) and constant-shift unions of two orbits (type D)."""
    gaps = []
    orbits = _rotational_orbits(p, q)
    for orb in orbits:
        if len(orb) >= 3:
            try:
                gaps.append(classify_finite(orb))
            except NotAnOrbitError:
                continue
    for i in range(len(orbits)):
        for j in range(i + 1, len(orbits)):
            union = set(orbits[i]) | set(orbits[j])
            if rotation_number(union) is None:
                continue
            gaps.append(classify_finite(union))
    return gaps


def enumerate_typeD(p: int, q: int) -> list[FiniteGap]:
    """The q type-D invariant gaps of rotation number p/q.

    For rotation 0/1 the answer is the degenerate leaf 0-1/2; otherwise an
    exhaustive search over pairs of rotational period-q orbits whose union
    is still rotated rigidly by tripling.
    """
    if gcd(p, q) != 1:
        raise ValueError("rotation number must be reduced")
    if q > TYPE_D_GUARD:
        raise ValueError(f"q above guard {TYPE_D_GUARD}")
    if q == 1:
        return [DEGENERATE_LEAF]
    gaps = [g for g in enumerate_invariant_gaps(p, q) if g.gap_type == "D"]
    gaps.sort(key=lambda g: g.vertices[0].frac)
    return gaps


def conjugate_major(gap: FiniteGap, major_index: int) -> tuple[Angle, Angle]:
    """The other major of a type-D gap (an involution on the two majors)."""
    if gap.gap_type != "D":
        raise WrongTypeError("conjugate majors exist only for type D gaps")
    return gap.majors[1 - major_index]


def typeD_major_to_qhole(gap: FiniteGap, major_index: int, atlas: QAtlas) -> QHole:
    """The unique atlas hole whose periodic major is the chosen major.

    The oriented major hole (alpha, beta) corresponds to the parameter hole
    (alpha - 1/3, beta - 2/3); the lookup is by exact chord match, with the
    orientation disambiguating the two holes of the diameter 0-1/2.
    """
    if gap.gap_type != "D":
        raise WrongTypeError("only type D majors bridge to parameter holes")
    start, end = gap.majors[major_index]
    hole = hole_with_major(atlas, Chord(start, end), oriented_start=start)
    if hole is None:
        raise NotFoundError(
            f"no hole with major ({start}, {end}); atlas bound {atlas.max_period}"
        )
    return hole
