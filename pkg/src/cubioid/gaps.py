"""Quadratic invariant gaps generated by critical chords.

For a critical chord with endpoints theta+1/3 and theta+2/3, the long arc L
(length 2/3) splits at theta into two closed subarcs A0 = [theta+2/3, theta]
and A1 = [theta, theta+1/3], each of length 1/3 and each mapped onto the
whole circle by angle tripling.  The gap is the convex hull of the angles
whose forward orbit never leaves L; its vertices are approximated here by
pulling seed angles back through A0/A1, so every predicate states the
itinerary depth at which it was verified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .angles import (
    Angle,
    Arc,
    Chord,
    ONE_THIRD,
    TWO_THIRDS,
    ccw_dist,
    critical_chord,
    forward_orbit,
    in_open_arc,
    orbit_period,
    sigma,
    sort_circular,
)
from .atlas import QAtlas, QHole, enumerate_holes, hole_containing, hole_with_endpoint
from .errors import NotAVertexError, NotFoundError, WrongTypeError


class GapType(enum.Enum):
    REGULAR_CRITICAL = "regular_critical"
    CATERPILLAR = "caterpillar"
    PERIODIC = "periodic"


def long_arc(theta: Angle) -> Arc:
    """The closed arc of length 2/3 joining theta+2/3 to theta+1/3 through theta."""
    return Arc(theta + TWO_THIRDS, theta + ONE_THIRD, closed=(True, True))


def _branch_arcs(theta: Angle) -> tuple[Arc, Arc]:
    a0 = Arc(theta + TWO_THIRDS, theta, closed=(True, True))
    a1 = Arc(theta, theta + ONE_THIRD, closed=(True, True))
    return a0, a1


def classify(theta: Angle) -> GapType:
    """Gap trichotomy for the critical chord at theta.

    Both chord endpoints share the forward orbit of 3*theta.  If that orbit
    leaves the closed long arc, the critical chord is not an edge of the
    gap and the type is periodic, even when a chord endpoint happens to be
    periodic (such generators fill the interiors of parameter holes).  If
    the orbit stays trapped, the type is caterpillar when an endpoint is
    periodic and regular critical otherwise.
    """
    arc = long_arc(theta)
    if not all(arc.contains(x) for x in forward_orbit(3, sigma(3, theta))):
        return GapType.PERIODIC
    e1 = theta + ONE_THIRD
    e2 = theta + TWO_THIRDS
    if orbit_period(3, e1)[0] == 0 or orbit_period(3, e2)[0] == 0:
        return GapType.CATERPILLAR
    return GapType.REGULAR_CRITICAL


def _periodic_endpoint(theta: Angle) -> Optional[tuple[Angle, int]]:
    """The periodic endpoint of the critical chord, if there is one.

    At most one endpoint can be periodic: adding 1/3 to a fraction with
    3-free denominator forces a factor 3 into the denominator.
    """
    for e in (theta + ONE_THIRD, theta + TWO_THIRDS):
        pre, per = orbit_period(3, e)
        if pre == 0:
            return e, per
    return None


@dataclass(frozen=True)
class QuadGap:
    """A quadratic invariant gap, identified by its generator angle.

    The major is the critical chord for regular-critical and caterpillar
    types and a periodic chord for periodic type; major_period is None only
    in the regular-critical case.  The chord 0-1/2 is the major of two
    distinct gaps, so the generator, never the major, is the identity.
    """

    generator: Angle
    gap_type: GapType
    major: Chord
    major_period: Optional[int]
    hole: Optional[QHole] = field(default=None, compare=False)

    @property
    def critical(self) -> Chord:
        return critical_chord(self.generator)

    def long_arc(self) -> Arc:
        return long_arc(self.generator)

    def vertex_sample(self, depth: int) -> list[Angle]:
        return vertices(self, depth)

    def as_dict(self, depth: int = 0) -> dict:
        out = {
            "generator": str(self.generator),
            "type": self.gap_type.value,
            "major": [str(self.major.a), str(self.major.b)],
            "major_period": self.major_period,
            "depth": depth,
            "vertices": [str(v) for v in vertices(self, depth)] if depth else [],
        }
        return out


def major_of(theta: Angle, max_period: int) -> tuple[Chord, Optional[int]]:
    """The major of the gap generated by theta, searching holes up to max_period.

    Regular-critical gaps keep the critical chord itself (period None);
    caterpillar generators sit at a hole endpoint and periodic generators
    inside a hole, and both inherit that hole's periodic major.
    """
    kind = classify(theta)
    if kind is GapType.REGULAR_CRITICAL:
        return critical_chord(theta), None
    if kind is GapType.CATERPILLAR:
        e = _periodic_endpoint(theta)
        assert e is not None
        period = e[1]
        if period > max_period:
            raise NotFoundError(
                f"caterpillar major has period {period} > bound {max_period}"
            )
        hole = hole_with_endpoint(enumerate_holes(period), theta)
        if hole is None:
            raise NotFoundError(f"no hole of period {period} has endpoint {theta}")
        return hole.major, hole.period
    hole = hole_containing(enumerate_holes(max_period), theta)
    if hole is None:
        raise NotFoundError(f"no hole of period <= {max_period} contains {theta}")
    return hole.major, hole.period


DEFAULT_MAJOR_SEARCH = 10


def quad_gap(theta: Angle, max_period: int = DEFAULT_MAJOR_SEARCH) -> QuadGap:
    """Construct the gap generated by theta (major search bounded by max_period)."""
    kind = classify(theta)
    if kind is GapType.REGULAR_CRITICAL:
        return QuadGap(theta, kind, critical_chord(theta), None)
    if kind is GapType.CATERPILLAR:
        e = _periodic_endpoint(theta)
        assert e is not None
        if e[1] > max_period:
            raise NotFoundError(
                f"caterpillar major has period {e[1]} > bound {max_period}"
            )
        hole = hole_with_endpoint(enumerate_holes(e[1]), theta)
        if hole is None:
            raise NotFoundError(f"no hole of period {e[1]} has endpoint {theta}")
        # the gap itself keeps the critical chord as its (critical) major
        return QuadGap(theta, kind, critical_chord(theta), hole.period, hole)
    hole = hole_containing(enumerate_holes(max_period), theta)
    if hole is None:
        raise NotFoundError(f"no hole of period <= {max_period} contains {theta}")
    return QuadGap(theta, kind, hole.major, hole.period, hole)


def is_vertex(gap: QuadGap, alpha: Angle) -> bool:
    """Exact vertex test: the full forward orbit stays in the closed long arc."""
    arc = gap.long_arc()
    return all(arc.contains(x) for x in forward_orbit(3, alpha))


def _seeds(gap: QuadGap) -> list[Angle]:
    if gap.gap_type is GapType.REGULAR_CRITICAL:
        return list(gap.critical.endpoints())
    if gap.gap_type is GapType.PERIODIC:
        return list(gap.major.endpoints())
    # caterpillar: periodic major endpoints plus the isolated critical endpoint
    assert gap.hole is not None
    seeds = list(gap.hole.major.endpoints())
    e = _periodic_endpoint(gap.generator)
    assert e is not None
    for c in gap.critical.endpoints():
        if c != e[0]:
            seeds.append(c)
    return seeds


def _pullbacks_in_arc(y: Angle, arc: Arc) -> list[Angle]:
    """Tripling preimages of y lying in the closed arc (one, or two at ties)."""
    base = Angle(y.frac / 3)
    out = []
    for j in range(3):
        x = base + Fraction(j, 3)
        if arc.contains(x):
            out.append(x)
    return out


def vertices(gap: QuadGap, depth: int) -> list[Angle]:
    """Sorted vertex sample: seeds and all their pullbacks through depth levels.

    The sample accumulates levels 0..depth, so each depth refines the last;
    every returned angle keeps its full forward orbit in the long arc (the
    pullback lands in A0 or A1 at each step and ends on a seed whose orbit
    is trapped).
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    a0, a1 = _branch_arcs(gap.generator)
    current = set(_seeds(gap))
    collected = set(current)
    for _ in range(depth):
        nxt = set()
        for y in current:
            for arc in (a0, a1):
                nxt.update(_pullbacks_in_arc(y, arc))
        current = nxt
        collected.update(nxt)
    return sort_circular(collected)


def clean_gap(gap: QuadGap) -> QuadGap:
    """Drop the isolated caterpillar points: the periodic-type gap underneath.

    Identity for regular-critical and periodic gaps, hence idempotent.
    """
    if gap.gap_type is not GapType.CATERPILLAR:
        return gap
    assert gap.hole is not None
    return QuadGap(
        gap.generator, GapType.PERIODIC, gap.hole.major, gap.hole.period, gap.hole
    )


@dataclass(frozen=True)
class VassalGap:
    """The companion gap trapped between the iterated images of a periodic major.

    Its vertices alpha satisfy 3^n*alpha in [3^n*(theta1+1/3), 3^n*(theta2+2/3)]
    (positively oriented closed arcs) for every n >= 0; the q-th tripling
    iterate maps the gap two-to-one onto itself.
    """

    senior: QuadGap
    period: int
    sample: tuple[Angle, ...]

    def vertex_sample(self) -> list[Angle]:
        return list(self.sample)


def _vassal_arcs(gap: QuadGap) -> list[Arc]:
    assert gap.hole is not None
    a, b = gap.hole.major_arc
    arcs = []
    for _ in range(gap.hole.period):
        arcs.append(Arc(a, b, closed=(True, True)))
        a, b = sigma(3, a), sigma(3, b)
    return arcs


def in_vassal(gap: QuadGap, alpha: Angle, arcs: Optional[list[Arc]] = None) -> bool:
    """Exact membership test for the vassal vertex set (finite orbit check)."""
    if arcs is None:
        arcs = _vassal_arcs(gap)
    k = len(arcs)
    pre, per = orbit_period(3, alpha)
    x = alpha
    # the orbit condition is k-periodic in n, so pre + lcm-ish bound suffices;
    # checking pre + per * k steps covers every (orbit point, phase) pair
    for n in range(pre + per * k):
        if not arcs[n % k].contains(x):
            return False
        x = sigma(3, x)
    return True


def vassal(gap: QuadGap, depth: int) -> VassalGap:
    """Vertex sample of the vassal gap to the given itinerary depth.

    Pulls the major endpoints back under the k-th tripling iterate, keeping
    only branches that respect the defining arc condition at every
    intermediate step.
    """
    if gap.gap_type is not GapType.PERIODIC:
        raise WrongTypeError("vassal gaps exist only for periodic-type seniors")
    arcs = _vassal_arcs(gap)
    k = len(arcs)
    seeds = {arcs[0].start, arcs[0].end}
    collected = set(seeds)
    current = set(seeds)
    for _ in range(depth):
        nxt = set()
        for y in current:
            # pull back k single steps, step n landing inside arcs[n]
            layer = {y}
            for n in range(k - 1, -1, -1):
                layer = {
                    x
                    for z in layer
                    for x in _pullbacks_in_arc(z, arcs[n])
                }
            nxt.update(layer)
        current = nxt
        collected.update(nxt)
    return VassalGap(senior=gap, period=k, sample=tuple(sort_circular(collected)))


def _psi_cuts(gap: QuadGap) -> tuple[Angle, Angle]:
    """Cut points of the binary partition behind the collapsing projection.

    The partition boundary must be forward invariant (like {0, 1/2} for
    doubling), so it is cut at the tripling-fixed vertex z (0 when trapped,
    else 1/2) and at the last tripling-preimage of z that is again a vertex.
    Points of (z, c] read symbol 0 and points of (c, z] symbol 1; reading
    boundary orbit points on their negative side makes both endpoints of
    every collapsed edge produce the same expansion.
    """
    z = Angle(0) if is_vertex(gap, Angle(0)) else Angle(1, 2)
    if not is_vertex(gap, z):
        raise NotAVertexError("gap traps neither 0 nor 1/2; no partition anchor")
    cut = None
    for third in (ONE_THIRD, TWO_THIRDS):
        if is_vertex(gap, z + third):
            cut = z + third
    assert cut is not None, "fixed vertex has no second preimage in the gap"
    return z, cut


def _symbol_at(cuts: tuple[Angle, Angle], x: Angle) -> int:
    z, c = cuts
    if x == c or in_open_arc(x, z, c):
        return 0
    return 1


def itinerary_fraction(gap: QuadGap, alpha: Angle) -> Fraction:
    """The binary itinerary of alpha read as a base-2 expansion, in [0, 1].

    Exact: the orbit is eventually periodic, so the expansion is preperiodic
    and sums to a fraction.  The value 1 (itinerary all-ones) is the wrap
    representation of the angle 0.
    """
    if not is_vertex(gap, alpha):
        raise NotAVertexError(f"{alpha} is not a vertex of the gap at {gap.generator}")
    cuts = _psi_cuts(gap)
    seen: dict[Angle, int] = {}
    symbols: list[int] = []
    x = alpha
    while x not in seen:
        seen[x] = len(symbols)
        symbols.append(_symbol_at(cuts, x))
        x = sigma(3, x)
    start = seen[x]
    pre, cycle = symbols[:start], symbols[start:]
    value = Fraction(0)
    for i, s in enumerate(pre):
        value += Fraction(s, 2 ** (i + 1))
    cyc_num = 0
    for s in cycle:
        cyc_num = 2 * cyc_num + s
    value += Fraction(cyc_num, (2 ** len(cycle) - 1) * 2 ** len(pre))
    return value


def semiconjugacy_psi(gap: QuadGap, alpha: Angle) -> Angle:
    """Collapse the gap onto the circle, conjugating tripling to doubling.

    psi(sigma_3(alpha)) == sigma_2(psi(alpha)) for every vertex alpha, and
    both endpoints of any edge of the gap share their psi value; isolated
    caterpillar vertices inherit the constant value of the hole they sit in.
    """
    return Angle(itinerary_fraction(gap, alpha))
