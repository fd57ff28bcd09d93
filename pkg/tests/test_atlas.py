import random
from fractions import Fraction

import pytest

from cubioid.angles import Angle, Chord, forward_orbit, in_open_arc, orbit_period
from cubioid.atlas import (
    MAX_PERIOD_GUARD,
    QAtlas,
    enumerate_holes,
    hole_containing,
    hole_with_major,
    render_q,
)
from cubioid.errors import BoundExceededError


def H(t1, t2):
    return (Angle.parse(t1), Angle.parse(t2))


def test_period_one_ground_truth():
    atlas = enumerate_holes(1)
    got = {(h.theta1, h.theta2) for h in atlas.holes}
    assert got == {H("1/6", "1/3"), H("2/3", "5/6")}
    for h in atlas.holes:
        assert h.major == Chord(Angle(0), Angle(1, 2))
        assert h.period == 1


def test_period_two_holes():
    atlas = enumerate_holes(2)
    per2 = {(h.theta1, h.theta2) for h in atlas.holes if h.period == 2}
    assert H("1/24", "1/12") in per2
    assert H("13/24", "7/12") in per2
    assert per2 == {
        H("1/24", "1/12"),
        H("13/24", "7/12"),
        H("5/12", "11/24"),
        H("11/12", "23/24"),
    }
    majors = {
        (h.theta1, h.theta2): h.major for h in atlas.holes if h.period == 2
    }
    assert majors[H("1/24", "1/12")] == Chord(Angle(3, 8), Angle(3, 4))
    assert majors[H("13/24", "7/12")] == Chord(Angle(7, 8), Angle(1, 4))


def test_guard():
    with pytest.raises(BoundExceededError):
        enumerate_holes(MAX_PERIOD_GUARD + 1)
    with pytest.raises(ValueError):
        enumerate_holes(0)


def test_hole_containing_examples():
    atlas = enumerate_holes(3)
    h = hole_containing(atlas, Angle(1, 5))
    assert h is not None and (h.theta1, h.theta2) == H("1/6", "1/3")
    assert hole_containing(atlas, Angle(0)) is None
    h = hole_containing(atlas, Angle(1, 20))
    assert h is not None and (h.theta1, h.theta2) == H("1/24", "1/12")


def test_holes_disjoint_pairwise():
    atlas = enumerate_holes(6)
    holes = atlas.holes
    for i in range(len(holes)):
        for j in range(i + 1, len(holes)):
            a, b = holes[i], holes[j]
            # two open arcs are disjoint iff neither endpoint is inside the
            # other and they are not nested; endpoints here are distinct
            assert not a.contains(b.theta1)
            assert not a.contains(b.theta2)
            assert not b.contains(a.theta1)
            assert not b.contains(a.theta2)


def test_major_endpoints_periodic_and_orbits_avoid_hole():
    atlas = enumerate_holes(5)
    for h in atlas.holes:
        a, b = h.major_arc
        assert orbit_period(3, a) == (0, h.period)
        assert orbit_period(3, b) == (0, h.period)
        for x in forward_orbit(3, a) + forward_orbit(3, b):
            assert not in_open_arc(x, a, b)
        # hole endpoints are preperiodic or periodic
        assert orbit_period(3, h.theta1)[1] >= 1
        # exact hole length 1/(3*(3^q - 1))
        assert h.length == Fraction(1, 3 * (3**h.period - 1))


def test_half_turn_symmetry_exhaustive():
    atlas = enumerate_holes(6)
    half = Angle(1, 2)
    pairs = {(h.theta1, h.theta2) for h in atlas.holes}
    for t1, t2 in pairs:
        assert (t1 + half, t2 + half) in pairs


def test_hole_length_sum_increasing_and_bounded():
    prev = Fraction(0)
    for q in range(1, 7):
        atlas = enumerate_holes(q)
        total = sum((h.length for h in atlas.holes), Fraction(0))
        assert prev < total < 1
        prev = total


def test_hole_with_major_orientation():
    atlas = enumerate_holes(1)
    diam = Chord(Angle(0), Angle(1, 2))
    upper = hole_with_major(atlas, diam, oriented_start=Angle(1, 2))
    lower = hole_with_major(atlas, diam, oriented_start=Angle(0))
    assert (upper.theta1, upper.theta2) == H("1/6", "1/3")
    assert (lower.theta1, lower.theta2) == H("2/3", "5/6")


def test_render_q():
    atlas1 = enumerate_holes(1)
    svg = render_q(atlas1, 256)
    assert svg.count("<line") == 2
    empty = QAtlas(max_period=0, holes=())
    assert render_q(empty, 64).count("<line") == 0
    atlas3 = enumerate_holes(3)
    assert render_q(atlas3, 128).count("<line") == len(atlas3.holes)
    assert render_q(atlas3, 128) == render_q(atlas3, 128)
    with pytest.raises(ValueError):
        render_q(atlas1, 32)
