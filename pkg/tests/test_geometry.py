import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vertexguards.errors import DegenerateSegmentError
from vertexguards.geometry import (
    Orientation,
    RegionPosition,
    on_segment,
    orient,
    point_in_region,
    pt,
    scalar,
    segment_in_region,
    segments_properly_cross,
)

from conftest import generated

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
points = st.builds(pt, rationals, rationals)


def test_scalar_parsing_is_exact():
    assert scalar("-0.5") == scalar("-1/2") == Fraction(-1, 2)
    assert scalar(3) == 3
    assert scalar(" 7/3 ") * 3 == 7
    with pytest.raises(TypeError):
        scalar(True)


@pytest.mark.parametrize("p, q, r, expected", [
    ((0, 0), (1, 0), (0, 1), Orientation.COUNTERCLOCKWISE),
    ((0, 0), (1, 0), (2, 0), Orientation.COLLINEAR),
    ((0, 0), (0, 1), (1, 0), Orientation.CLOCKWISE),
])
def test_orient(p, q, r, expected):
    assert orient(pt(*p), pt(*q), pt(*r)) is expected


@pytest.mark.parametrize("p, expected", [((1, 0), True), ((0, 0), True), ((1, 1), False)])
def test_on_segment(p, expected):
    assert on_segment(pt(*p), pt(0, 0), pt(2, 0)) is expected


def test_on_segment_rejects_degenerate():
    with pytest.raises(DegenerateSegmentError):
        on_segment(pt(1, 1), pt(0, 0), pt(0, 0))


@pytest.mark.parametrize("a, b, c, d, expected", [
    ((0, 0), (2, 2), (0, 2), (2, 0), True),
    ((0, 0), (1, 1), (2, 2), (3, 3), False),
    ((0, 0), (2, 0), (1, 0), (1, 2), False),
])
def test_segments_properly_cross(a, b, c, d, expected):
    assert segments_properly_cross(pt(*a), pt(*b), pt(*c), pt(*d)) is expected


def test_segments_properly_cross_rejects_degenerate():
    with pytest.raises(DegenerateSegmentError):
        segments_properly_cross(pt(0, 0), pt(0, 0), pt(1, 0), pt(1, 2))


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(p, r, q)


@pytest.mark.parametrize("p, expected", [
    ((5, 0), RegionPosition.INSIDE),
    ((5, -1), RegionPosition.OUTSIDE),
    ((0, 0), RegionPosition.BOUNDARY),
])
def test_point_in_region_two_hole(two_hole, p, expected):
    assert point_in_region(two_hole, pt(*p)) is expected


@pytest.mark.parametrize("p, q, expected", [
    ((5, 2), (4, "-0.5"), True),
    ((5, 2), (5, -2), False),
    ((0, 0), (5, 2), True),
])
def test_segment_in_region_two_hole(two_hole, p, q, expected):
    assert segment_in_region(two_hole, pt(*p), pt(*q)) is expected


def test_segment_in_region_rejects_identical(two_hole):
    with pytest.raises(DegenerateSegmentError):
        segment_in_region(two_hole, pt(0, 0), pt(0, 0))


def test_grazing_and_running_along_edges():
    from vertexguards.polygon import validate

    # square with a square hole; the line y=2 runs along the hole's bottom edge
    poly = validate([(0, 0), (10, 0), (10, 10), (0, 10)], [[(2, 2), (4, 2), (4, 4), (2, 4)]])
    assert segment_in_region(poly, pt(0, 2), pt(10, 2))
    assert segment_in_region(poly, pt(0, 0), pt(6, 6)) is False  # diagonal through the hole
    # x+y=6 joins opposite corners of the hole, so it crosses it
    assert segment_in_region(poly, pt(0, 6), pt(6, 0)) is False
    # x+y=8 only grazes the corner (4, 4)
    assert segment_in_region(poly, pt(0, 8), pt(8, 0))
    assert segment_in_region(poly, pt(1, 3), pt(3, 5))  # grazes (2, 4)
    assert segment_in_region(poly, pt(1, 3), pt(5, 3)) is False


def _ray_cast_inside(ring, p):
    """Even-odd ray casting with explicit fraction intersections."""
    px, py = Fraction(p.x), Fraction(p.y)
    inside = False
    k = len(ring)
    for i in range(k):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % k]
        x1, y1, x2, y2 = map(Fraction, (x1, y1, x2, y2))
        if (y1 > py) != (y2 > py):
            xint = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if xint > px:
                inside = not inside
    return inside


def _oracle_position(poly, p):
    for ring in poly.rings:
        k = len(ring)
        for i in range(k):
            a, b = ring[i], ring[(i + 1) % k]
            if on_segment(p, a, b):
                return RegionPosition.BOUNDARY
    if not _ray_cast_inside(poly.outer, p):
        return RegionPosition.OUTSIDE
    if any(_ray_cast_inside(h, p) for h in poly.holes):
        return RegionPosition.OUTSIDE
    return RegionPosition.INSIDE


@pytest.mark.parametrize("seed", [1, 2, 3, 7, 11])
def test_point_in_region_matches_ray_casting(seed):
    poly = generated(seed)
    rng = random.Random(seed)
    verts = [p for ring in poly.rings for p in ring]
    for _ in range(1000):
        if rng.random() < 0.2:
            # points on vertex rows/columns stress the half-open crossing rule
            v = rng.choice(verts)
            p = pt(Fraction(rng.randint(-20, 220 * 4), 4), v.y)
        else:
            p = pt(Fraction(rng.randint(-40, 2400), 11), Fraction(rng.randint(-40, 2400), 11))
        assert point_in_region(poly, p) is _oracle_position(poly, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 39), st.data())
def test_segment_in_region_symmetric(seed, data):
    poly = generated(seed)
    verts = [p for ring in poly.rings for p in ring]
    p = data.draw(st.sampled_from(verts))
    q = data.draw(st.sampled_from(verts).filter(lambda v: v != p))
    assert segment_in_region(poly, p, q) == segment_in_region(poly, q, p)


@pytest.mark.parametrize("seed", range(12))
def test_ring_edges_in_region(seed):
    poly = generated(seed)
    for a, b in poly.edges:
        assert segment_in_region(poly, a, b)
