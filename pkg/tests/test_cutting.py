import itertools
import random
from fractions import Fraction

import pytest

from vertexguards.cutting import (
    cut_region_position,
    cut_sees,
    lift,
    map_guards_back,
    split_apex,
)
from vertexguards.errors import ApexOnBaseHoleError, NotSpecialError
from vertexguards.geometry import RegionPosition, cross, pt, ring_winding, signed_area
from vertexguards.polygon import validate, vertices_see
from vertexguards.special import SpecialTriangle, find_special_triangle

from conftest import generated, vid_at


def only_entry(cp, vid):
    (e,) = cp.entries_of(vid)
    return e


def cut_delta(two_hole, n):
    cp = lift(two_hole)
    a, b, c = (only_entry(cp, n[k]) for k in "abc")
    # b -> c must follow ring order on the hole
    if cp.neighbors(b)[1] != c:
        b, c = c, b
    return cp, split_apex(cp, SpecialTriangle(a, 1, (b, c)))


def test_lift_counts(two_hole, minimal):
    cp = lift(two_hole)
    assert (cp.h, cp.m) == (2, 15)
    tri = lift(validate([(0, 0), (4, 0), (2, 3)]))
    assert (tri.h, tri.m) == (0, 3)
    assert (lift(minimal).h, lift(minimal).m) == (1, 6)


def test_cut_delta_counts_and_chain(two_hole, two_hole_named):
    _, (cp, mapping) = cut_delta(two_hole, two_hole_named)
    assert (cp.h, cp.m) == (1, 16)
    assert list(mapping.values()) == [two_hole_named["a"]]
    # read clockwise, as the example is usually drawn
    walk = [e.point for e in reversed(cp.rings[0])]
    expected = [pt(0, 0), pt(5, 2), pt(4, "-1/2"), pt(5, -2), pt(6, "-1/2"), pt(5, 2), pt(7, 0)]
    i = walk.index(pt(0, 0))
    assert (walk[i:] + walk[:i])[:7] == expected
    assert cp.pinches == (pt(5, 2),)
    assert len(cp.slits) == 2


def test_second_cut_reaches_n_plus_h(two_hole, two_hole_named):
    _, (cp, _) = cut_delta(two_hole, two_hole_named)
    n = two_hole_named
    b = only_entry(cp, n["b"])
    e, f = only_entry(cp, n["e"]), only_entry(cp, n["f"])
    if cp.neighbors(e)[1] != f:
        e, f = f, e
    cp2, _ = split_apex(cp, SpecialTriangle(b, 2, (e, f)))
    assert (cp2.h, cp2.m) == (0, 17)


def test_minimal_one_cut(minimal):
    cp, _ = split_apex(lift(minimal), find_special_triangle(minimal))
    assert (cp.h, cp.m) == (0, 7)


def test_slit_semantics_after_delta(two_hole, two_hole_named):
    _, (cp, mapping) = cut_delta(two_hole, two_hole_named)
    n = two_hole_named
    a1, a2 = cp.entries_of(n["a"])
    b, d = only_entry(cp, n["b"]), only_entry(cp, n["d"])
    assert not cut_sees(cp, a1, d)
    assert not cut_sees(cp, a2, d)
    # the copy next to b along the new boundary sees it
    near_b = a1 if b in cp.neighbors(a1) else a2
    assert cut_sees(cp, near_b, b)
    assert not cut_sees(cp, a1, a2)
    with pytest.raises(ValueError):
        cut_sees(cp, a1, a1)


def test_split_rejects_apex_on_base_hole(two_hole, two_hole_named):
    cp = lift(two_hole)
    n = two_hole_named
    b, c, d = (only_entry(cp, n[k]) for k in "bcd")
    if cp.neighbors(b)[1] != c:
        b, c = c, b
    with pytest.raises(ApexOnBaseHoleError):
        split_apex(cp, SpecialTriangle(d, 1, (b, c)))


def test_split_rejects_non_special(two_hole, two_hole_named):
    cp = lift(two_hole)
    n = two_hole_named
    far = only_entry(cp, vid_at(two_hole, 10, -3))
    e, f = only_entry(cp, n["e"]), only_entry(cp, n["f"])
    if cp.neighbors(e)[1] != f:
        e, f = f, e
    with pytest.raises(NotSpecialError):
        split_apex(cp, SpecialTriangle(far, 2, (e, f)))


def test_map_guards_back(two_hole, two_hole_named):
    _, (cp, mapping) = cut_delta(two_hole, two_hole_named)
    n = two_hole_named
    full = dict(cp.provenance)
    a1, a2 = cp.entries_of(n["a"])
    assert map_guards_back(full, {a1, a2}) == {n["a"]}
    b, d = only_entry(cp, n["b"]), only_entry(cp, n["d"])
    assert map_guards_back(full, {b, d}) == {n["b"], n["d"]}
    assert map_guards_back(full, set()) == set()
    assert map_guards_back(full, [a1.key]) == {n["a"]}


def all_cuts(poly):
    """Every intermediate cut polygon down to zero holes."""
    cp = lift(poly)
    out = [cp]
    while cp.h:
        cp, _ = split_apex(cp, find_special_triangle(cp))
        out.append(cp)
    return out


@pytest.mark.parametrize("seed", [s for s in range(60) if s % 4])
def test_count_law_and_walk(seed):
    poly = generated(seed)
    for step, cp in enumerate(all_cuts(poly)):
        assert cp.h == poly.h - step
        assert cp.m == poly.n + step
        keys = [e.key for ring in cp.rings.values() for e in ring]
        assert len(keys) == len(set(keys)) == cp.m
        assert set(cp.provenance.values()) == set(poly.vertex_ids)
        # area bookkeeping: cut region plus removed triangles is the polygon
        removed = sum(abs(cross(*t)) / 2 for t in cp.removed)
        assert cp.area() + removed == poly.area()


@pytest.mark.parametrize("seed", [1, 2, 3, 5, 6, 7, 10, 11, 14, 15])
def test_cut_sees_implies_vertices_see(seed):
    poly = generated(seed)
    for cp in all_cuts(poly)[1:]:
        for u, v in itertools.combinations(cp.entries, 2):
            if cut_sees(cp, u, v):
                assert u.point != v.point
                assert vertices_see(poly, u.vid, v.vid)
            assert cut_sees(cp, u, v) == cut_sees(cp, v, u)


def chain_winding(cp, p):
    return sum(ring_winding([e.point for e in ring], p) for ring in cp.rings.values())


def on_any_chain(cp, p):
    for u, v in cp.chain_edges:
        a, b = u.point, v.point
        if cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) \
                and min(a.y, b.y) <= p.y <= max(a.y, b.y):
            return True
    return False


@pytest.mark.parametrize("seed", [1, 3, 6, 7, 11, 15, 19, 23])
def test_region_matches_chain_winding(seed):
    # the boundary walk of the cut polygon encloses exactly its region
    poly = generated(seed)
    rng = random.Random(seed)
    for cp in all_cuts(poly):
        assert signed_area([e.point for e in cp.rings[0]]) > 0
        for _ in range(400):
            p = pt(Fraction(rng.randint(0, 2000), 9), Fraction(rng.randint(0, 2000), 9))
            if on_any_chain(cp, p):
                continue
            inside = chain_winding(cp, p) == 1
            pos = cut_region_position(cp, p)
            if pos is RegionPosition.BOUNDARY:
                continue
            assert inside == (pos is RegionPosition.INSIDE)
