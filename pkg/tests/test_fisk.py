import pytest

from vertexguards.cutting import Entry, cut_region_position, cut_sees, lift
from vertexguards.errors import DualNotTreeError, TriangulationFailedError
from vertexguards.fisk import Triangulation, select_guards, three_color, triangulate
from vertexguards.geometry import RegionPosition, Point, cross, pt
from vertexguards.pipeline import cut_all_holes
from vertexguards.polygon import VertexId, validate

from conftest import generated


def entries(points):
    return [Entry(i, VertexId(0, i), pt(*p)) for i, p in enumerate(points)]


PENTAGON = [(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]
HEXAGON = [(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)]


def test_triangle_is_itself():
    t = triangulate(lift(validate([(0, 0), (4, 0), (2, 3)])))
    assert len(t) == 1
    assert t.adjacency == {0: ()}


def test_convex_quadrilateral():
    t = triangulate(lift(validate([(0, 0), (4, 0), (5, 3), (1, 4)])))
    assert len(t) == 2
    assert len(t.diagonals()) == 1
    assert t.adjacency == {0: (1,), 1: (0,)}


def test_triangulate_requires_no_holes(minimal):
    with pytest.raises(ValueError):
        triangulate(lift(minimal))


def test_single_triangle_coloring():
    e = entries([(0, 0), (4, 0), (2, 3)])
    col = three_color(Triangulation((tuple(e),)))
    assert sorted(col.colors.values()) == [0, 1, 2]


def test_pentagon_fan_coloring():
    e = entries(PENTAGON)
    fan = Triangulation(((e[0], e[1], e[2]), (e[0], e[2], e[3]), (e[0], e[3], e[4])))
    col = three_color(fan)
    # by hand: root gets 0,1,2; then 3 is forced to 1 and 4 to 2
    assert col.colors == {0: 0, 1: 1, 2: 2, 3: 1, 4: 2}
    classes = [{x.key for x in c} for c in col.color_classes()]
    assert classes == [{0}, {1, 3}, {2, 4}]
    assert {x.key for x in select_guards(col)} == {0}


def test_disconnected_dual_is_rejected():
    e = entries([(0, 0), (4, 0), (2, 3), (10, 0), (14, 0), (12, 3)])
    t = Triangulation(((e[0], e[1], e[2]), (e[3], e[4], e[5])))
    with pytest.raises(DualNotTreeError):
        three_color(t)


def test_dual_cycle_is_rejected():
    # four triangles around a centre: the dual is a 4-cycle
    e = entries([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    c = e[4]
    t = Triangulation(((e[0], e[1], c), (e[1], e[2], c), (e[2], e[3], c), (e[3], e[0], c)))
    with pytest.raises(DualNotTreeError):
        three_color(t)


def test_convex_hexagon_guards():
    t = triangulate(lift(validate(HEXAGON)))
    assert len(t) == 4
    assert len(select_guards(three_color(t))) <= 2


def test_two_hole_after_both_cuts(two_hole):
    cp, cuts = cut_all_holes(two_hole)
    assert (cp.h, cp.m) == (0, 17)
    t = triangulate(cp)
    assert len(t) == 15
    removed = sum(c.triangle.area() for c in cuts)
    assert t.area() == cp.area()
    assert t.area() + removed == two_hole.area()
    assert len(select_guards(three_color(t))) <= 17 // 3


def test_triangulation_failure_carries_state():
    err = TriangulationFailedError("stuck", state="s")
    assert err.state == "s"


@pytest.mark.parametrize("seed", range(40))
def test_triangulation_laws(seed):
    poly = generated(seed)
    cp, _ = cut_all_holes(poly)
    t = triangulate(cp)
    assert len(t) == cp.m - 2
    assert t.area() == cp.area()
    for tri in t.triangles:
        a, b, c = (e.point for e in tri)
        assert cross(a, b, c) > 0
        centroid = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
        assert cut_region_position(cp, centroid) is RegionPosition.INSIDE
    for u, v in t.diagonals():
        assert cut_sees(cp, u, v)
    # every entry is used
    assert {e.key for tri in t.triangles for e in tri} == {e.key for e in cp.entries}

    col = three_color(t)
    for tri in t.triangles:
        assert {col.colors[e.key] for e in tri} == {0, 1, 2}
    chosen = select_guards(col)
    assert len(chosen) <= cp.m // 3
    assert sum(len(c) for c in col.color_classes()) == cp.m
    for tri in t.triangles:
        assert any(e in chosen for e in tri)
