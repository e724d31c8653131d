"""Special triangles: a hole edge plus an apex on another ring, forming an
empty triangle inside the region.

The search is an exhaustive exact scan over (hole, edge, apex) candidates.
Every polygon with at least one hole has such a triangle, so the scan always
succeeds on valid input.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from .cutting import CutPolygon, Entry, cut_region_position, cut_sees, in_own_wedge, lift
from .errors import NoSpecialTriangleFoundError
from .geometry import (
    RegionPosition,
    Point,
    cross,
    direction_strictly_inside_angle,
    open_triangles_overlap,
    point_in_closed_triangle,
    segments_properly_cross,
)
from .polygon import PolygonWithHoles, VertexId


@dataclass(frozen=True)
class SpecialTriangle:
    apex: Entry
    base_hole: int
    base_edge: Tuple[Entry, Entry]

    @property
    def points(self) -> Tuple[Point, Point, Point]:
        return self.apex.point, self.base_edge[0].point, self.base_edge[1].point

    @property
    def vertex_ids(self) -> Tuple[VertexId, VertexId, VertexId]:
        return self.apex.vid, self.base_edge[0].vid, self.base_edge[1].vid

    def area(self):
        a, b, c = self.points
        return abs(cross(a, b, c)) / 2


def _triangle_is_empty(cp: CutPolygon, corners: Tuple[Entry, Entry, Entry]) -> bool:
    """Emptiness of a counter-clockwise triangle of entries in the cut polygon.

    Rejects the triangle if a vertex lies in it (away from the corners), a
    ring edge crosses a side, a ring edge leaves a corner coordinate into the
    interior, a corner entry does not own the triangle's angle, or it
    overlaps a triangle that was already cut away.
    """
    pts = tuple(e.point for e in corners)
    A, B, C = pts
    corner_keys = {e.key for e in corners}
    at_corner = {A: (B, C), B: (C, A), C: (A, B)}

    for e in cp.entries:
        if e.point in at_corner:
            first, second = at_corner[e.point]
            for nb in cp.neighbors(e):
                if direction_strictly_inside_angle(e.point, first, second, nb.point):
                    return False
            if e.key in corner_keys:
                if not (in_own_wedge(cp, e, first) and in_own_wedge(cp, e, second)):
                    return False
        elif point_in_closed_triangle(e.point, A, B, C):
            return False

    sides = ((A, B), (B, C), (C, A))
    for u, v in cp.chain_edges:
        for s, t in sides:
            if segments_properly_cross(u.point, v.point, s, t):
                return False
    for tri in cp.removed:
        if open_triangles_overlap(pts, tri):
            return False
    return True


def is_special_cut(cp: CutPolygon, apex: Entry, b: Entry, c: Entry) -> bool:
    """Special-triangle test over a cut polygon; ``b -> c`` in ring order."""
    base = cp.ring_of(b)
    if base == 0 or cp.ring_of(c) != base:
        raise ValueError("base edge must lie on a hole")
    if cp.neighbors(b)[1].key != c.key:
        raise ValueError("base must be a ring edge b -> c")
    if cp.ring_of(apex) == base:
        return False
    # region lies left of every directed ring edge
    if cross(b.point, c.point, apex.point) <= 0:
        return False
    if not _triangle_is_empty(cp, (b, c, apex)):
        return False
    if not (cut_sees(cp, apex, b) and cut_sees(cp, apex, c)):
        return False
    a, p, q = apex.point, b.point, c.point
    centroid = Point((a.x + p.x + q.x) / 3, (a.y + p.y + q.y) / 3)
    return cut_region_position(cp, centroid) is RegionPosition.INSIDE


def is_special(poly: Union[PolygonWithHoles, CutPolygon], apex, b, c) -> bool:
    """Is (apex, b, c) a special triangle?

    ``poly`` is either a validated polygon (then ``apex``, ``b``, ``c`` are
    vertex ids) or a cut polygon (entries or vertex ids that occur once).
    ``b`` and ``c`` must be consecutive on a hole, in either order.
    """
    cp = lift(poly) if isinstance(poly, PolygonWithHoles) else poly
    apex, b, c = (_as_entry(cp, x) for x in (apex, b, c))
    if cp.neighbors(b)[1].key != c.key:
        b, c = c, b
    return is_special_cut(cp, apex, b, c)


def _as_entry(cp, x):
    if isinstance(x, Entry):
        return cp.entry(x.key)
    found = cp.entries_of(VertexId(*x))
    if len(found) != 1:
        raise ValueError(f"vertex {x!r} has {len(found)} entries; pass an Entry")
    return found[0]


def _candidates(cp: CutPolygon):
    for label in cp.hole_labels:
        ring = cp.rings[label]
        apexes = sorted((e for e in cp.entries if cp.ring_of(e) != label),
                        key=lambda e: (e.vid, e.key))
        for j, b in enumerate(ring):
            c = ring[(j + 1) % len(ring)]
            for apex in apexes:
                yield label, apex, b, c


def find_special_triangle(cp: Union[CutPolygon, PolygonWithHoles]) -> SpecialTriangle:
    """First special triangle in scan order: hole label, edge position, apex
    vertex id (ties between copies of a split vertex by entry key)."""
    if isinstance(cp, PolygonWithHoles):
        cp = lift(cp)
    if cp.h < 1:
        raise ValueError("polygon has no holes")
    for label, apex, b, c in _candidates(cp):
        if is_special_cut(cp, apex, b, c):
            return SpecialTriangle(apex, label, (b, c))
    raise NoSpecialTriangleFoundError(
        f"no special triangle among {cp.h} holes and {cp.m} entries", state=cp)


def enumerate_special_triangles(cp: Union[CutPolygon, PolygonWithHoles]) -> List[SpecialTriangle]:
    """All special triangles, in scan order. Meant for tests and fixtures."""
    if isinstance(cp, PolygonWithHoles):
        cp = lift(cp)
    return [SpecialTriangle(apex, label, (b, c))
            for label, apex, b, c in _candidates(cp) if is_special_cut(cp, apex, b, c)]
