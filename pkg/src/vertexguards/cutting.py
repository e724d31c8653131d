"""Apex splitting: turning a polygon with h holes into one with h - 1.

A split keeps both apex copies at the same coordinate. The two copies are
kept apart combinatorially: each entry only sees through its own region
wedge, the pinch coordinate cannot be passed through, and the interior of
every special triangle that has been cut away is excluded from the region.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, NamedTuple, Set, Tuple

from .errors import ApexOnBaseHoleError, NotSpecialError
from .geometry import (
    Point,
    RegionPosition,
    cross,
    direction_in_wedge,
    point_in_closed_triangle,
    point_in_open_triangle,
    point_in_region,
    ring_edges,
    segment_in_region,
    segment_meets_open_triangle,
    signed_area,
)
from .polygon import PolygonWithHoles, VertexId


class Entry(NamedTuple):
    """One occurrence of an original vertex on a ring of the cut polygon.

    ``key`` is unique per entry; original vertices keep the key they were
    given by :func:`lift`, split copies get fresh keys.
    """

    key: int
    vid: VertexId
    point: Point

    def __repr__(self):
        return f"Entry({self.key}, {self.vid!r})"


@dataclass(frozen=True)
class CutPolygon:
    original: PolygonWithHoles
    rings: Dict[int, Tuple[Entry, ...]]
    slits: Tuple[Tuple[Entry, Entry], ...] = ()
    pinches: Tuple[Point, ...] = ()
    removed: Tuple[Tuple[Point, Point, Point], ...] = ()
    next_key: int = 0

    @property
    def h(self) -> int:
        return len(self.rings) - 1

    @property
    def hole_labels(self):
        return sorted(k for k in self.rings if k != 0)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rings.values())

    @cached_property
    def entries(self) -> Tuple[Entry, ...]:
        return tuple(sorted((e for r in self.rings.values() for e in r), key=lambda e: e.key))

    @cached_property
    def provenance(self) -> Dict[int, VertexId]:
        return {e.key: e.vid for e in self.entries}

    @cached_property
    def _where(self):
        return {e.key: (label, i) for label, ring in self.rings.items()
                for i, e in enumerate(ring)}

    def ring_of(self, entry: Entry) -> int:
        return self._where[entry.key][0]

    def entry(self, key: int) -> Entry:
        label, i = self._where[key]
        return self.rings[label][i]

    def neighbors(self, entry: Entry) -> Tuple[Entry, Entry]:
        """(predecessor, successor) of ``entry`` on its ring."""
        label, i = self._where[entry.key]
        ring = self.rings[label]
        return ring[i - 1], ring[(i + 1) % len(ring)]

    def entries_of(self, vid: VertexId):
        return [e for e in self.entries if e.vid == vid]

    def point_rings(self):
        return [tuple(e.point for e in self.rings[k]) for k in sorted(self.rings)]

    @cached_property
    def chain_edges(self):
        return [(u, v) for k in sorted(self.rings) for u, v in ring_edges(self.rings[k])]

    def area(self):
        return sum(signed_area([e.point for e in r]) for r in self.rings.values())


def lift(poly: PolygonWithHoles) -> CutPolygon:
    """Wrap a validated polygon as a cut polygon with no cuts yet."""
    rings = {}
    key = 0
    for r, ring in enumerate(poly.rings):
        entries = []
        for i, p in enumerate(ring):
            entries.append(Entry(key, VertexId(r, i), p))
            key += 1
        rings[r] = tuple(entries)
    return CutPolygon(poly, rings, next_key=key)


def in_own_wedge(cp: CutPolygon, entry: Entry, target: Point) -> bool:
    prev, nxt = cp.neighbors(entry)
    return direction_in_wedge(entry.point, nxt.point, prev.point, target)


def cut_region_position(cp: CutPolygon, p: Point) -> RegionPosition:
    """Classify a point against the closed region of the cut polygon."""
    pos = point_in_region(cp.original, p)
    if pos is RegionPosition.OUTSIDE:
        return pos
    for tri in cp.removed:
        if point_in_open_triangle(p, *tri):
            return RegionPosition.OUTSIDE
        if pos is RegionPosition.INSIDE and point_in_closed_triangle(p, *tri):
            pos = RegionPosition.BOUNDARY
    return pos


def cut_segment_in_region(cp: CutPolygon, p: Point, q: Point) -> bool:
    """Point-level visibility in the cut polygon, ignoring entry wedges."""
    if not segment_in_region(cp.original, p, q):
        return False
    for tri in cp.removed:
        if segment_meets_open_triangle(p, q, *tri):
            return False
    for z in cp.pinches:
        if z != p and z != q and cross(p, q, z) == 0 and _between(z, p, q):
            return False
    return True


def _between(z, p, q):
    return (min(p[0], q[0]) <= z[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= z[1] <= max(p[1], q[1]))


def cut_sees(cp: CutPolygon, u: Entry, v: Entry) -> bool:
    """Visibility between two entries of the cut polygon.

    Stricter than visibility in the original polygon: the segment must leave
    ``u`` and arrive at ``v`` through their own wedges, must not enter a
    removed special triangle and must not pass through a pinch point.
    """
    if u.key == v.key:
        raise ValueError("an entry does not see itself")
    if u.point == v.point:
        return False
    if not in_own_wedge(cp, u, v.point) or not in_own_wedge(cp, v, u.point):
        return False
    return cut_segment_in_region(cp, u.point, v.point)


def split_apex(cp: CutPolygon, tri, check: bool = True):
    """Split the apex of special triangle ``tri`` and splice the base hole
    into the apex's ring.

    Returns the new cut polygon and the mapping ``{new_key: VertexId}`` for
    the apex copy that was created. The copy adjacent to ``b`` keeps the old
    key; the copy adjacent to ``c`` is new.
    """
    from .special import is_special_cut

    apex = cp.entry(tri.apex.key)
    b = cp.entry(tri.base_edge[0].key)
    c = cp.entry(tri.base_edge[1].key)
    base = cp.ring_of(b)
    apex_ring = cp.ring_of(apex)
    if apex_ring == base:
        raise ApexOnBaseHoleError(f"apex {apex!r} lies on base hole {base}")
    if check and not is_special_cut(cp, apex, b, c):
        raise NotSpecialError(f"{tri!r} is not a special triangle of this polygon")

    hole = cp.rings[base]
    j = hole.index(b)
    k = len(hole)
    if hole[(j + 1) % k] != c:
        raise NotSpecialError("base edge must follow ring order b -> c")
    around = tuple(hole[(j + 1 + s) % k] for s in range(k))  # c ... b
    a1 = apex
    a2 = Entry(cp.next_key, apex.vid, apex.point)

    ring = cp.rings[apex_ring]
    i = ring.index(apex)
    new_ring = ring[:i] + (a2,) + around + (a1,) + ring[i + 1:]
    rings = {label: r for label, r in cp.rings.items() if label != base}
    rings[apex_ring] = new_ring
    pinches = cp.pinches if apex.point in cp.pinches else cp.pinches + (apex.point,)
    new = CutPolygon(
        cp.original,
        rings,
        slits=cp.slits + ((a1, b), (a2, c)),
        pinches=pinches,
        removed=cp.removed + ((apex.point, b.point, c.point),),
        next_key=cp.next_key + 1,
    )
    return new, {a2.key: apex.vid}


def map_guards_back(mapping: Dict[int, VertexId], guards: Iterable) -> Set[VertexId]:
    """Image of cut-polygon guards on the original polygon.

    ``guards`` may be entries or entry keys. Copies of a split apex collapse
    onto a single original vertex.
    """
    out = set()
    for g in guards:
        key = g.key if isinstance(g, Entry) else g
        out.add(mapping[key])
    return out
