"""Validated polygons with holes and their vertex visibility graphs."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    CollinearVerticesError,
    DuplicatePointError,
    HoleOutsideOuterError,
    RingsIntersectError,
    SelfIntersectingRingError,
    TooFewVerticesError,
)
from .geometry import (
    Point,
    cross,
    pt,
    ring_edges,
    ring_winding,
    segment_in_region,
    segments_intersect,
    signed_area,
)


class VertexId(NamedTuple):
    """Ring 0 is the outer boundary, ring k >= 1 is hole k."""

    ring: int
    index: int

    def __repr__(self):
        return f"v{self.ring}.{self.index}"


Ring = Tuple[Point, ...]


@dataclass(frozen=True)
class PolygonWithHoles:
    """Outer ring counter-clockwise, hole rings clockwise.

    Build instances through :func:`validate`; the constructor does not check
    anything.
    """

    outer: Ring
    holes: Tuple[Ring, ...] = ()

    @property
    def rings(self) -> Tuple[Ring, ...]:
        return (self.outer,) + tuple(self.holes)

    @property
    def n(self) -> int:
        return len(self.outer) + sum(len(h) for h in self.holes)

    @property
    def h(self) -> int:
        return len(self.holes)

    @cached_property
    def edges(self):
        return [e for ring in self.rings for e in ring_edges(ring)]

    @cached_property
    def vertex_ids(self) -> Tuple[VertexId, ...]:
        return tuple(VertexId(r, i) for r, ring in enumerate(self.rings)
                     for i in range(len(ring)))

    def point(self, v: VertexId) -> Point:
        return self.rings[v.ring][v.index]

    def ring_edge_ids(self, ring: Optional[int] = None):
        """Directed edges (u, v) as vertex id pairs, following ring order."""
        rings = range(len(self.rings)) if ring is None else (ring,)
        out = []
        for r in rings:
            k = len(self.rings[r])
            out.extend((VertexId(r, i), VertexId(r, (i + 1) % k)) for i in range(k))
        return out

    def neighbors_on_ring(self, v: VertexId):
        k = len(self.rings[v.ring])
        return VertexId(v.ring, (v.index - 1) % k), VertexId(v.ring, (v.index + 1) % k)

    def area(self):
        return signed_area(self.outer) + sum(signed_area(h) for h in self.holes)


def _normalize(ring, ccw):
    """Reverse in place of the first vertex if the orientation is wrong."""
    area = signed_area(ring)
    if (area > 0) != ccw:
        ring = (ring[0],) + tuple(reversed(ring[1:]))
    return ring


def _check_ring(ring, r):
    if len(ring) < 3:
        raise TooFewVerticesError(f"ring {r} has {len(ring)} vertices, need at least 3", ring=r)
    seen = {}
    for i, p in enumerate(ring):
        if p in seen:
            raise DuplicatePointError(
                f"ring {r}: vertex {i} repeats vertex {seen[p]} at {p!r}", ring=r, vertex=i)
        seen[p] = i
    k = len(ring)
    for i in range(k):
        if cross(ring[i - 1], ring[i], ring[(i + 1) % k]) == 0:
            raise CollinearVerticesError(
                f"ring {r}: vertex {i} at {ring[i]!r} is collinear with its neighbours",
                ring=r, vertex=i)
    edges = ring_edges(ring)
    for i, j in combinations(range(k), 2):
        if j == i + 1 or (i == 0 and j == k - 1):
            continue
        if segments_intersect(*edges[i], *edges[j]):
            raise SelfIntersectingRingError(
                f"ring {r}: edge {i} intersects edge {j}", ring=r, vertex=i)


def validate(outer: Iterable, holes: Iterable[Iterable] = ()) -> PolygonWithHoles:
    """Check raw rings and return a canonical :class:`PolygonWithHoles`.

    Coordinates may be anything :func:`geometry.scalar` accepts. Rings given
    in the wrong orientation are reversed (keeping their first vertex).
    """
    rings = [tuple(p if isinstance(p, Point) else pt(*p) for p in outer)]
    rings += [tuple(p if isinstance(p, Point) else pt(*p) for p in hole) for hole in holes]
    for r, ring in enumerate(rings):
        _check_ring(ring, r)
    rings = [_normalize(ring, ccw=(r == 0)) for r, ring in enumerate(rings)]

    for r1, r2 in combinations(range(len(rings)), 2):
        for i, e in enumerate(ring_edges(rings[r1])):
            for f in ring_edges(rings[r2]):
                if segments_intersect(*e, *f):
                    raise RingsIntersectError(
                        f"ring {r1} edge {i} touches ring {r2}", ring=r1, vertex=i)
    outer_ring = rings[0]
    for r in range(1, len(rings)):
        probe = rings[r][0]
        if ring_winding(outer_ring, probe) == 0:
            raise HoleOutsideOuterError(f"hole {r} is not inside the outer ring", ring=r)
        for other in range(1, len(rings)):
            if other != r and ring_winding(rings[other], probe) != 0:
                raise HoleOutsideOuterError(f"hole {r} lies inside hole {other}", ring=r)
    return PolygonWithHoles(rings[0], tuple(rings[1:]))


def vertices_see(poly: PolygonWithHoles, u: VertexId, v: VertexId) -> bool:
    return segment_in_region(poly, poly.point(u), poly.point(v))


@dataclass(frozen=True)
class VisibilityGraph:
    vertices: Tuple[VertexId, ...]
    adjacency: Dict[VertexId, FrozenSet[VertexId]] = field(repr=False)

    def neighbors(self, v) -> FrozenSet[VertexId]:
        return self.adjacency[v]

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency[u]

    def edges(self):
        return sorted((u, v) for u in self.vertices for v in self.adjacency[u] if u < v)

    def __len__(self):
        return len(self.vertices)


def visibility_graph(poly: PolygonWithHoles) -> VisibilityGraph:
    ids = poly.vertex_ids
    ring_pairs = {frozenset(e) for e in poly.ring_edge_ids()}
    adj = {v: set() for v in ids}
    for u, v in combinations(ids, 2):
        if frozenset((u, v)) in ring_pairs or vertices_see(poly, u, v):
            adj[u].add(v)
            adj[v].add(u)
    return VisibilityGraph(ids, {v: frozenset(s) for v, s in adj.items()})


def is_dominating(graph, guards: Iterable) -> Tuple[bool, Optional[VertexId]]:
    """Return ``(True, None)`` if ``guards`` dominates ``graph``, otherwise
    ``(False, w)`` with ``w`` the first vertex that nothing guards."""
    guards = set(guards)
    unknown = guards.difference(graph.vertices)
    if unknown:
        raise ValueError(f"guards not in graph: {sorted(unknown)}")
    for v in graph.vertices:
        if v not in guards and not (graph.neighbors(v) & guards):
            return False, v
    return True, None


def two_hole_rings():
    """Coordinates of the two-hole example polygon used throughout the tests
    and demos, in the orientation they are usually drawn (outer clockwise)."""
    outer = [(0, 0), (5, 2), (7, 0), (9, 1), (10, -3), (5, -3), (3, -6), (0, -4), (1, -2)]
    holes = [[(4, "-0.5"), (6, "-0.5"), (5, -2)], [(1, -4), (4, -4), (2, -5)]]
    return outer, holes
