"""Independent checkers for guard placements.

Coverage is computed exactly on every ring edge. A guard ``g`` sees the point
at parameter ``t`` of an edge iff the segment from ``g`` to that point stays
in the closed region; that status can only change where the moving segment
passes through a vertex, so it is enough to test those breakpoints and the
midpoints between them.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import TooLargeError
from .geometry import ONE, ZERO, Point, cross, lerp, point_in_closed_triangle, segment_in_region
from .polygon import PolygonWithHoles, VertexId, is_dominating, visibility_graph

Interval = Tuple[object, object]
Edge = Tuple[VertexId, VertexId]


def _sees_point(poly, g: Point, p: Point) -> bool:
    return g == p or segment_in_region(poly, g, p)


def breakpoints(poly: PolygonWithHoles, g: Point, a: Point, b: Point) -> List:
    """Sorted parameters on edge ab where the sight line from ``g`` passes
    through a polygon vertex, plus 0 and 1.

    Only vertices inside the closed triangle (g, a, b) can lie on a sight
    segment, so the rest are skipped.
    """
    ts = {ZERO, ONE}
    if cross(g, a, b) == 0:
        return sorted(ts)
    for ring in poly.rings:
        for v in ring:
            if v == g or not point_in_closed_triangle(v, g, a, b):
                continue
            # intersect line g-v with line a-b
            den = cross((0, 0), (v[0] - g[0], v[1] - g[1]), (b[0] - a[0], b[1] - a[1]))
            if den == 0:
                continue
            t = cross((0, 0), (v[0] - g[0], v[1] - g[1]), (g[0] - a[0], g[1] - a[1])) / den
            if ZERO <= t <= ONE:
                ts.add(t)
    return sorted(ts)


def visible_interval_set(poly: PolygonWithHoles, g: VertexId, edge: Edge) -> List[Interval]:
    """Maximal closed parameter intervals of ``edge`` visible from vertex ``g``."""
    gp = poly.point(g)
    a, b = poly.point(edge[0]), poly.point(edge[1])
    ts = breakpoints(poly, gp, a, b)
    # status at each breakpoint and on each open gap after it
    at = [_sees_point(poly, gp, lerp(a, b, t)) for t in ts]
    gap = [_sees_point(poly, gp, lerp(a, b, (t0 + t1) / 2)) for t0, t1 in zip(ts, ts[1:])]
    # the visible set is closed, so a visible gap makes its endpoints visible
    for i in range(len(gap)):
        if gap[i]:
            at[i] = at[i + 1] = True
    intervals = []
    start = None
    for i, t in enumerate(ts):
        if at[i] and start is None:
            start = t
        if start is not None and not (i < len(gap) and gap[i]):
            intervals.append((start, t))
            start = None
    return intervals


def merge_intervals(intervals: Iterable[Interval]) -> List[Interval]:
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


@dataclass(frozen=True)
class Gap:
    edge: Edge
    t0: object
    t1: object
    p0: Point
    p1: Point


@dataclass
class CoverageReport:
    covered: Dict[Edge, List[Interval]] = field(default_factory=dict)
    gaps: List[Gap] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.gaps


def _cover_edges(poly, guards, edges) -> CoverageReport:
    report = CoverageReport()
    guards = sorted(set(guards))
    for edge in edges:
        a, b = poly.point(edge[0]), poly.point(edge[1])
        union = []
        for g in guards:
            gp = poly.point(g)
            # region is left of a->b; strictly right-side guards see only endpoints
            if g not in edge and cross(a, b, gp) < 0:
                union += [(t, t) for t, p in ((ZERO, a), (ONE, b)) if _sees_point(poly, gp, p)]
            else:
                union += visible_interval_set(poly, g, edge)
            union = merge_intervals(union)
            if union == [(ZERO, ONE)]:
                break
        report.covered[edge] = union
        cursor = ZERO
        for lo, hi in union + [(ONE, ONE)]:
            if lo > cursor:
                report.gaps.append(Gap(edge, cursor, lo, lerp(a, b, cursor), lerp(a, b, lo)))
            cursor = max(cursor, hi)
    return report


def boundary_coverage(poly: PolygonWithHoles, guards: Iterable[VertexId]) -> CoverageReport:
    """Exact coverage of the outer ring by ``guards``."""
    return _cover_edges(poly, guards, poly.ring_edge_ids(0))


def hole_coverage(poly: PolygonWithHoles, guards: Iterable[VertexId],
                  bases: Sequence[Edge] = ()) -> "HoleCoverage":
    """Exact coverage of every hole ring, checked against the base edges of
    the special triangles that were cut."""
    edges = [e for r in range(1, poly.h + 1) for e in poly.ring_edge_ids(r)]
    report = _cover_edges(poly, guards, edges)
    base_set = {frozenset(e) for e in bases}
    outside = [gap for gap in report.gaps if frozenset(gap.edge) not in base_set]
    return HoleCoverage(report, poly.h, outside)


@dataclass
class HoleCoverage:
    report: CoverageReport
    h: int
    gaps_outside_bases: List[Gap]

    @property
    def gaps(self) -> List[Gap]:
        return self.report.gaps

    @property
    def ok(self) -> bool:
        """At most h maximal gaps, each inside a recorded base edge."""
        return len(self.report.gaps) <= self.h and not self.gaps_outside_bases


def min_dominating_oracle(graph, size_limit: int = 20) -> List:
    """A minimum dominating set by exhaustive search.

    Vertices whose closed neighbourhood is contained in another's are never
    needed and are dropped. Sizes are tried in increasing order and, within a
    size, candidate sets in lexicographic order, so the answer is the
    lexicographically first minimum set over the remaining candidates.
    """
    verts = sorted(graph.vertices)
    if len(verts) > size_limit:
        raise TooLargeError(f"{len(verts)} vertices exceed the oracle limit {size_limit}")
    index = {v: i for i, v in enumerate(verts)}
    closed = []
    for v in verts:
        mask = 1 << index[v]
        for w in graph.neighbors(v):
            mask |= 1 << index[w]
        closed.append(mask)
    full = (1 << len(verts)) - 1
    cands = []
    for i, m in enumerate(closed):
        redundant = any(j != i and (m | closed[j]) == closed[j] and (closed[j] != m or j < i)
                        for j in range(len(verts)))
        if not redundant:
            cands.append(i)
    if not verts:
        return []
    sizes = sorted((bin(closed[i]).count("1") for i in cands), reverse=True)
    for k in range(1, len(cands) + 1):
        if sum(sizes[:k]) < len(verts):
            continue
        for combo in combinations(cands, k):
            acc = 0
            for i in combo:
                acc |= closed[i]
            if acc == full:
                return [verts[i] for i in combo]
    raise AssertionError("the full candidate set always dominates")


@dataclass
class Certificate:
    """Outcome of checking a guard set against every claim."""

    guard_count: int
    bound: int
    dominating: bool
    unguarded: Optional[VertexId]
    boundary: CoverageReport
    holes: Optional[HoleCoverage] = None
    replay_ok: Optional[bool] = None

    @property
    def bound_ok(self) -> bool:
        return self.guard_count <= self.bound

    @property
    def ok(self) -> bool:
        return (self.bound_ok and self.dominating and self.boundary.ok
                and (self.holes is None or self.holes.ok) and self.replay_ok is not False)


def check_guards(poly: PolygonWithHoles, guards: Iterable[VertexId],
                 bases: Optional[Sequence[Edge]] = None) -> Certificate:
    guards = set(guards)
    ok, witness = is_dominating(visibility_graph(poly), guards)
    return Certificate(
        guard_count=len(guards),
        bound=(poly.n + poly.h) // 3,
        dominating=ok,
        unguarded=witness,
        boundary=boundary_coverage(poly, guards),
        holes=None if bases is None else hole_coverage(poly, guards, bases),
    )


def certify(result) -> Certificate:
    """Check a pipeline result: bound, domination, outer and hole coverage,
    and that replaying the recorded cuts reproduces the guard set."""
    from .pipeline import replay

    cert = check_guards(result.polygon, result.guards, result.base_edges)
    cert.replay_ok = replay(result.polygon, result) == result.guards
    return cert
