"""Exact scalars, primitive predicates, region membership and segment visibility.

All coordinates are ``gmpy2.mpq`` rationals, so every predicate here is exact.
Region-level functions accept any object exposing ``rings`` (a sequence of
closed point rings, outer first) and optionally a precomputed ``edges`` list.
"""

import enum
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence

from gmpy2 import mpq

from .errors import DegenerateSegmentError

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


def scalar(value) -> mpq:
    """Convert ``value`` to an exact rational.

    Accepts ints, ``Fraction``/``mpq`` and strings such as ``"-0.5"``,
    ``"-1/2"`` or ``"3"``. Floats are converted exactly (no rounding), bools
    are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, float)):
        return mpq(value)
    if type(value) is type(ZERO):
        return value
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        f = Fraction(value.strip())
        return mpq(f.numerator, f.denominator)
    raise TypeError(f"cannot convert {value!r} to an exact rational")


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __repr__(self):
        return f"Point({format_scalar(self.x)}, {format_scalar(self.y)})"


def pt(x, y) -> Point:
    return Point(scalar(x), scalar(y))


def format_scalar(v) -> str:
    v = mpq(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class RegionPosition(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def cross(p, q, r):
    """Twice the signed area of triangle pqr, i.e. (q - p) x (r - p)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def cross_vec(u, v):
    return u[0] * v[1] - u[1] * v[0]


def sign(v) -> int:
    return (v > 0) - (v < 0)


def orient(p, q, r) -> Orientation:
    return Orientation(sign(cross(p, q, r)))


def _in_box(p, a, b):
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def on_segment(p, a, b) -> bool:
    """True iff ``p`` lies on the closed segment ``ab``."""
    if a == b:
        raise DegenerateSegmentError(f"degenerate segment at {a!r}")
    return cross(a, b, p) == 0 and _in_box(p, a, b)


def segments_properly_cross(a, b, c, d) -> bool:
    """True iff open segments ab and cd meet in a single point interior to both."""
    if a == b or c == d:
        raise DegenerateSegmentError("degenerate segment")
    o1 = sign(cross(a, b, c))
    o2 = sign(cross(a, b, d))
    if o1 * o2 >= 0:
        return False
    o3 = sign(cross(c, d, a))
    o4 = sign(cross(c, d, b))
    return o3 * o4 < 0


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1 = sign(cross(a, b, c))
    o2 = sign(cross(a, b, d))
    o3 = sign(cross(c, d, a))
    o4 = sign(cross(c, d, b))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and _in_box(c, a, b)) or (o2 == 0 and _in_box(d, a, b))
            or (o3 == 0 and _in_box(a, c, d)) or (o4 == 0 and _in_box(b, c, d)))


def signed_area(ring: Sequence[Point]) -> mpq:
    total = ZERO
    n = len(ring)
    for i in range(n):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total / 2


def lerp(a, b, t) -> Point:
    return Point(a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def ring_edges(ring):
    n = len(ring)
    return [(ring[i], ring[(i + 1) % n]) for i in range(n)]


def region_edges(poly):
    edges = getattr(poly, "edges", None)
    if edges is None:
        edges = [e for ring in poly.rings for e in ring_edges(ring)]
    return edges


def ring_winding(ring: Sequence[Point], p) -> int:
    """Winding number of ``ring`` around ``p``; ``p`` must not lie on the ring."""
    wn = 0
    px, py = p
    n = len(ring)
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        if a[1] <= py:
            if b[1] > py and cross(a, b, p) > 0:
                wn += 1
        elif b[1] <= py and cross(a, b, p) < 0:
            wn -= 1
    return wn


def point_in_region(poly, p) -> RegionPosition:
    """Classify ``p`` against the closed region bounded by ``poly.rings``.

    The first ring is the outer boundary; the others are holes.
    """
    for a, b in region_edges(poly):
        if cross(a, b, p) == 0 and _in_box(p, a, b):
            return RegionPosition.BOUNDARY
    rings = poly.rings
    if ring_winding(rings[0], p) == 0:
        return RegionPosition.OUTSIDE
    for hole in rings[1:]:
        if ring_winding(hole, p) != 0:
            return RegionPosition.OUTSIDE
    return RegionPosition.INSIDE


def _param(p, d, dd, a):
    return ((a[0] - p[0]) * d[0] + (a[1] - p[1]) * d[1]) / dd


def segment_in_region(poly, p, q) -> bool:
    """True iff every point of segment pq lies in the closed region.

    Boundary contact is allowed: the segment may graze vertices or run along
    edges. Contact parameters along pq are collected exactly, then the
    midpoint of every gap between consecutive contacts is classified.
    """
    if p == q:
        raise DegenerateSegmentError(f"identical endpoints {p!r}")
    d = (q[0] - p[0], q[1] - p[1])
    dd = d[0] * d[0] + d[1] * d[1]
    xlo, xhi = min(p[0], q[0]), max(p[0], q[0])
    ylo, yhi = min(p[1], q[1]), max(p[1], q[1])
    params = {ZERO, ONE}
    for a, b in region_edges(poly):
        if (max(a[0], b[0]) < xlo or min(a[0], b[0]) > xhi
                or max(a[1], b[1]) < ylo or min(a[1], b[1]) > yhi):
            continue
        o1 = sign(cross(a, b, p))
        o2 = sign(cross(a, b, q))
        if o1 * o2 > 0:
            continue
        o3 = sign(cross(p, q, a))
        o4 = sign(cross(p, q, b))
        if o3 * o4 > 0:
            continue
        if o1 * o2 < 0 and o3 * o4 < 0:
            return False
        # touching or overlapping: record contact points that are edge endpoints
        if o3 == 0 and _in_box(a, p, q):
            params.add(_param(p, d, dd, a))
        if o4 == 0 and _in_box(b, p, q):
            params.add(_param(p, d, dd, b))
    ts = sorted(params)
    for t0, t1 in zip(ts, ts[1:]):
        mid = lerp(p, q, (t0 + t1) / 2)
        if point_in_region(poly, mid) is RegionPosition.OUTSIDE:
            return False
    return True


def point_in_closed_triangle(p, a, b, c) -> bool:
    """Works for either orientation; degenerate triangles act as segments."""
    d1 = sign(cross(a, b, p))
    d2 = sign(cross(b, c, p))
    d3 = sign(cross(c, a, p))
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    if has_neg and has_pos:
        return False
    if has_neg or has_pos:
        return True
    return _in_box(p, a, b) or _in_box(p, b, c) or _in_box(p, c, a)


def point_in_open_triangle(p, a, b, c) -> bool:
    s = sign(cross(a, b, c))
    if s == 0:
        return False
    return (sign(cross(a, b, p)) == s and sign(cross(b, c, p)) == s
            and sign(cross(c, a, p)) == s)


def segment_meets_open_triangle(p, q, a, b, c) -> bool:
    """True iff segment pq has a point strictly inside triangle abc.

    Clips the parameter range of pq against the three open half-planes.
    """
    if cross(a, b, c) < 0:
        b, c = c, b
    lo, hi = ZERO, ONE
    for u, v in ((a, b), (b, c), (c, a)):
        # f(t) = cross(u, v, p + t (q - p)) must be > 0
        f0 = cross(u, v, p)
        f1 = cross(u, v, q)
        slope = f1 - f0
        if slope == 0:
            if f0 <= 0:
                return False
            continue
        root = -f0 / slope
        if slope > 0:
            lo = max(lo, root)
        else:
            hi = min(hi, root)
    return lo < hi


def open_triangles_overlap(t1, t2) -> bool:
    """Interiors of two non-degenerate triangles intersect (separating-axis test)."""
    for tri, other in ((t1, t2), (t2, t1)):
        a, b, c = tri
        s = sign(cross(a, b, c))
        for u, v in ((a, b), (b, c), (c, a)):
            if all(sign(cross(u, v, w)) * s <= 0 for w in other):
                return False
    return True


def direction_in_wedge(apex, out_pt, in_pt, target, strict=False) -> bool:
    """Is direction apex->target inside the wedge swept counter-clockwise from
    apex->out_pt to apex->in_pt?

    This is the region wedge at a ring vertex whose successor is ``out_pt`` and
    predecessor is ``in_pt`` (region on the left of the ring). With
    ``strict`` the two bounding rays are excluded.
    """
    o = (out_pt[0] - apex[0], out_pt[1] - apex[1])
    i = (in_pt[0] - apex[0], in_pt[1] - apex[1])
    v = (target[0] - apex[0], target[1] - apex[1])
    turn = cross_vec(o, i)
    co = cross_vec(o, v)
    ci = cross_vec(v, i)
    if turn > 0:
        if strict:
            return co > 0 and ci > 0
        return co >= 0 and ci >= 0 and v != (0, 0)
    if turn < 0:
        # reflex wedge: complement of the open convex cone from i to o
        inside_complement = cross_vec(i, v) > 0 and cross_vec(v, o) > 0
        if strict:
            on_ray = (co == 0 and _dot(o, v) > 0) or (ci == 0 and _dot(i, v) > 0)
            return not inside_complement and not on_ray
        return not inside_complement
    if _dot(o, i) < 0:
        # straight angle: the left half-plane of o
        if strict:
            return co > 0
        return co > 0 or (co == 0 and v != (0, 0))
    # zero-width wedge (spike tip)
    return not strict and co == 0 and _dot(o, v) > 0


def direction_strictly_inside_angle(corner, first, second, target) -> bool:
    """Is apex->target strictly inside the convex angle of a counter-clockwise
    triangle at ``corner``, bounded by corner->first and corner->second?"""
    u = (first[0] - corner[0], first[1] - corner[1])
    w = (second[0] - corner[0], second[1] - corner[1])
    v = (target[0] - corner[0], target[1] - corner[1])
    return cross_vec(u, v) > 0 and cross_vec(v, w) > 0


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]
