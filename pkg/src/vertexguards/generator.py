"""Seeded random polygons with holes on the integer grid."""

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import GenerationFailedError
from .geometry import RegionPosition, cross, point_in_region, pt, ring_edges, segments_intersect
from .polygon import PolygonWithHoles, validate


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    outer_vertices: int = 8
    holes: int = 1
    hole_vertices: int = 3
    coordinate_range: int = 200
    max_rounds: int = 50

    def __post_init__(self):
        if self.outer_vertices < 3:
            raise ValueError("outer_vertices must be at least 3")
        if self.holes < 0:
            raise ValueError("holes must be non-negative")
        if self.hole_vertices < 3:
            raise ValueError("hole_vertices must be at least 3")
        if self.coordinate_range < 10:
            raise ValueError("coordinate_range must be at least 10")


def _general_position_points(rng, k, lo, hi):
    pts = []
    while len(pts) < k:
        p = (rng.randint(lo, hi), rng.randint(lo, hi))
        for _ in range(100):
            if p not in pts and all(cross(a, b, p) != 0 for a, b in combinations(pts, 2)):
                break
            # nudge by one grid step
            p = (p[0] + rng.choice((-1, 0, 1)), p[1] + rng.choice((-1, 0, 1)))
        else:
            continue
        pts.append(p)
    return pts


def _uncross(points):
    """2-opt: reverse the chain between two crossing edges until none cross.

    Points are in general position, so every crossing is proper and each move
    strictly shortens the tour.
    """
    pts = list(points)
    k = len(pts)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                a, b = pts[i], pts[i + 1]
                c, d = pts[j], pts[(j + 1) % k]
                if segments_intersect(a, b, c, d):
                    pts[i + 1:j + 1] = reversed(pts[i + 1:j + 1])
                    changed = True
    return pts


def _convex_ring(rng, k, size):
    """Strictly convex k-gon of integer points inside [-size, size]^2."""
    for _ in range(1000):
        cand = {(rng.randint(-size, size), rng.randint(-size, size)) for _ in range(k + 2 * k)}
        hull = _hull(sorted(cand))
        if len(hull) >= k:
            idx = sorted(rng.sample(range(len(hull)), k))
            ring = [hull[i] for i in idx]
            if all(cross(ring[i - 1], ring[i], ring[(i + 1) % k]) > 0 for i in range(k)):
                return ring
    raise GenerationFailedError(f"could not build a convex {k}-gon of size {size}")


def _hull(points):
    """Andrew's monotone chain, strictly convex, counter-clockwise."""
    if len(points) < 3:
        return points

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(points)
    upper = half(reversed(points))
    return lower[:-1] + upper[:-1]


def _fits(poly_rings, ring):
    outer = poly_rings[0]
    shape = PolygonWithHoles(tuple(pt(*p) for p in outer),
                             tuple(tuple(pt(*p) for p in h) for h in poly_rings[1:]))
    for p in ring:
        if point_in_region(shape, pt(*p)) is not RegionPosition.INSIDE:
            return False
    new_edges = ring_edges(ring)
    for other in poly_rings:
        for e in ring_edges(other):
            for f in new_edges:
                if segments_intersect(*e, *f):
                    return False
    hole = PolygonWithHoles(tuple(pt(*p) for p in ring))
    for other in poly_rings[1:]:
        if point_in_region(hole, pt(*other[0])) is not RegionPosition.OUTSIDE:
            return False
    return True


def generate(config: GeneratorConfig) -> PolygonWithHoles:
    """Random valid polygon with ``config.holes`` convex holes.

    Deterministic for a given config. Raises :class:`GenerationFailedError`
    if the holes cannot be placed within ``max_rounds`` fresh outer rings.
    """
    rng = random.Random(config.seed)
    r = config.coordinate_range
    size = max(2, r // 40)
    for _ in range(config.max_rounds):
        outer = _uncross(_general_position_points(rng, config.outer_vertices, 0, r))
        rings = [outer]
        for _ in range(config.holes):
            shape = _convex_ring(rng, config.hole_vertices, size)
            for _ in range(400):
                cx, cy = rng.randint(0, r), rng.randint(0, r)
                ring = [(x + cx, y + cy) for x, y in shape]
                if _fits(rings, ring):
                    rings.append(ring[::-1])
                    break
            else:
                break
        if len(rings) == config.holes + 1:
            return validate(rings[0], rings[1:])
    raise GenerationFailedError(
        f"could not place {config.holes} holes after {config.max_rounds} rounds", seed=config.seed)
