"""Ear-clipping triangulation of the fully cut polygon and Fisk's 3-coloring."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Set, Tuple

from .cutting import CutPolygon, Entry, cut_sees
from .errors import DualNotTreeError, TriangulationFailedError
from .geometry import cross, direction_strictly_inside_angle, point_in_closed_triangle

Triangle = Tuple[Entry, Entry, Entry]


@dataclass(frozen=True)
class Triangulation:
    """Counter-clockwise triangles over cut-polygon entries, in clipping order."""

    triangles: Tuple[Triangle, ...]

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """Dual graph: triangle index -> indices of triangles sharing a side."""
        by_side = {}
        for t, tri in enumerate(self.triangles):
            for i in range(3):
                side = frozenset((tri[i].key, tri[(i + 1) % 3].key))
                by_side.setdefault(side, []).append(t)
        adj = {t: set() for t in range(len(self.triangles))}
        for ts in by_side.values():
            if len(ts) > 2:
                raise DualNotTreeError("side shared by more than two triangles", state=self)
            if len(ts) == 2:
                adj[ts[0]].add(ts[1])
                adj[ts[1]].add(ts[0])
        return {t: tuple(sorted(s)) for t, s in adj.items()}

    def diagonals(self) -> List[Tuple[Entry, Entry]]:
        seen = {}
        for tri in self.triangles:
            for i in range(3):
                u, v = tri[i], tri[(i + 1) % 3]
                seen.setdefault(frozenset((u.key, v.key)), []).append((u, v))
        return [pairs[0] for pairs in seen.values() if len(pairs) == 2]

    def area(self):
        return sum(cross(*(e.point for e in tri)) for tri in self.triangles) / 2

    def __len__(self):
        return len(self.triangles)


def _is_ear(cp: CutPolygon, chain: List[Entry], nbr: Dict[int, Tuple[Entry, Entry]], v: Entry) -> bool:
    p, n = nbr[v.key]
    P, V, N = p.point, v.point, n.point
    if cross(P, V, N) <= 0:
        return False
    corner_keys = {p.key, v.key, n.key}
    at_corner = {P: (V, N), V: (N, P), N: (P, V)}
    for w in chain:
        if w.point in at_corner:
            # copies of a corner: their edges must not enter the triangle
            first, second = at_corner[w.point]
            if w.key in corner_keys:
                continue
            for nb in nbr[w.key]:
                if direction_strictly_inside_angle(w.point, first, second, nb.point):
                    return False
        elif point_in_closed_triangle(w.point, P, V, N):
            return False
    return cut_sees(cp, p, n)


def triangulate(cp: CutPolygon) -> Triangulation:
    """Clip ears from the single remaining ring, always trying the entry with
    the lowest key first."""
    if cp.h != 0:
        raise ValueError(f"{cp.h} holes remain; cut them first")
    chain = list(cp.rings[0])
    nbr = {e.key: (chain[i - 1], chain[(i + 1) % len(chain)]) for i, e in enumerate(chain)}
    triangles = []
    while len(chain) > 3:
        for v in sorted(chain, key=lambda e: e.key):
            if _is_ear(cp, chain, nbr, v):
                break
        else:
            raise TriangulationFailedError(
                f"no ear among {len(chain)} remaining entries", state=(cp, list(chain)))
        p, n = nbr[v.key]
        triangles.append((p, v, n))
        chain.remove(v)
        del nbr[v.key]
        nbr[p.key] = (nbr[p.key][0], n)
        nbr[n.key] = (p, nbr[n.key][1])
    tri = tuple(chain)
    if cross(*(e.point for e in tri)) <= 0:
        raise TriangulationFailedError("last triangle is degenerate", state=(cp, tri))
    triangles.append(tri)
    return Triangulation(tuple(triangles))


@dataclass(frozen=True)
class ThreeColoring:
    colors: Dict[int, int]
    entries: Dict[int, Entry]

    def color_classes(self) -> List[List[Entry]]:
        classes = [[], [], []]
        for key in sorted(self.colors):
            classes[self.colors[key]].append(self.entries[key])
        return classes


def three_color(t: Triangulation) -> ThreeColoring:
    """Color the root triangle 0, 1, 2 (by ascending key) and push the forced
    third color across each dual edge."""
    if not t.triangles:
        raise DualNotTreeError("empty triangulation", state=t)
    adj = t.adjacency
    n_dual_edges = sum(len(v) for v in adj.values()) // 2
    if n_dual_edges != len(t.triangles) - 1:
        raise DualNotTreeError(
            f"dual graph has {n_dual_edges} edges for {len(t.triangles)} triangles", state=t)
    entries = {e.key: e for tri in t.triangles for e in tri}
    low = min(entries)
    root = next(i for i, tri in enumerate(t.triangles) if any(e.key == low for e in tri))
    colors = {}
    for c, key in enumerate(sorted(e.key for e in t.triangles[root])):
        colors[key] = c
    seen = {root}
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for nxt in adj[cur]:
            if nxt in seen:
                continue
            seen.add(nxt)
            keys = [e.key for e in t.triangles[nxt]]
            fresh = [k for k in keys if k not in colors]
            free = {0, 1, 2} - {colors[k] for k in keys if k in colors}
            if len(fresh) > 1 or (fresh and len(free) != 1):
                raise DualNotTreeError(f"cannot propagate into triangle {nxt}", state=t)
            for k in fresh:
                colors[k] = free.pop()
            queue.append(nxt)
    if len(seen) != len(t.triangles):
        raise DualNotTreeError("dual graph is disconnected", state=t)
    for tri in t.triangles:
        if len({colors[e.key] for e in tri}) != 3:
            raise DualNotTreeError(f"triangle {tri} is not rainbow", state=t)
    return ThreeColoring(colors, entries)


def select_guards(coloring: ThreeColoring) -> Set[Entry]:
    """Smallest color class; ties go to the lowest color."""
    classes = coloring.color_classes()
    best = min(range(3), key=lambda c: (len(classes[c]), c))
    return set(classes[best])
