"""End-to-end guard placement: cut every hole, triangulate, color, map back."""

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Tuple

from .cutting import CutPolygon, Entry, lift, map_guards_back, split_apex
from .errors import InvariantError
from .fisk import ThreeColoring, Triangulation, select_guards, three_color, triangulate
from .geometry import format_scalar
from .polygon import PolygonWithHoles, VertexId
from .special import SpecialTriangle, find_special_triangle


@dataclass(frozen=True)
class Cut:
    triangle: SpecialTriangle
    holes_after: int
    entries_after: int


@dataclass(frozen=True)
class GuardResult:
    polygon: PolygonWithHoles
    guards: FrozenSet[VertexId]
    bound: int
    cuts: Tuple[Cut, ...]
    cut_polygon: CutPolygon
    triangulation: Triangulation
    coloring: ThreeColoring
    guard_entries: FrozenSet[Entry]
    mapping: Dict[int, VertexId] = field(repr=False)

    @property
    def special_triangles(self) -> List[SpecialTriangle]:
        return [c.triangle for c in self.cuts]

    @property
    def base_edges(self) -> List[Tuple[VertexId, VertexId]]:
        return [(c.triangle.base_edge[0].vid, c.triangle.base_edge[1].vid) for c in self.cuts]


def guard_bound(poly: PolygonWithHoles) -> int:
    return (poly.n + poly.h) // 3


def cut_all_holes(poly: PolygonWithHoles, find: Callable = find_special_triangle):
    """Apply one apex split per hole. Returns the final cut polygon and the
    list of cuts; checks the hole/entry count law after every split."""
    cp = lift(poly)
    cuts = []
    while cp.h > 0:
        tri = find(cp)
        before_h, before_m = cp.h, cp.m
        cp, _ = split_apex(cp, tri)
        if (cp.h, cp.m) != (before_h - 1, before_m + 1):
            raise InvariantError(
                f"split changed (h, m) from {(before_h, before_m)} to {(cp.h, cp.m)}", state=cp)
        cuts.append(Cut(tri, cp.h, cp.m))
    return cp, cuts


def place_guards(poly: PolygonWithHoles, find: Callable = find_special_triangle) -> GuardResult:
    """Choose at most (n + h) // 3 vertex guards for ``poly``.

    ``find`` selects the special triangle for each cut; it is a parameter
    so that failure paths can be exercised.
    """
    cp, cuts = cut_all_holes(poly, find)
    tri = triangulate(cp)
    coloring = three_color(tri)
    chosen = select_guards(coloring)
    guards = map_guards_back(cp.provenance, chosen)
    bound = guard_bound(poly)
    if len(guards) > bound:
        raise InvariantError(f"{len(guards)} guards exceed the bound {bound}", state=poly)
    return GuardResult(
        polygon=poly,
        guards=frozenset(guards),
        bound=bound,
        cuts=tuple(cuts),
        cut_polygon=cp,
        triangulation=tri,
        coloring=coloring,
        guard_entries=frozenset(chosen),
        mapping=dict(cp.provenance),
    )


def replay(poly: PolygonWithHoles, result: GuardResult) -> FrozenSet[VertexId]:
    """Redo the recorded cuts and the recorded coloring; return the guard set
    they imply. Used to check a certificate independently of the search."""
    cp = lift(poly)
    for cut in result.cuts:
        t = cut.triangle
        cp, _ = split_apex(cp, t)
    if cp.provenance != result.mapping:
        raise InvariantError("replayed cuts disagree with the recorded mapping", state=cp)
    chosen = select_guards(result.coloring)
    return frozenset(map_guards_back(cp.provenance, chosen))


def _p(point):
    return f"({format_scalar(point.x)}, {format_scalar(point.y)})"


def explain(result: GuardResult) -> str:
    poly = result.polygon
    lines = [f"polygon: n={poly.n} h={poly.h} bound=floor(({poly.n}+{poly.h})/3)={result.bound}"]
    lines.append(f"cuts: {len(result.cuts)}")
    for i, cut in enumerate(result.cuts, 1):
        t = cut.triangle
        b, c = t.base_edge
        lines.append(
            f"  cut {i}: apex {t.apex.vid!r} {_p(t.apex.point)} over hole {t.base_hole} "
            f"edge {b.vid!r}-{c.vid!r} -> holes={cut.holes_after} entries={cut.entries_after}")
    m = result.cut_polygon.m
    lines.append(f"triangulation: {len(result.triangulation)} triangles over {m} entries")
    sizes = [len(c) for c in result.coloring.color_classes()]
    chosen = min(range(3), key=lambda c: (sizes[c], c))
    lines.append(f"color classes: {sizes[0]} {sizes[1]} {sizes[2]} (sum {sum(sizes)})")
    lines.append(f"chosen class: {chosen} ({sizes[chosen]} entries)")
    guards = ", ".join(f"{g!r} {_p(poly.point(g))}" for g in sorted(result.guards))
    lines.append(f"guards ({len(result.guards)}): {guards}")
    return "\n".join(lines) + "\n"
