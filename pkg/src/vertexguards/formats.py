"""JSON instance, guard and result files.

Coordinates are written as integers when integral and as ``"p/q"`` strings
otherwise; on input, integers, decimal strings and fraction strings are all
read exactly. Output uses sorted keys so that files diff cleanly.
"""

import json

from .errors import InstanceSyntaxError, PolygonError
from .geometry import format_scalar
from .polygon import PolygonWithHoles, VertexId, validate


def _coord(v):
    s = format_scalar(v)
    return int(s) if "/" not in s else s


def _point(p):
    return [_coord(p.x), _coord(p.y)]


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from None


def _rings_from(doc):
    if isinstance(doc, dict) and "polygon" in doc and "outer" not in doc:
        doc = doc["polygon"]
    if not isinstance(doc, dict) or "outer" not in doc:
        raise InstanceSyntaxError("expected an object with an 'outer' ring")
    outer = doc["outer"]
    holes = doc.get("holes", [])
    for ring in [outer] + list(holes):
        if not isinstance(ring, list) or not all(
                isinstance(p, list) and len(p) == 2 for p in ring):
            raise InstanceSyntaxError("rings must be lists of [x, y] pairs")
    return outer, holes


def parse_instance(text: str) -> PolygonWithHoles:
    """Parse and validate an instance. Also accepts result files, which embed
    the polygon."""
    outer, holes = _rings_from(_loads(text))
    try:
        return validate(outer, holes)
    except PolygonError:
        raise
    except (TypeError, ValueError) as exc:
        raise InstanceSyntaxError(f"bad coordinate: {exc}") from None


def instance_dict(poly: PolygonWithHoles) -> dict:
    return {"outer": [_point(p) for p in poly.outer],
            "holes": [[_point(p) for p in h] for h in poly.holes]}


def dump_instance(poly: PolygonWithHoles) -> str:
    return json.dumps(instance_dict(poly), sort_keys=True) + "\n"


def parse_guards(text: str):
    """Guard ids from ``[[ring, index], ...]``, a list of ``{"ring", "index"}``
    objects, or a result file. Returns ``(guards, base_edges_or_None)``."""
    doc = _loads(text)
    bases = None
    if isinstance(doc, dict):
        if "certificate" in doc:
            bases = [tuple(VertexId(e["ring"], e["index"]) for e in cut["base_edge"])
                     for cut in doc["certificate"]["cuts"]]
        doc = doc.get("guards")
    if not isinstance(doc, list):
        raise InstanceSyntaxError("expected a list of guards")
    guards = []
    for g in doc:
        if isinstance(g, dict):
            g = [g.get("ring"), g.get("index")]
        if not (isinstance(g, list) and len(g) == 2 and all(isinstance(x, int) for x in g)):
            raise InstanceSyntaxError(f"bad guard entry {g!r}")
        guards.append(VertexId(*g))
    return guards, bases


def _vertex(poly, v, key=None):
    d = {"ring": v.ring, "index": v.index, "point": _point(poly.point(v))}
    if key is not None:
        d["entry"] = key
    return d


def result_dict(result, certificate=None) -> dict:
    poly = result.polygon
    classes = result.coloring.color_classes()
    chosen = min(range(3), key=lambda c: (len(classes[c]), c))
    doc = {
        "n": poly.n,
        "h": poly.h,
        "bound": result.bound,
        "polygon": instance_dict(poly),
        "guards": [_vertex(poly, g) for g in sorted(result.guards)],
        "certificate": {
            "cuts": [
                {
                    "apex": _vertex(poly, c.triangle.apex.vid, c.triangle.apex.key),
                    "base_hole": c.triangle.base_hole,
                    "base_edge": [_vertex(poly, e.vid, e.key) for e in c.triangle.base_edge],
                    "holes_after": c.holes_after,
                    "entries_after": c.entries_after,
                }
                for c in result.cuts
            ],
            "entries": [[key, v.ring, v.index] for key, v in sorted(result.mapping.items())],
            "triangulation": [[e.key for e in tri] for tri in result.triangulation.triangles],
            "coloring": [[key, col] for key, col in sorted(result.coloring.colors.items())],
            "chosen_color": chosen,
            "guard_entries": sorted(e.key for e in result.guard_entries),
        },
    }
    if certificate is not None:
        doc["verification"] = verification_dict(certificate)
    return doc


def verification_dict(cert) -> dict:
    d = {
        "ok": cert.ok,
        "guard_count": cert.guard_count,
        "bound": cert.bound,
        "bound_ok": cert.bound_ok,
        "dominating": cert.dominating,
        "unguarded": None if cert.unguarded is None else list(cert.unguarded),
        "outer_gaps": [_gap(g) for g in cert.boundary.gaps],
    }
    if cert.holes is not None:
        d["hole_gaps"] = [_gap(g) for g in cert.holes.gaps]
        d["hole_gaps_outside_bases"] = len(cert.holes.gaps_outside_bases)
    if cert.replay_ok is not None:
        d["replay_ok"] = cert.replay_ok
    return d


def _gap(g):
    return {"edge": [list(g.edge[0]), list(g.edge[1])],
            "from": _point(g.p0), "to": _point(g.p1)}


def emit_result(result, certificate=None) -> str:
    return json.dumps(result_dict(result, certificate), sort_keys=True, indent=2) + "\n"
