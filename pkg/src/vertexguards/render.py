"""SVG drawings in the style of the usual figures: solid rings, dashed special
triangles, circled guards, uncovered stretches in red."""

from xml.sax.saxutils import escape

WIDTH = 640
MARGIN = 24


def _frame(poly):
    xs = [float(p.x) for ring in poly.rings for p in ring]
    ys = [float(p.y) for ring in poly.rings for p in ring]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (WIDTH - 2 * MARGIN) / span
    height = (y1 - y0) * scale + 2 * MARGIN

    def tr(p):
        # flip y so that up is up
        return (MARGIN + (float(p[0]) - x0) * scale, MARGIN + (y1 - float(p[1])) * scale)

    return tr, height


def _path(points, tr):
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(tr, points))
    return coords


def render_svg(poly, result=None, guards=None, gaps=(), triangles=None) -> str:
    """Render ``poly``; optionally a pipeline ``result`` (special triangles and
    guards), an explicit ``guards`` list overriding the result's, coverage
    ``gaps`` (objects with ``p0``/``p1``) and explicit special ``triangles``
    as (apex, b, c) point triples."""
    tr, height = _frame(poly)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height:.0f}" '
        f'viewBox="0 0 {WIDTH} {height:.3f}">',
        '<g id="rings" fill="none" stroke="black" stroke-width="1.5">',
        f'<polygon class="outer" points="{_path(poly.outer, tr)}" fill="#f4f4f4"/>',
    ]
    for k, hole in enumerate(poly.holes, 1):
        out.append(f'<polygon class="hole" id="h{k}" points="{_path(hole, tr)}" fill="#c8c8c8"/>')
    out.append("</g>")
    if result is not None:
        if triangles is None:
            triangles = [cut.triangle.points for cut in result.cuts]
        if guards is None:
            guards = sorted(result.guards)
    if triangles:
        out.append('<g id="special" stroke="#1f4e9c" stroke-width="1" stroke-dasharray="5,4">')
        for i, (a, b, c) in enumerate(triangles, 1):
            for p, q in ((a, b), (a, c)):
                (x1, y1), (x2, y2) = tr(p), tr(q)
                out.append(f'<line class="slit" data-cut="{i}" x1="{x1:.3f}" y1="{y1:.3f}" '
                           f'x2="{x2:.3f}" y2="{y2:.3f}"/>')
        out.append("</g>")
    if gaps:
        out.append('<g id="gaps" stroke="#d62728" stroke-width="4" stroke-linecap="round">')
        for g in gaps:
            (x1, y1), (x2, y2) = tr(g.p0), tr(g.p1)
            out.append(f'<line class="gap" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
        out.append("</g>")
    if guards:
        out.append('<g id="guards" font-family="sans-serif" font-size="11">')
        for v in sorted(guards):
            x, y = tr(poly.point(v))
            out.append(f'<circle class="guard" cx="{x:.3f}" cy="{y:.3f}" r="5" '
                       f'fill="#ff7f0e" stroke="black"/>')
            out.append(f'<text x="{x + 7:.3f}" y="{y - 7:.3f}">{escape(repr(v))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
