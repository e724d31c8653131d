"""
Special triangles
=================

A special triangle has one side on a hole edge, its apex on another ring
and nothing of the polygon inside it. Every polygon with a hole has one.
Here we list all of them for a triangle with a triangular hole.
"""

from vertexguards.geometry import format_scalar
from vertexguards.polygon import validate
from vertexguards.render import render_svg
from vertexguards.special import enumerate_special_triangles

poly = validate([(0, 0), (12, 0), (5, 11)], [[(4, 3), (7, 2), (6, 5)]])

found = enumerate_special_triangles(poly)
print(f"{len(found)} special triangles")


def show(p):
    return f"({format_scalar(p.x)}, {format_scalar(p.y)})"


for t in found:
    apex, b, c = t.points
    print(f"  apex {show(apex)} over {show(b)}-{show(c)}, area {format_scalar(t.area())}")

# Draw them all; open the file in a browser.
svg = render_svg(poly, triangles=[t.points for t in found])
with open("special_triangles.svg", "w") as fh:
    fh.write(svg)
print("wrote special_triangles.svg")
