"""
Guarding a polygon with two holes, step by step
===============================================

The two-hole example polygon has 15 vertices. We cut each hole open at
a special triangle, triangulate what is left, 3-color it and keep the
smallest color class.
"""

from vertexguards.cutting import lift, split_apex
from vertexguards.pipeline import explain, place_guards
from vertexguards.polygon import two_hole_rings, validate
from vertexguards.special import find_special_triangle
from vertexguards.verification import certify

poly = validate(*two_hole_rings())
print(f"n={poly.n} h={poly.h}, so at most {(poly.n + poly.h) // 3} guards")

# Each cut removes one hole and adds one vertex (the apex is doubled).
cp = lift(poly)
while cp.h:
    tri = find_special_triangle(cp)
    cp, _ = split_apex(cp, tri)
    print(f"cut at apex {tri.apex.vid!r} over hole {tri.base_hole}: "
          f"{cp.h} holes, {cp.m} entries left")

# The pipeline does all of the above and records what it did.
result = place_guards(poly)
print()
print(explain(result))

# Everything is checked again from scratch, in exact arithmetic.
cert = certify(result)
print("dominating:", cert.dominating)
print("outer boundary gaps:", len(cert.boundary.gaps))
print("hole gaps:", len(cert.holes.gaps), "(allowed:", poly.h, ")")
