"""
How far from optimal?
=====================

For small instances the minimum number of vertex guards can be found by
exhaustive search over the visibility graph. The constructive guard set
always sits between that optimum and the worst-case bound.
"""

from collections import Counter

from vertexguards.generator import GeneratorConfig, generate
from vertexguards.pipeline import place_guards
from vertexguards.polygon import visibility_graph
from vertexguards.verification import min_dominating_oracle

excess = Counter()
for seed in range(30):
    poly = generate(GeneratorConfig(seed=seed, outer_vertices=7, holes=seed % 2))
    best = len(min_dominating_oracle(visibility_graph(poly)))
    ours = len(place_guards(poly).guards)
    assert best <= ours <= (poly.n + poly.h) // 3
    excess[ours - best] += 1

for extra in sorted(excess):
    print(f"{excess[extra]:3d} instances with {extra} guard(s) above the optimum")
