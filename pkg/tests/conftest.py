import pytest

from vertexguards.generator import GeneratorConfig, generate
from vertexguards.geometry import pt
from vertexguards.polygon import two_hole_rings, validate

TWO_HOLE_JSON = """{
  "outer": [[0,0],[5,2],[7,0],[9,1],[10,-3],[5,-3],[3,-6],[0,-4],[1,-2]],
  "holes": [[[4,"-0.5"],[6,"-0.5"],[5,-2]], [[1,-4],[4,-4],[2,-5]]]
}
"""


@pytest.fixture(scope="session")
def two_hole():
    return validate(*two_hole_rings())


@pytest.fixture(scope="session")
def minimal():
    """Triangle with a generically placed triangular hole (n=6, h=1)."""
    return validate([(0, 0), (12, 0), (5, 11)], [[(4, 3), (7, 2), (6, 5)]])


def vid_at(poly, x, y):
    p = pt(x, y)
    for v in poly.vertex_ids:
        if poly.point(v) == p:
            return v
    raise KeyError((x, y))


@pytest.fixture(scope="session")
def two_hole_named(two_hole):
    names = {"a": (5, 2), "b": (4, "-0.5"), "c": (6, "-0.5"), "d": (5, -2),
             "e": (1, -4), "f": (4, -4)}
    return {k: vid_at(two_hole, *xy) for k, xy in names.items()}


def property_config(seed):
    """Instance mix used by the property suites: outer 6..30, h 0..3."""
    return GeneratorConfig(seed=seed, outer_vertices=6 + seed % 25, holes=seed % 4,
                           hole_vertices=3 + seed % 3)


_cache = {}


def generated(seed):
    if seed not in _cache:
        _cache[seed] = generate(property_config(seed))
    return _cache[seed]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
