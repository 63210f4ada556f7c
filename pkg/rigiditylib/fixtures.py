"""
Named graphs and orientations used in examples and tests.
"""

from .graph_model import Graph
from .orientation_model import Orientation, OrientedEdge


def triangle() -> Graph:
    return Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])


def path(n: int = 3) -> Graph:
    """1 - 2 - ... - n."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int = 4) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def k4() -> Graph:
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def triangle_fan() -> Graph:
    """Two triangles sharing the edge (1, 3): a Laman graph in the plane."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


DOUBLE_BANANA_SOURCES = [(1, 3), (5, 6), (5, 7), (6, 7), (7, 8), (4, 6), (4, 8)]
DOUBLE_BANANA_STREAMS = [
    ((3, 5), 3), ((1, 5), 1), ((2, 5), 2), ((2, 3), 2), ((3, 4), 3),
    ((1, 4), 1), ((2, 4), 2), ((5, 8), 5), ((6, 8), 8), ((4, 7), 4),
]
DOUBLE_BANANA_SINKS = [(1, 2)]


def double_banana() -> Graph:
    """
    Two copies of K5 minus an edge glued along the missing edge's vertices 4
    and 5: 8 vertices, 18 edges, tight in dimension 3 and flexible.
    """
    edges = DOUBLE_BANANA_SOURCES + [e for e, _ in DOUBLE_BANANA_STREAMS] + DOUBLE_BANANA_SINKS
    return Graph.from_edges(8, sorted(edges))


def double_banana_orientation() -> Orientation:
    """A balanced orientation of the double banana with seven sources and one sink."""
    return Orientation(tuple(
        [OrientedEdge.source(*e) for e in DOUBLE_BANANA_SOURCES]
        + [OrientedEdge.stream(*e, into) for e, into in DOUBLE_BANANA_STREAMS]
        + [OrientedEdge.sink(*e) for e in DOUBLE_BANANA_SINKS]
    ))


def cycle_orientation() -> Orientation:
    """The 4-cycle in d = 1: one source, two streams leading away from it, one sink."""
    return Orientation((
        OrientedEdge.source(1, 4),
        OrientedEdge.stream(3, 4, 3),
        OrientedEdge.stream(2, 3, 2),
        OrientedEdge.sink(1, 2),
    ))


FIXTURES = {
    "triangle": triangle,
    "path": path,
    "cycle": cycle,
    "k4": k4,
    "triangle-fan": triangle_fan,
    "double-banana": double_banana,
}
