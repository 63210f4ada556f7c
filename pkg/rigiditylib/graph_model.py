"""
Graphs and placements.

Vertices are labelled 1..v. Edges are stored as canonical (min, max) pairs in
the order given; orientation data never lives on a Graph.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    LoopEdge,
    UnplacedVertex,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeVector = Tuple[Fraction, ...]


def canonical_edge(i: int, j: int) -> Edge:
    """Return the unordered pair (i, j) as (min, max)."""
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..v."""
    v: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, 'edges', tuple(canonical_edge(int(i), int(j)) for i, j in self.edges))

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[Sequence[int]]) -> 'Graph':
        """Build and validate a graph."""
        graph = cls(v, tuple(tuple(e) for e in edges))
        validate_graph(graph)
        return graph

    @property
    def vertices(self) -> range:
        return range(1, self.v + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return canonical_edge(i, j) in self._edge_set()

    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get('_edges_cache')
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, '_edges_cache', cached)
        return cached

    def neighbors(self, i: int) -> List[int]:
        """Sorted neighbours of vertex i."""
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self, d: Optional[int] = None) -> Dict:
        data = {"v": self.v, "edges": [list(e) for e in self.edges]}
        if d is not None:
            data["d"] = d
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'Graph':
        """Build a validated graph from the JSON layout {"v": .., "edges": [[i, j], ..]}."""
        try:
            v = int(data["v"])
            edges = [tuple(int(x) for x in e) for e in data["edges"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"malformed graph data: {e}") from e
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {list(e)} must have two endpoints")
        return cls.from_edges(v, edges)


def validate_graph(g: Graph) -> None:
    """
    Check the graph invariants.

    Raises the first violation found, scanning edges in order: LoopEdge,
    VertexOutOfRange, DuplicateEdge.
    """
    if g.v < 1:
        raise VertexOutOfRange(g.v, g.v)
    seen = set()
    for i, j in g.edges:
        if i == j:
            raise LoopEdge((i, j))
        for endpoint in (i, j):
            if not 1 <= endpoint <= g.v:
                raise VertexOutOfRange(endpoint, g.v)
        if (i, j) in seen:
            raise DuplicateEdge((i, j))
        seen.add((i, j))


def tightness(g: Graph, d: int) -> int:
    """|E| - (d*v - C(d+1, 2)); zero when the edge count is exactly the rigid count."""
    return len(g.edges) - (d * g.v - comb(d + 1, 2))


def rigid_rank(v: int, d: int) -> int:
    """Rank of the rigidity matrix of an infinitesimally rigid framework."""
    return d * v - comb(d + 1, 2)


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse an integer or a "num/den" string."""
    if isinstance(value, float):
        raise ValueError(f"coordinates must be exact, got float {value}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Placement:
    """Exact rational coordinates for each vertex in dimension dim."""
    dim: int
    coords: Dict[int, Tuple[Fraction, ...]]

    def __post_init__(self):
        for vertex, point in self.coords.items():
            if len(point) != self.dim:
                raise DimensionMismatch(self.dim, len(point), vertex)

    def point(self, vertex: int) -> Tuple[Fraction, ...]:
        try:
            return self.coords[vertex]
        except KeyError:
            raise UnplacedVertex(vertex) from None

    def require_vertices(self, g: Graph) -> None:
        for vertex in g.vertices:
            if vertex not in self.coords:
                raise UnplacedVertex(vertex)

    def to_dict(self) -> Dict:
        return {
            "d": self.dim,
            "coords": {str(k): [format_rational(x) for x in self.coords[k]] for k in sorted(self.coords)}
        }

    @classmethod
    def from_dict(cls, data: Dict, dim: Optional[int] = None) -> 'Placement':
        coords = {int(k): tuple(parse_rational(x) for x in point) for k, point in data["coords"].items()}
        if dim is None:
            dim = data.get("d")
        if dim is None:
            lengths = {len(point) for point in coords.values()}
            if len(lengths) != 1:
                raise ValueError("cannot infer placement dimension")
            dim = lengths.pop()
        return cls(int(dim), coords)


def edge_vector(p: Placement, i: int, j: int) -> EdgeVector:
    """e_ij = p_j - p_i."""
    pi = p.point(i)
    pj = p.point(j)
    return tuple(b - a for a, b in zip(pi, pj))


def load_graph(path: Union[str, Path]) -> Tuple[Graph, Optional[int]]:
    """
    Read a graph JSON file.

    Returns:
        (graph, dimension stored in the file or None)
    """
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    graph = Graph.from_dict(data)
    logger.debug(f"Loaded graph with {graph.v} vertices and {graph.edge_count} edges from {path}")
    return graph, data.get("d")


def load_placement(path: Union[str, Path], dim: Optional[int] = None) -> Placement:
    with open(path, 'r', encoding='utf-8') as f:
        return Placement.from_dict(json.load(f), dim)
