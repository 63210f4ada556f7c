"""
Source-stream-sink orientations.

Each edge of a subgraph H is a source (oriented into both endpoints), a stream
into one endpoint, or a sink (into neither). Streams form a digraph with an arc
tail -> head; an oriented cycle is a directed cycle of that digraph.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import EdgeNotInGraph, InvalidOrientation, PreconditionViolated, SearchBudgetExceeded
from .graph_model import Edge, Graph, canonical_edge

logger = logging.getLogger(__name__)


class EdgeMode(Enum):
    """How an edge is oriented."""
    SOURCE = "source"
    STREAM = "stream"
    SINK = "sink"


@dataclass(frozen=True)
class OrientedEdge:
    """An edge of H with its mode; into is the head of a stream."""
    edge: Edge
    mode: EdgeMode
    into: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'edge', canonical_edge(*self.edge))
        if self.mode is EdgeMode.STREAM:
            if self.into not in self.edge:
                raise ValueError(f"stream head {self.into} is not an endpoint of {self.edge}")
        elif self.into is not None:
            raise ValueError(f"{self.mode.value} edge {self.edge} cannot have a head")

    @property
    def heads(self) -> Tuple[int, ...]:
        """Endpoints the edge is oriented into."""
        if self.mode is EdgeMode.SOURCE:
            return self.edge
        if self.mode is EdgeMode.STREAM:
            return (self.into,)
        return ()

    @property
    def tail(self) -> Optional[int]:
        """For a stream, the endpoint it leaves."""
        if self.mode is not EdgeMode.STREAM:
            return None
        i, j = self.edge
        return i if self.into == j else j

    def other(self, vertex: int) -> int:
        i, j = self.edge
        return j if vertex == i else i

    def label(self) -> str:
        i, j = self.edge
        if self.mode is EdgeMode.SOURCE:
            return f"({i},{j})_{{{i},{j}}}"
        if self.mode is EdgeMode.STREAM:
            return f"({i},{j})_{self.into}"
        return f"({i},{j})_0"

    def to_dict(self) -> Dict:
        data = {"e": list(self.edge), "mode": self.mode.value}
        if self.mode is EdgeMode.STREAM:
            data["into"] = self.into
        return data

    @classmethod
    def source(cls, i: int, j: int) -> 'OrientedEdge':
        return cls((i, j), EdgeMode.SOURCE)

    @classmethod
    def stream(cls, i: int, j: int, into: int) -> 'OrientedEdge':
        return cls((i, j), EdgeMode.STREAM, into)

    @classmethod
    def sink(cls, i: int, j: int) -> 'OrientedEdge':
        return cls((i, j), EdgeMode.SINK)


@dataclass(frozen=True)
class Orientation:
    """A source-stream-sink orientation of the subgraph H spanned by its edges."""
    edges: Tuple[OrientedEdge, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.edges, key=lambda o: o.edge))
        seen = set()
        for oriented in ordered:
            if oriented.edge in seen:
                raise ValueError(f"edge {oriented.edge} oriented twice")
            seen.add(oriented.edge)
        object.__setattr__(self, 'edges', ordered)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> Tuple[Edge, ...]:
        return tuple(o.edge for o in self.edges)

    def get(self, edge: Edge) -> Optional[OrientedEdge]:
        edge = canonical_edge(*edge)
        for oriented in self.edges:
            if oriented.edge == edge:
                return oriented
        return None

    @property
    def vertices(self) -> List[int]:
        """Vertices of H."""
        return sorted({x for o in self.edges for x in o.edge})

    def _with_mode(self, mode: EdgeMode) -> List[OrientedEdge]:
        return [o for o in self.edges if o.mode is mode]

    @property
    def sources(self) -> List[OrientedEdge]:
        return self._with_mode(EdgeMode.SOURCE)

    @property
    def sinks(self) -> List[OrientedEdge]:
        return self._with_mode(EdgeMode.SINK)

    @property
    def streams(self) -> List[OrientedEdge]:
        return self._with_mode(EdgeMode.STREAM)

    def incident(self, vertex: int) -> List[OrientedEdge]:
        return [o for o in self.edges if vertex in o.edge]

    def degree(self, vertex: int) -> int:
        return len(self.incident(vertex))

    def in_edges(self, vertex: int) -> List[OrientedEdge]:
        """Edges oriented into vertex: sources at it and streams into it."""
        return [o for o in self.incident(vertex) if vertex in o.heads]

    def out_edges(self, vertex: int) -> List[OrientedEdge]:
        """Edges oriented out of vertex: sinks at it and streams leaving it."""
        return [o for o in self.incident(vertex) if vertex not in o.heads]

    def in_degree(self, vertex: int) -> int:
        return len(self.in_edges(vertex))

    def out_degree(self, vertex: int) -> int:
        return len(self.out_edges(vertex))

    def in_neighbors(self, vertex: int) -> List[int]:
        return sorted(o.other(vertex) for o in self.in_edges(vertex))

    def replace(self, *changed: OrientedEdge) -> 'Orientation':
        updates = {o.edge: o for o in changed}
        return Orientation(tuple(updates.get(o.edge, o) for o in self.edges))

    def to_dict(self) -> Dict:
        return {"edges": [o.to_dict() for o in self.edges]}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Orientation':
        """Read {"edges": [{"e": [i, j], "mode": "stream", "into": j}, ...]}."""
        edges = []
        for item in data["edges"]:
            try:
                mode = EdgeMode(item["mode"])
            except ValueError:
                raise ValueError(f"unknown edge mode {item['mode']!r}") from None
            into = item.get("into")
            edges.append(OrientedEdge(tuple(int(x) for x in item["e"]), mode,
                                      int(into) if into is not None else None))
        return cls(tuple(edges))

    @classmethod
    def from_choices(cls, edges: Sequence[Edge], incoming: Mapping[int, Sequence[Edge]]) -> 'Orientation':
        """
        Classify edges from per-vertex incoming choices.

        An edge chosen at both endpoints is a source, at one endpoint a stream
        into it, at neither a sink.
        """
        chosen: Dict[Edge, List[int]] = {canonical_edge(*e): [] for e in edges}
        for vertex, selected in incoming.items():
            for e in selected:
                chosen[canonical_edge(*e)].append(vertex)
        result = []
        for e, heads in chosen.items():
            if len(heads) == 2:
                result.append(OrientedEdge(e, EdgeMode.SOURCE))
            elif len(heads) == 1:
                result.append(OrientedEdge(e, EdgeMode.STREAM, heads[0]))
            else:
                result.append(OrientedEdge(e, EdgeMode.SINK))
        return cls(tuple(result))


def load_orientation(path: Union[str, Path]) -> Orientation:
    with open(path, 'r', encoding='utf-8') as f:
        return Orientation.from_dict(json.load(f))


@dataclass
class ValidityReport:
    """Degree accounting and validity of an orientation."""
    degree: Dict[int, int] = field(default_factory=dict)
    in_degree: Dict[int, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    acyclic: bool = True
    sources: List[Edge] = field(default_factory=list)
    sinks: List[Edge] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations and self.acyclic

    def to_dict(self) -> Dict:
        return {
            "valid": self.valid,
            "acyclic": self.acyclic,
            "violations": list(self.violations),
            "sources": [list(e) for e in self.sources],
            "sinks": [list(e) for e in self.sinks],
            "degree": {str(k): v for k, v in self.degree.items()},
            "in_degree": {str(k): v for k, v in self.in_degree.items()},
        }


def stream_digraph(o: Orientation) -> nx.DiGraph:
    """Vertices of H with an arc tail -> head for every stream."""
    graph = nx.DiGraph()
    graph.add_nodes_from(o.vertices)
    for oriented in o.streams:
        graph.add_edge(oriented.tail, oriented.into, edge=oriented)
    return graph


def check_validity(o: Orientation, g: Optional[Graph], d: int) -> ValidityReport:
    """
    Check that every vertex of H has degree >= d+1 and in-degree d, that there
    is no oriented cycle, and that H is not empty.

    With g given, every edge of H must also be an edge of g.
    """
    if g is not None:
        for oriented in o.edges:
            if not g.has_edge(*oriented.edge):
                raise EdgeNotInGraph(oriented.edge)
    report = ValidityReport(
        sources=[x.edge for x in o.sources],
        sinks=[x.edge for x in o.sinks],
    )
    if not o.edges:
        report.violations.append("empty subgraph")
    for vertex in o.vertices:
        degree = o.degree(vertex)
        in_degree = o.in_degree(vertex)
        report.degree[vertex] = degree
        report.in_degree[vertex] = in_degree
        if degree < d + 1:
            report.violations.append(f"vertex {vertex} has degree {degree} < {d + 1}")
        if in_degree != d:
            report.violations.append(f"vertex {vertex} has in-degree {in_degree} != {d}")
    report.acyclic = find_oriented_cycle(o) is None
    if not report.acyclic:
        report.violations.append("oriented cycle")
    return report


def require_valid(o: Orientation, d: int, g: Optional[Graph] = None) -> ValidityReport:
    """Raise InvalidOrientation unless o is a valid acyclic orientation."""
    report = check_validity(o, g, d)
    if not report.valid:
        raise InvalidOrientation("; ".join(report.violations))
    return report


def find_oriented_cycle(o: Orientation) -> Optional[List[OrientedEdge]]:
    """
    Return streams mu_1, ..., mu_l, mu_1 where each enters the vertex the next
    leaves, or None if the stream digraph is acyclic.
    """
    graph = stream_digraph(o)
    try:
        arcs = nx.find_cycle(graph, orientation='original')
    except nx.NetworkXNoCycle:
        return None
    cycle = [graph.edges[tail, head]['edge'] for tail, head, _ in arcs]
    return cycle + [cycle[0]]


def remove_cycles(o: Orientation, d: Optional[int] = None) -> Orientation:
    """
    Break oriented cycles without changing any degree or in-degree.

    At the smallest vertex j of a cycle the incoming cycle stream becomes a
    sink and the outgoing one a source; each step removes two streams.

    Raises:
        PreconditionViolated: if d is given and some vertex of H has degree
            below d+1 or in-degree other than d
    """
    if d is not None:
        for vertex in o.vertices:
            if o.degree(vertex) < d + 1 or o.in_degree(vertex) != d:
                raise PreconditionViolated(
                    f"vertex {vertex} has degree {o.degree(vertex)} and in-degree {o.in_degree(vertex)}")
    removed = 0
    while True:
        cycle = find_oriented_cycle(o)
        if cycle is None:
            break
        streams = cycle[:-1]
        j = min(s.into for s in streams)
        incoming = next(s for s in streams if s.into == j)
        outgoing = next(s for s in streams if s.tail == j)
        o = o.replace(OrientedEdge(incoming.edge, EdgeMode.SINK),
                      OrientedEdge(outgoing.edge, EdgeMode.SOURCE))
        removed += 1
    if removed:
        logger.debug(f"Removed {removed} oriented cycle(s)")
    return o


@dataclass(frozen=True)
class SearchLimits:
    """Caps on the orientation search."""
    max_subsets: int = 100_000
    max_orientations: int = 100_000


def _min_degree_ok(edges: Sequence[Edge], d: int) -> bool:
    degree: Dict[int, int] = {}
    for i, j in edges:
        degree[i] = degree.get(i, 0) + 1
        degree[j] = degree.get(j, 0) + 1
    return all(k >= d + 1 for k in degree.values())


def enumerate_orientations(g: Graph, d: int, limits: SearchLimits = SearchLimits()) -> Iterator[Orientation]:
    """
    Yield every valid acyclic source-stream-sink orientation of every edge
    subset H of g whose vertices have degree >= d+1, subsets by size then in
    lexicographic order.
    Every such H lies in the (d+1)-core of g, so only core edges are combined.

    Raises:
        SearchBudgetExceeded: when more subsets or orientations than allowed
            would be examined
    """
    subsets = 0
    orientations = 0
    core = nx.k_core(g.to_networkx(), d + 1)
    edges = [e for e in g.edges if core.has_edge(*e)]
    logger.debug(f"{len(edges)} of {g.edge_count} edges lie in the {d + 1}-core")
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            if not _min_degree_ok(subset, d):
                continue
            subsets += 1
            if subsets > limits.max_subsets:
                raise SearchBudgetExceeded("edge subsets", limits.max_subsets)
            vertices = sorted({x for e in subset for x in e})
            choices = [list(combinations([e for e in subset if v in e], d)) for v in vertices]
            for selection in product(*choices):
                candidate = Orientation.from_choices(subset, dict(zip(vertices, selection)))
                if find_oriented_cycle(candidate) is not None:
                    continue
                orientations += 1
                if orientations > limits.max_orientations:
                    raise SearchBudgetExceeded("orientations", limits.max_orientations)
                yield candidate
    logger.debug(f"Orientation search examined {subsets} subsets and yielded {orientations} orientations")
