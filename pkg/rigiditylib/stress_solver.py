"""
Self-stresses synthesized from an orientation.

At a vertex a with in-neighbours b, j_1..j_{d-1}, equilibrium and Cramer's
rule give w_ab as a combination of the values on the edges leaving a:

    w_ab = sum_c ([j.. a c] / [j.. b a]) w_ac

Working against the stream digraph from the sinks upwards expresses every
edge value as a linear form in the sink variables. A source receives one form
from each endpoint; the two must agree, which is the linear system on the
sink variables whose coefficients are the certificates T_{mu,nu}.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from exactla import determinant, nullspace

from .bracket_algebra import GenericMatrix
from .certificate_engine import evaluate_certificate_matrix
from .errors import InconsistentSource, PreconditionViolated, SingularDenominator
from .graph_model import Edge, Graph, Placement, canonical_edge, edge_vector, format_rational
from .oracle import equilibrium_residuals, random_placement
from .orientation_model import EdgeMode, Orientation, OrientedEdge, require_valid, stream_digraph

logger = logging.getLogger(__name__)

LinearForm = Dict[Edge, Fraction]
DEFAULT_RESAMPLE_ATTEMPTS = 10


def _generic_matrix(o: Orientation, p: Placement) -> GenericMatrix:
    return GenericMatrix.from_placement(p, max(o.vertices))


def local_cramer(o: Orientation, a: int, b: int, p: Placement,
                 m: Optional[GenericMatrix] = None) -> Dict[Edge, Fraction]:
    """
    Coefficients of w_ab in the values of the edges leaving a.

    Raises:
        SingularDenominator: if [j.. b a] vanishes at p
        PreconditionViolated: if b is not an in-neighbour of a
    """
    in_neighbors = o.in_neighbors(a)
    if b not in in_neighbors:
        raise PreconditionViolated(f"{b} is not an in-neighbour of {a}")
    if m is None:
        m = _generic_matrix(o, p)
    others = [x for x in in_neighbors if x != b]
    denominator = m.minor(others + [b, a])
    if denominator == 0:
        raise SingularDenominator(a, others + [b, a])
    coefficients = {}
    for out in o.out_edges(a):
        c = out.other(a)
        coefficients[out.edge] = Fraction(m.minor(others + [a, c])) / denominator
    return coefficients


def determinant_ratio(o: Orientation, a: int, b: int, c: int, p: Placement) -> Fraction:
    """
    The coefficient of w_ac in w_ab from d x d determinants of edge vectors:
    -det(e_aj.., e_ac) / det(e_aj.., e_ab).
    """
    others = [x for x in o.in_neighbors(a) if x != b]
    base = [edge_vector(p, a, j) for j in others]
    bottom = determinant(base + [edge_vector(p, a, b)])
    if bottom == 0:
        raise SingularDenominator(a, others + [b, a])
    return -Fraction(determinant(base + [edge_vector(p, a, c)])) / bottom


def _add_scaled(target: LinearForm, form: Mapping[Edge, Fraction], scale: Fraction) -> None:
    for sink, coefficient in form.items():
        value = target.get(sink, Fraction(0)) + scale * coefficient
        if value:
            target[sink] = value
        else:
            target.pop(sink, None)


def _linear_forms(o: Orientation, p: Placement) -> Tuple[Dict[Edge, LinearForm], Dict[Edge, Dict[int, LinearForm]]]:
    """
    Linear form of every stream and sink, and of each half of every source,
    in the sink variables.
    """
    m = _generic_matrix(o, p)
    forms: Dict[Edge, LinearForm] = {nu.edge: {nu.edge: Fraction(1)} for nu in o.sinks}
    halves: Dict[Edge, Dict[int, LinearForm]] = {mu.edge: {} for mu in o.sources}
    for a in reversed(list(nx.topological_sort(stream_digraph(o)))):
        for incoming in o.in_edges(a):
            b = incoming.other(a)
            form: LinearForm = {}
            for out_edge, coefficient in local_cramer(o, a, b, p, m).items():
                _add_scaled(form, forms[out_edge], coefficient)
            if incoming.mode is EdgeMode.SOURCE:
                halves[incoming.edge][a] = form
            else:
                forms[incoming.edge] = form
    return forms, halves


def stream_formula(o: Orientation, eta: OrientedEdge, p: Placement,
                   head: Optional[int] = None) -> LinearForm:
    """
    w of a stream (or of the half of a source oriented into head) as a linear
    form in the sink variables; sinks its tree misses have coefficient 0.
    """
    forms, halves = _linear_forms(o, p)
    if eta.mode is EdgeMode.SOURCE:
        if head not in eta.edge:
            raise PreconditionViolated(f"head {head} is not an endpoint of {eta.edge}")
        return halves[eta.edge][head]
    return forms[eta.edge]


def _check_denominators(o: Orientation, m: GenericMatrix) -> None:
    for a in o.vertices:
        in_neighbors = o.in_neighbors(a)
        for b in in_neighbors:
            indices = [x for x in in_neighbors if x != b] + [b, a]
            if m.minor(indices) == 0:
                raise SingularDenominator(a, indices)


@dataclass
class SinkSystem:
    """Evaluated certificates, one row per source and one column per sink."""
    matrix: List[List[Fraction]]
    sources: List[Edge]
    sinks: List[Edge]
    basis: List[Tuple[Fraction, ...]] = field(default_factory=list)

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def to_dict(self) -> Dict:
        return {
            "sources": [list(e) for e in self.sources],
            "sinks": [list(e) for e in self.sinks],
            "matrix": [[format_rational(x) for x in row] for row in self.matrix],
            "nullspace": [[format_rational(x) for x in vector] for vector in self.basis],
        }


def solve_sink_system(o: Orientation, p: Placement, d: Optional[int] = None) -> SinkSystem:
    """
    Exact nullspace of the matrix of T_{mu,nu} evaluated at the matrix of p.

    Raises:
        SingularDenominator: if a Cramer denominator vanishes at p
    """
    d = p.dim if d is None else d
    require_valid(o, d)
    m = _generic_matrix(o, p)
    _check_denominators(o, m)
    matrix = [[Fraction(x) for x in row] for row in evaluate_certificate_matrix(o, d, m)]
    sinks = [nu.edge for nu in o.sinks]
    basis = nullspace(matrix, n_cols=len(sinks))
    logger.debug(f"Sink system {len(matrix)}x{len(sinks)} has nullity {len(basis)}")
    return SinkSystem(matrix, [mu.edge for mu in o.sources], sinks, basis)


@dataclass
class StressAssignment:
    """Exact values w_ij on the edges of H."""
    values: Dict[Edge, Fraction]

    def __getitem__(self, edge: Edge) -> Fraction:
        return self.values.get(canonical_edge(*edge), Fraction(0))

    def as_vector(self, g: Graph) -> List[Fraction]:
        """Values in the order of g.edges, zero off H."""
        return [self.values.get(e, Fraction(0)) for e in g.edges]

    def scaled(self, factor: Fraction) -> 'StressAssignment':
        return StressAssignment({e: factor * w for e, w in self.values.items()})

    @property
    def is_zero(self) -> bool:
        return not any(self.values.values())

    def to_dict(self) -> Dict:
        return {f"{i},{j}": format_rational(w) for (i, j), w in sorted(self.values.items())}


def _sink_values(o: Orientation, sink_values: Union[Mapping, Sequence]) -> Dict[Edge, Fraction]:
    sinks = [nu.edge for nu in o.sinks]
    if isinstance(sink_values, Mapping):
        values = {canonical_edge(*e): Fraction(v) for e, v in sink_values.items()}
        unknown = set(values) - set(sinks)
        if unknown:
            raise PreconditionViolated(f"{sorted(unknown)} are not sinks of the orientation")
        return {e: values.get(e, Fraction(0)) for e in sinks}
    if len(sink_values) != len(sinks):
        raise PreconditionViolated(f"expected {len(sinks)} sink values, got {len(sink_values)}")
    return {e: Fraction(v) for e, v in zip(sinks, sink_values)}


def _apply(form: LinearForm, values: Mapping[Edge, Fraction]) -> Fraction:
    return sum((c * values[e] for e, c in form.items()), Fraction(0))


def synthesize_stress(o: Orientation, p: Placement,
                      sink_values: Union[Mapping, Sequence]) -> StressAssignment:
    """
    Propagate sink values through the Cramer's rule at every vertex.

    Raises:
        InconsistentSource: if the two halves of a source disagree
        SingularDenominator: if a Cramer denominator vanishes at p
    """
    values = _sink_values(o, sink_values)
    forms, halves = _linear_forms(o, p)
    w = {edge: _apply(form, values) for edge, form in forms.items()}
    for edge, sides in halves.items():
        i, j = edge
        left, right = _apply(sides[i], values), _apply(sides[j], values)
        if left != right:
            raise InconsistentSource(edge, left, right)
        w[edge] = left
    return StressAssignment(w)


@dataclass
class ResidualReport:
    """Per-vertex equilibrium residuals sum_j w_ij e_ij."""
    residuals: Dict[int, Tuple[Fraction, ...]]

    @property
    def passed(self) -> bool:
        return all(not any(r) for r in self.residuals.values())

    @property
    def failing_vertices(self) -> List[int]:
        return [v for v, r in sorted(self.residuals.items()) if any(r)]

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "residuals": {str(v): [format_rational(x) for x in r] for v, r in sorted(self.residuals.items())},
        }


def verify_stress(g: Graph, p: Placement, w: Union[StressAssignment, Mapping, Sequence]) -> ResidualReport:
    """Exact residual of wA at every vertex."""
    if isinstance(w, StressAssignment):
        vector = w.as_vector(g)
    elif isinstance(w, Mapping):
        vector = StressAssignment({canonical_edge(*e): Fraction(x) for e, x in w.items()}).as_vector(g)
    else:
        vector = [Fraction(x) for x in w]
    return ResidualReport(equilibrium_residuals(g, p, vector))


@dataclass
class StressResult:
    """A stress synthesized at the first placement where every denominator is nonzero."""
    placement: Placement
    seed: int
    system: SinkSystem
    stress: Optional[StressAssignment]
    residual: Optional[ResidualReport]

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "placement": self.placement.to_dict(),
            "sink_system": self.system.to_dict(),
            "w": self.stress.to_dict() if self.stress is not None else None,
            "residual": self.residual.to_dict() if self.residual is not None else None,
        }


def stress_from_orientation(g: Graph, o: Orientation, d: int, seed: int = 0,
                            attempts: int = DEFAULT_RESAMPLE_ATTEMPTS,
                            sink_values: Optional[Union[Mapping, Sequence]] = None) -> StressResult:
    """
    Sample placements seed, seed+1, ... until no denominator vanishes, then
    synthesize a stress from sink_values or from the first nullspace vector of
    the sink system. stress is None when that nullspace is zero.

    Raises:
        SingularDenominator: if every attempt hits a vanishing denominator
    """
    require_valid(o, d, g)
    last_error: Optional[SingularDenominator] = None
    for t in range(attempts):
        p = random_placement(g, d, seed + t)
        try:
            system = solve_sink_system(o, p, d)
            if sink_values is not None:
                values = sink_values
            elif system.basis:
                values = system.basis[0]
            else:
                return StressResult(p, seed + t, system, None, None)
            stress = synthesize_stress(o, p, values)
        except SingularDenominator as e:
            logger.debug(f"Placement seed {seed + t} is not generic: {e}")
            last_error = e
            continue
        return StressResult(p, seed + t, system, stress, verify_stress(g, p, stress))
    raise last_error
