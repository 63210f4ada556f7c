"""
Certificate polynomials of a source-stream-sink orientation.

The stream tree of a stream expands the edges oriented out of its head until
every branch ends in a sink. A source tree joins the stream trees of its two
halves under an empty root. Decorating a tree puts the Cramer's rule numerator
of each arrow on the lower node's left shelf and its denominator on the upper
node's right shelf. Clearing the right shelves then makes the left-shelf
products along the chains into the terms of T_{mu,nu}.

The same data also lives on one acyclic digraph whose nodes are the oriented
edges (see certificate_dag); path sums on it evaluate certificates without
expanding trees, and node-disjoint path systems give an independent formula
for T_sigma.
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from exactla import PRIME, determinant_mod

from .bracket_algebra import (
    DEFAULT_TERM_CAP,
    BracketPolynomial,
    Coefficient,
    GenericMatrix,
    Monomial,
    format_polynomial,
    format_tableau,
    is_multi_homogeneous,
    permutation_sign,
    random_generic_matrix,
    straighten,
    straightens_to_zero,
)
from .errors import InvalidOrientation, SearchBudgetExceeded, TooManySinks
from .orientation_model import EdgeMode, Orientation, OrientedEdge, require_valid
from .graph_model import Edge

logger = logging.getLogger(__name__)

MODES = ('probabilistic', 'certified')
DEFAULT_PATH_SYSTEM_CAP = 1_000_000


# === Trees ===

@dataclass
class TreeNode:
    """
    A node of a stream or source tree.

    head is the vertex the node's edge points into along this branch; it is
    None for sinks and for the empty root of a source tree. sign is the
    designation of the branch below a source root (+1 positive, -1 negative).
    """
    edge: Optional[OrientedEdge]
    head: Optional[int] = None
    sign: int = 1
    children: List['TreeNode'] = field(default_factory=list)
    left: Monomial = field(default_factory=Monomial)
    right: Monomial = field(default_factory=Monomial)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def label(self) -> str:
        if self.edge is None:
            return "()"
        i, j = self.edge.edge
        if self.head is None:
            return f"({i},{j})_0"
        return f"({i},{j})_{self.head}"

    def copy(self) -> 'TreeNode':
        return TreeNode(self.edge, self.head, self.sign,
                        [child.copy() for child in self.children], self.left, self.right)

    def nodes(self) -> List['TreeNode']:
        """Preorder listing."""
        result = [self]
        for child in self.children:
            result.extend(child.nodes())
        return result

    def to_dict(self) -> Dict:
        data: Dict = {"node": self.label()}
        if self.left.rows or self.left.sign != 1:
            data["left"] = _format_monomial(self.left)
        if self.right.rows or self.right.sign != 1:
            data["right"] = _format_monomial(self.right)
        if self.children:
            data["children"] = [child.to_dict() for child in self.children]
        return data


def _format_monomial(m: Monomial) -> str:
    text = format_tableau(m.rows) if m.rows else "1"
    return ("-" if m.sign < 0 else "") + text


def _expand(o: Orientation, edge: OrientedEdge, head: int, sign: int, depth: int) -> TreeNode:
    if depth > len(o.edges):
        raise InvalidOrientation("stream tree does not terminate; the orientation has an oriented cycle")
    node = TreeNode(edge, head, sign)
    outgoing = sorted(o.out_edges(head), key=lambda x: x.edge)
    if not outgoing:
        raise InvalidOrientation(f"vertex {head} has no edge oriented out of it")
    for child in outgoing:
        if child.mode is EdgeMode.SINK:
            node.children.append(TreeNode(child, None, sign))
        else:
            node.children.append(_expand(o, child, child.into, sign, depth + 1))
    return node


def build_stream_tree(o: Orientation, root: OrientedEdge) -> TreeNode:
    """
    Full expansion of the stream tree of root.

    Raises:
        InvalidOrientation: if root is not a stream of o or the expansion does
            not terminate in sinks
    """
    if root.mode is not EdgeMode.STREAM or o.get(root.edge) != root:
        raise InvalidOrientation(f"{root.label()} is not a stream of the orientation")
    return _expand(o, root, root.into, 1, 0)


def _positive_negative(mu: OrientedEdge) -> Tuple[int, int]:
    """The positive child of a source is the half oriented into its smaller endpoint."""
    return mu.edge


def build_source_tree(o: Orientation, mu: OrientedEdge) -> TreeNode:
    """Empty root over the stream trees of (i,j)_i (positive) and (i,j)_j (negative)."""
    if mu.mode is not EdgeMode.SOURCE or o.get(mu.edge) != mu:
        raise InvalidOrientation(f"{mu.label()} is not a source of the orientation")
    positive, negative = _positive_negative(mu)
    root = TreeNode(None)
    root.children = [_expand(o, mu, positive, 1, 0), _expand(o, mu, negative, -1, 0)]
    return root


def _arrow_brackets(o: Orientation, a: int, b: int, c: int) -> Tuple[Monomial, Monomial]:
    """n = [j.. a c] and d = [j.. b a] for the arrow (a,b)_a -> (a,c)."""
    others = [x for x in o.in_neighbors(a) if x != b]
    return Monomial.bracket(others + [a, c]), Monomial.bracket(others + [b, a])


def decorate(tree: TreeNode, o: Orientation, d: int) -> TreeNode:
    """
    Return a copy of tree with the shelves of every arrow filled in.

    Raises:
        InvalidOrientation: if a vertex of the tree does not have in-degree d
    """
    tree = tree.copy()
    for node in tree.nodes():
        if node.head is None or node.edge is None:
            continue
        a = node.head
        if o.in_degree(a) != d:
            raise InvalidOrientation(f"vertex {a} has in-degree {o.in_degree(a)} != {d}")
        b = node.edge.other(a)
        for child in node.children:
            numerator, denominator = _arrow_brackets(o, a, b, child.edge.other(a))
            child.left = numerator
            node.right = denominator
    return tree


def maximal_chains(tree: TreeNode) -> List[List[TreeNode]]:
    """Root-to-leaf chains, depth first with children in edge order."""
    if tree.is_leaf:
        return [[tree]]
    chains = []
    for child in tree.children:
        for chain in maximal_chains(child):
            chains.append([tree] + chain)
    return chains


def clear_right_shelves(tree: TreeNode, chain_order: Optional[Sequence[int]] = None) -> TreeNode:
    """
    Return a copy of a decorated tree with its right shelves cleared.

    Chains are processed in the order chain_order gives as indices into
    maximal_chains(tree), by default in that order. For each chain C, every
    node hanging off C has its left shelf multiplied by the right shelves of
    the nodes of C below its parent; then the right shelves on C are reset.
    Afterwards the left-shelf product along any chain is its product of
    numerators times every right shelf off the chain.
    """
    tree = tree.copy()
    chains = maximal_chains(tree)
    order = range(len(chains)) if chain_order is None else chain_order
    if sorted(order) != list(range(len(chains))):
        raise ValueError("chain_order must be a permutation of the chain indices")
    for index in order:
        chain = chains[index]
        for depth, eta in enumerate(chain[:-1]):
            below = chain[depth + 1:]
            for xi in eta.children:
                if xi is chain[depth + 1]:
                    continue
                for node in below:
                    if node.right.rows or node.right.sign != 1:
                        xi.left = xi.left * node.right
        for eta in chain:
            eta.right = Monomial()
    return tree


@dataclass(frozen=True)
class ChainTerm:
    """One signed maximal chain of a cleared source tree."""
    sign: int
    product: Monomial
    leaf: Edge
    path: Tuple[str, ...]

    def to_polynomial(self) -> BracketPolynomial:
        return self.product.to_polynomial(self.sign)


def chain_products(tree: TreeNode) -> List[ChainTerm]:
    """Signed left-shelf products along the chains of a cleared tree."""
    terms = []
    for chain in maximal_chains(tree):
        product = Monomial()
        for node in chain:
            product = product * node.left
        sign = chain[1].sign if len(chain) > 1 else 1
        terms.append(ChainTerm(sign, product, chain[-1].edge.edge, tuple(n.label() for n in chain)))
    return terms


def _cleared_source_tree(o: Orientation, mu: OrientedEdge, d: int) -> TreeNode:
    return clear_right_shelves(decorate(build_source_tree(o, mu), o, d))


def _require_source_and_sink(o: Orientation, mu: OrientedEdge, nu: OrientedEdge) -> None:
    if mu.mode is not EdgeMode.SOURCE or o.get(mu.edge) != mu:
        raise InvalidOrientation(f"{mu.label()} is not a source of the orientation")
    if nu.mode is not EdgeMode.SINK or o.get(nu.edge) != nu:
        raise InvalidOrientation(f"{nu.label()} is not a sink of the orientation")


def t_mu_nu(o: Orientation, mu: OrientedEdge, nu: OrientedEdge, d: int) -> BracketPolynomial:
    """
    Sum over the chains of the cleared source tree of mu that end at nu of the
    signed left-shelf products. Zero when no chain reaches nu.
    """
    require_valid(o, d)
    _require_source_and_sink(o, mu, nu)
    return _t_from_tree(_cleared_source_tree(o, mu, d), nu)


def _t_from_tree(tree: TreeNode, nu: OrientedEdge) -> BracketPolynomial:
    result = BracketPolynomial()
    for term in chain_products(tree):
        if term.leaf == nu.edge:
            result = result + term.to_polynomial()
    return result


def certificate_rows(o: Orientation, d: int,
                     sources: Optional[Sequence[OrientedEdge]] = None) -> Dict[Tuple[Edge, Edge], BracketPolynomial]:
    """T_{mu,nu} for every requested source and every sink, one tree per source."""
    require_valid(o, d)
    rows = {}
    for mu in (o.sources if sources is None else sources):
        tree = _cleared_source_tree(o, mu, d)
        for nu in o.sinks:
            rows[mu.edge, nu.edge] = _t_from_tree(tree, nu)
    return rows


def _determinant_expansion(matrix: Sequence[Sequence[BracketPolynomial]]) -> BracketPolynomial:
    size = len(matrix)
    total = BracketPolynomial()
    for pi in permutations(range(size)):
        term = BracketPolynomial.one()
        for j in range(size):
            term = term * matrix[j][pi[j]]
            if term.is_zero:
                break
        if not term.is_zero:
            total = total + term * permutation_sign(pi)
    return total


def t_sigma(o: Orientation, sigma: Sequence[int], d: int,
            rows: Optional[Dict[Tuple[Edge, Edge], BracketPolynomial]] = None) -> BracketPolynomial:
    """
    Signed permutation sum of products T_{mu_sigma(j), nu_pi(j)}.

    Sources and sinks are taken in edge order; sigma lists one distinct
    source index (0-based) per sink.

    Raises:
        TooManySinks: if there are more sinks than sources
    """
    require_valid(o, d)
    sources, sinks = o.sources, o.sinks
    if len(sinks) > len(sources):
        raise TooManySinks(len(sinks), len(sources))
    if len(sigma) != len(sinks) or len(set(sigma)) != len(sigma):
        raise ValueError(f"sigma must choose {len(sinks)} distinct sources")
    chosen = [sources[i] for i in sigma]
    if rows is None:
        rows = certificate_rows(o, d, chosen)
    matrix = [[rows[mu.edge, nu.edge] for nu in sinks] for mu in chosen]
    return _determinant_expansion(matrix)


# === The oriented-edge digraph ===

def certificate_dag(o: Orientation, d: int) -> nx.DiGraph:
    """
    Digraph on oriented edges with an arrow eta -> xi whenever eta points into
    a vertex a that xi leaves. Each arrow carries its numerator, denominator,
    the vertex a, and a sign that is -1 only out of the negative half of a
    source.
    """
    dag = nx.DiGraph()
    for oriented in o.edges:
        dag.add_node(oriented.edge, oriented=oriented)
    for eta in o.edges:
        for a in eta.heads:
            b = eta.other(a)
            sign = 1
            if eta.mode is EdgeMode.SOURCE:
                sign = 1 if a == _positive_negative(eta)[0] else -1
            for xi in o.out_edges(a):
                numerator, denominator = _arrow_brackets(o, a, b, xi.other(a))
                dag.add_edge(eta.edge, xi.edge, numerator=numerator, denominator=denominator,
                             vertex=a, sign=sign)
    return dag


def _head_denominators(o: Orientation, eta: OrientedEdge) -> Dict[int, Monomial]:
    """Right shelf of the tree node(s) of eta, keyed by head."""
    shelves = {}
    for a in eta.heads:
        b = eta.other(a)
        others = [x for x in o.in_neighbors(a) if x != b]
        shelves[a] = Monomial.bracket(others + [b, a])
    return shelves


def path_counts(dag: nx.DiGraph, start: Edge) -> Dict[Edge, int]:
    """Number of directed paths from start to each reachable node."""
    order = [x for x in nx.topological_sort(dag) if x == start or nx.has_path(dag, start, x)]
    counts = {x: 0 for x in order}
    counts[start] = 1
    for x in order:
        for _, y in dag.out_edges(x):
            counts[y] += counts[x]
    return counts


def denominator(o: Orientation, mu: OrientedEdge, d: int) -> Monomial:
    """
    Product of every right shelf of the decorated source tree of mu.

    A stream reached by n distinct paths appears n times in the tree, so its
    shelf enters with exponent n.
    """
    require_valid(o, d)
    dag = certificate_dag(o, d)
    counts = path_counts(dag, mu.edge)
    result = Monomial()
    for shelf in _head_denominators(o, mu).values():
        result = result * shelf
    for node, count in counts.items():
        oriented = dag.nodes[node]['oriented']
        if node == mu.edge or oriented.mode is not EdgeMode.STREAM:
            continue
        shelf = _head_denominators(o, oriented)[oriented.into]
        result = result * Monomial(shelf.sign ** count, shelf.rows * count)
    return result


def _degree_key(degree: Counter) -> frozenset:
    return frozenset((k, v) for k, v in degree.items() if v != 0)


def degree_law_holds(o: Orientation, mu: OrientedEdge, nu: OrientedEdge, d: int) -> bool:
    """
    Check that every path from mu to nu changes the multidegree by deg nu -
    deg mu, so that all terms of T_{mu,nu} share the multidegree
    deg D(mu) + deg nu - deg mu.
    """
    dag = certificate_dag(o, d)
    reached: Dict[Edge, set] = {mu.edge: {frozenset()}}
    for x in nx.topological_sort(dag):
        if x not in reached:
            continue
        for _, y, data in dag.out_edges(x, data=True):
            step = data['numerator'].multidegree()
            step.subtract(data['denominator'].multidegree())
            for degree in reached[x]:
                total = Counter(dict(degree))
                total.update(step)
                reached.setdefault(y, set()).add(_degree_key(total))
    if nu.edge not in reached:
        return True
    expected = Counter(nu.edge)
    expected.subtract(Counter(mu.edge))
    return reached[nu.edge] == {_degree_key(expected)}


def _evaluate_monomial(m: Monomial, matrix: GenericMatrix, modulus: Optional[int],
                       cache: Dict) -> Coefficient:
    value: Coefficient = m.sign
    for row in m.rows:
        minor = cache.get(row)
        if minor is None:
            minor = cache[row] = matrix.minor(row, modulus)
        value = value * minor
        if modulus is not None:
            value %= modulus
    return value


class _VanishingDenominator(Exception):
    pass


def _inverse(value: Coefficient, modulus: Optional[int]) -> Coefficient:
    if value == 0:
        raise _VanishingDenominator()
    if modulus is None:
        return Fraction(1) / value
    return pow(value, -1, modulus)


def evaluate_certificate_matrix(o: Orientation, d: int, matrix: GenericMatrix,
                                modulus: Optional[int] = None,
                                dag: Optional[nx.DiGraph] = None) -> List[List[Coefficient]]:
    """
    k x l matrix of T_{mu,nu} evaluated at matrix, computed as D(mu) Q_{mu,nu}
    with Q the weighted path sum on the oriented-edge digraph.

    Raises:
        ZeroDivisionError: if some denominator bracket vanishes at matrix
    """
    if dag is None:
        dag = certificate_dag(o, d)
    cache: Dict = {}
    order = list(nx.topological_sort(dag))
    result = []
    try:
        for mu in o.sources:
            value: Dict[Edge, Coefficient] = {mu.edge: 1}
            counts: Dict[Edge, int] = {mu.edge: 1}
            big_d: Coefficient = 1
            for shelf in _head_denominators(o, mu).values():
                big_d = big_d * _evaluate_monomial(shelf, matrix, modulus, cache)
            for x in order:
                if x not in value:
                    continue
                for _, y, data in dag.out_edges(x, data=True):
                    weight = data['sign'] * _evaluate_monomial(data['numerator'], matrix, modulus, cache)
                    weight = weight * _inverse(_evaluate_monomial(data['denominator'], matrix, modulus, cache),
                                               modulus)
                    increment = value[x] * weight
                    value[y] = value.get(y, 0) + increment
                    counts[y] = counts.get(y, 0) + counts[x]
                    if modulus is not None:
                        value[y] %= modulus
            for x, count in counts.items():
                oriented = dag.nodes[x]['oriented']
                if x == mu.edge or oriented.mode is not EdgeMode.STREAM:
                    continue
                shelf = _head_denominators(o, oriented)[oriented.into]
                factor = _evaluate_monomial(shelf, matrix, modulus, cache)
                big_d = big_d * (pow(factor, count, modulus) if modulus is not None else factor ** count)
                if modulus is not None:
                    big_d %= modulus
            row = []
            for nu in o.sinks:
                entry = big_d * value.get(nu.edge, 0)
                row.append(entry % modulus if modulus is not None else entry)
            result.append(row)
    except _VanishingDenominator:
        raise ZeroDivisionError("a denominator bracket vanishes at this matrix") from None
    return result


# === Path systems ===

def _paths_to_sinks(dag: nx.DiGraph, start: Edge, sinks: set, budget: List[int]) -> List[List[Tuple[Edge, Edge]]]:
    paths = []

    def walk(node: Edge, arcs: List[Tuple[Edge, Edge]]):
        if node in sinks:
            budget[0] -= 1
            if budget[0] < 0:
                raise SearchBudgetExceeded("paths", budget[1])
            paths.append(list(arcs))
            return
        for _, nxt in sorted(dag.out_edges(node)):
            arcs.append((node, nxt))
            walk(nxt, arcs)
            arcs.pop()

    walk(start, [])
    return paths


def dag_t_mu_nu(o: Orientation, mu: OrientedEdge, nu: OrientedEdge, d: int,
                max_paths: int = DEFAULT_PATH_SYSTEM_CAP) -> BracketPolynomial:
    """D(mu) Q_{mu,nu} expanded path by path on the oriented-edge digraph."""
    require_valid(o, d)
    _require_source_and_sink(o, mu, nu)
    return lgv_t_sigma(o, [o.sources.index(mu)], d, max_path_systems=max_paths, sinks=[nu])


def lgv_t_sigma(o: Orientation, sigma: Sequence[int], d: int,
                max_path_systems: int = DEFAULT_PATH_SYSTEM_CAP,
                sinks: Optional[Sequence[OrientedEdge]] = None) -> BracketPolynomial:
    """
    T_sigma as the product of the D(mu) of the chosen sources times the
    signed sum over node-disjoint path systems of their arrow weights.

    Raises:
        TooManySinks: if there are more sinks than sources
        SearchBudgetExceeded: if more than max_path_systems paths or systems
            are visited
    """
    require_valid(o, d)
    sources = o.sources
    if sinks is None:
        sinks = o.sinks
        if len(sinks) > len(sources):
            raise TooManySinks(len(sinks), len(sources))
    if len(sigma) != len(sinks) or len(set(sigma)) != len(sigma):
        raise ValueError(f"sigma must choose {len(sinks)} distinct sources")
    chosen = [sources[i] for i in sigma]
    dag = certificate_dag(o, d)
    sink_index = {nu.edge: m for m, nu in enumerate(sinks)}
    budget = [max_path_systems, max_path_systems]
    paths = [_paths_to_sinks(dag, mu.edge, set(sink_index), budget) for mu in chosen]

    common = Monomial()
    for mu in chosen:
        common = common * denominator(o, mu, d)

    total = BracketPolynomial()
    systems = 0

    def weigh(system: List[List[Tuple[Edge, Edge]]]) -> BracketPolynomial:
        numerator = Monomial()
        divisor = Monomial()
        for path in system:
            for arc in path:
                data = dag.edges[arc]
                numerator = numerator * data['numerator'] * Monomial(data['sign'], ())
                divisor = divisor * data['denominator']
        ends = [sink_index[path[-1][1]] for path in system]
        return (common * numerator).divide(divisor).to_polynomial(permutation_sign(ends))

    def extend(i: int, used: set, system: List):
        nonlocal total, systems
        if i == len(chosen):
            systems += 1
            if systems > max_path_systems:
                raise SearchBudgetExceeded("path systems", max_path_systems)
            total = total + weigh(system)
            return
        for path in paths[i]:
            nodes = {chosen[i].edge} | {arc[1] for arc in path}
            if nodes & used:
                continue
            system.append(path)
            extend(i + 1, used | nodes, system)
            system.pop()

    extend(0, set(), [])
    logger.debug(f"LGV expansion visited {systems} disjoint path systems")
    return total


# === Balance ===

@dataclass
class BalanceReport:
    """Outcome and evidence of a balance test."""
    balanced: bool
    mode: str
    seed: int
    trials: int
    sources: List[Edge] = field(default_factory=list)
    sinks: List[Edge] = field(default_factory=list)
    sinks_exceed_sources: bool = False
    sigmas: List[Dict] = field(default_factory=list)
    certificate_terms: Dict[str, int] = field(default_factory=dict)
    failing_sigma: Optional[List[Edge]] = None

    def to_dict(self) -> Dict:
        return {
            "balanced": self.balanced,
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "sources": [list(e) for e in self.sources],
            "sinks": [list(e) for e in self.sinks],
            "sinks_exceed_sources": self.sinks_exceed_sources,
            "sigmas": list(self.sigmas),
            "certificate_terms": dict(self.certificate_terms),
            "failing_sigma": [list(e) for e in self.failing_sigma] if self.failing_sigma else None,
        }


def _pair_key(mu: Edge, nu: Edge) -> str:
    return f"{list(mu)}->{list(nu)}"


def is_balanced(o: Orientation, d: int, mode: str = 'probabilistic', seed: int = 0,
                trials: int = 5, cap: int = DEFAULT_TERM_CAP) -> BalanceReport:
    """
    Decide whether every T_sigma vanishes.

    More sinks than sources is balanced outright. Otherwise one sigma per
    l-subset of sources is tested, since reordering the chosen sources only
    changes the sign of T_sigma. Certified mode expands and straightens each
    T_sigma. Probabilistic mode checks the degree law and then evaluates the
    determinants of the certificate matrix at `trials` random matrices over
    the prime field.

    Raises:
        InvalidOrientation: if o is not a valid acyclic orientation
        ExpressionBlowup: if straightening exceeds cap terms
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    require_valid(o, d)
    sources, sinks = o.sources, o.sinks
    report = BalanceReport(True, mode, seed, trials,
                           sources=[s.edge for s in sources], sinks=[s.edge for s in sinks])
    if len(sinks) > len(sources):
        logger.warning(f"Orientation has {len(sinks)} sinks and only {len(sources)} sources")
        report.sinks_exceed_sources = True
        return report

    subsets = list(combinations(range(len(sources)), len(sinks)))
    if mode == 'certified':
        rows = certificate_rows(o, d)
        for (mu, nu), poly in rows.items():
            report.certificate_terms[_pair_key(mu, nu)] = len(poly)
        for sigma in subsets:
            poly = t_sigma(o, sigma, d, rows)
            homogeneous, _ = is_multi_homogeneous(poly)
            if not homogeneous:
                raise InvalidOrientation("certificate polynomial is not multi-homogeneous")
            zero = straightens_to_zero(poly, cap)
            evidence = {"sigma": [list(sources[i].edge) for i in sigma], "terms": len(poly), "zero": zero}
            if not zero:
                evidence["normal_form"] = format_polynomial(straighten(poly, cap))
            report.sigmas.append(evidence)
            if not zero:
                report.balanced = False
                report.failing_sigma = [sources[i].edge for i in sigma]
                break
        return report

    for mu in sources:
        for nu in sinks:
            if not degree_law_holds(o, mu, nu, d):
                raise InvalidOrientation(f"degree law fails for {mu.label()} and {nu.label()}")
    dag = certificate_dag(o, d)
    n = max(o.vertices)
    rng = random.Random(seed)
    matrices = []
    attempts = 0
    while len(matrices) < trials:
        attempts += 1
        if attempts > 10 * trials:
            raise InvalidOrientation("denominators vanish at every sampled matrix")
        m = random_generic_matrix(n, d, rng)
        try:
            matrices.append(evaluate_certificate_matrix(o, d, m, PRIME, dag))
        except ZeroDivisionError:
            logger.debug("Denominator vanished at a sampled matrix; drawing another")
    for sigma in subsets:
        zero = all(determinant_mod([values[i] for i in sigma], PRIME) == 0 for values in matrices)
        report.sigmas.append({"sigma": [list(sources[i].edge) for i in sigma], "zero": zero})
        if not zero:
            report.balanced = False
            report.failing_sigma = [sources[i].edge for i in sigma]
            break
    logger.info(f"Orientation is {'balanced' if report.balanced else 'not balanced'} ({mode})")
    return report
