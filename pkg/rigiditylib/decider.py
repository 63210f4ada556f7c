"""
Rigidity decisions through balanced orientations.

A tight graph (|E| = d*v - C(d+1, 2)) is generically infinitesimally flexible
exactly when some source-stream-sink orientation of a subgraph is balanced.
Such an orientation is found either by searching all orientations or by
building one from a self-stress at a random placement.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from exactla import rank

from .bracket_algebra import DEFAULT_TERM_CAP
from .certificate_engine import BalanceReport, is_balanced
from .errors import CannotReduce, InvalidOrientation, PreconditionViolated, SearchBudgetExceeded
from .graph_model import Edge, Graph, canonical_edge, rigid_rank, tightness
from .oracle import RankReport, Verdict, best_placement, build_rigidity_matrix, left_kernel_basis, oracle_decide
from .orientation_model import (
    Orientation,
    SearchLimits,
    check_validity,
    enumerate_orientations,
    remove_cycles,
)

logger = logging.getLogger(__name__)

DECISION_MODES = ('kernel', 'search')
KERNEL_ATTEMPTS = 3


class Method(Enum):
    ORACLE = "oracle"
    SEARCH = "theorem-search"
    KERNEL = "theorem-kernel"


@dataclass
class Decision:
    """A verdict with the method and evidence behind it."""
    verdict: Verdict
    method: Method
    certificate: Optional[Orientation] = None
    evidence: Optional[BalanceReport] = None
    agreement: Optional[bool] = None
    oracle: Optional[RankReport] = None
    exhaustive: bool = False
    candidates: int = 0
    reduced: Optional[Graph] = None
    tightness: int = 0

    def to_dict(self) -> Dict:
        data = {
            "verdict": self.verdict.value,
            "method": self.method.value,
            "tightness": self.tightness,
            "exhaustive": self.exhaustive,
            "candidates": self.candidates,
            "agreement": self.agreement,
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        if self.evidence is not None:
            data["evidence"] = self.evidence.to_dict()
        if self.oracle is not None:
            data["oracle"] = self.oracle.to_dict()
        if self.reduced is not None:
            data["reduced_edges"] = [list(e) for e in self.reduced.edges]
        return data


def _agrees(verdict: Verdict, report: RankReport) -> bool:
    if verdict is Verdict.INCONCLUSIVE_RIGID:
        return report.verdict is Verdict.RIGID
    return verdict is report.verdict


def _support_orientation(support: Graph, d: int, sink: Edge) -> Orientation:
    """
    Orient the support H of a stress: every vertex takes its d incoming edges toward
    its smallest-labelled H-neighbours, never the sink edge.
    """
    incoming: Dict[int, List[Edge]] = {}
    for vertex in sorted({x for e in support.edges for x in e}):
        candidates = [canonical_edge(vertex, u) for u in support.neighbors(vertex)]
        incoming[vertex] = [e for e in candidates if e != sink][:d]
    return Orientation.from_choices(list(support.edges), incoming)


def _support(g: Graph, w: Sequence[Fraction]) -> Graph:
    return Graph(g.v, tuple(e for e, value in zip(g.edges, w) if value != 0))


def _free_index(basis: Sequence[Sequence[Fraction]]) -> int:
    """
    The free variable set to 1 in the first basis vector: its smallest free
    column, which is also its last nonzero entry in reduced echelon form.
    """
    first = basis[0]
    for k in range(len(first) - 1, -1, -1):
        if first[k] != 0:
            if first[k] != 1 or any(other[k] != 0 for other in basis[1:]):
                raise ValueError("basis is not in free-variable form")
            return k
    raise ValueError("basis is not in free-variable form")


def certificate_from_kernel(g: Graph, d: int, seed: int = 0, trials: int = 3,
                            attempts: int = KERNEL_ATTEMPTS) -> Optional[Orientation]:
    """
    Build an orientation from a self-stress, or None when the left kernel is
    zero at the best of `trials` placements.

    One free variable w_ab is set to 1 and the rest to 0; H is the support of
    the resulting stress, (a, b) becomes a sink, and oriented cycles are
    removed. A placement that yields an invalid orientation is not generic;
    the next attempt starts trials seeds further on.

    Raises:
        PreconditionViolated: if g is not tight
    """
    if tightness(g, d) != 0:
        raise PreconditionViolated(f"graph has tightness {tightness(g, d)}, expected 0")
    for attempt in range(attempts):
        start = seed + attempt * trials
        p, report = best_placement(g, d, start, trials)
        basis = left_kernel_basis(g, p)
        if not basis:
            logger.info(f"Left kernel is zero at seed {report.best_seed}")
            return None
        free = _free_index(basis)
        sink = g.edges[free]
        support = _support(g, basis[0])
        thin = [x for x in sorted({x for e in support.edges for x in e}) if support.degree(x) < d + 1]
        if thin:
            logger.debug(f"Support at seed {report.best_seed} has vertices of degree below {d + 1}: {thin}")
            continue
        candidate = _support_orientation(support, d, sink)
        try:
            candidate = remove_cycles(candidate, d)
        except PreconditionViolated as e:
            logger.debug(f"Support at seed {report.best_seed} is degenerate: {e}")
            continue
        validity = check_validity(candidate, g, d)
        if validity.valid:
            logger.info(f"Kernel orientation on {len(candidate)} edges with sink {sink}")
            return candidate
        logger.debug(f"Kernel orientation invalid at seed {report.best_seed}: {validity.violations}")
    raise InvalidOrientation(f"no valid kernel orientation after {attempts} attempts")


def _kernel_decision(g: Graph, d: int, seed: int, trials: int, balance_mode: str,
                     balance_trials: int, cap: int) -> Decision:
    """
    Flexible only with a kernel orientation that passes the balance test.
    Each retry moves past the seeds certificate_from_kernel already used; when
    no orientation balances the verdict comes from the oracle.
    """
    stride = KERNEL_ATTEMPTS * trials
    for attempt in range(KERNEL_ATTEMPTS):
        start = seed + attempt * stride
        candidate = certificate_from_kernel(g, d, start, trials)
        if candidate is None:
            return Decision(Verdict.RIGID, Method.KERNEL)
        evidence = is_balanced(candidate, d, balance_mode, start, balance_trials, cap)
        if evidence.balanced:
            return Decision(Verdict.FLEXIBLE, Method.KERNEL, certificate=candidate, evidence=evidence)
        logger.warning(f"Kernel orientation from seed {start} failed the balance test")
    logger.warning(f"No balanced kernel orientation in {KERNEL_ATTEMPTS} attempts; using the oracle")
    report = oracle_decide(g, d, seed, trials)
    return Decision(report.verdict, Method.ORACLE, oracle=report, agreement=True)


def decide_tight(g: Graph, d: int, mode: str = 'kernel', seed: int = 0, trials: int = 3,
                 balance_mode: str = 'probabilistic', balance_trials: int = 5,
                 limits: SearchLimits = SearchLimits(), verify: bool = False,
                 partial: bool = False, cap: int = DEFAULT_TERM_CAP) -> Decision:
    """
    Decide rigidity of a tight graph by its balanced orientations.

    search tests every orientation in turn; rigid is exhaustive only when the
    search completes. kernel builds one orientation from a self-stress.

    Raises:
        PreconditionViolated: if g is not tight
        SearchBudgetExceeded: when the search is cut short and partial is False
    """
    if mode not in DECISION_MODES:
        raise ValueError(f"unknown decision mode {mode!r}; expected one of {', '.join(DECISION_MODES)}")
    if tightness(g, d) != 0:
        raise PreconditionViolated(f"graph has tightness {tightness(g, d)}, expected 0")

    if mode == 'search':
        decision = Decision(Verdict.RIGID, Method.SEARCH)
        try:
            for candidate in enumerate_orientations(g, d, limits):
                decision.candidates += 1
                report = is_balanced(candidate, d, balance_mode, seed, balance_trials, cap)
                if report.balanced:
                    decision.verdict = Verdict.FLEXIBLE
                    decision.certificate = candidate
                    decision.evidence = report
                    break
            else:
                decision.exhaustive = True
        except SearchBudgetExceeded:
            if not partial:
                raise
            logger.warning(f"Search budget exhausted after {decision.candidates} candidates")
            decision.verdict = Verdict.INCONCLUSIVE_RIGID
    else:
        decision = _kernel_decision(g, d, seed, trials, balance_mode, balance_trials, cap)

    if verify:
        decision.oracle = oracle_decide(g, d, seed, trials)
        decision.agreement = _agrees(decision.verdict, decision.oracle)
        if not decision.agreement:
            logger.warning(f"Verdict {decision.verdict.value} disagrees with the oracle")
    logger.info(f"Decision: {decision.verdict.value} via {decision.method.value}")
    return decision


def reduce_surplus(g: Graph, d: int, seed: int = 0, trials: int = 3) -> Graph:
    """
    Keep a maximal independent set of rigidity-matrix rows, in edge order, at
    the best of `trials` placements. The dropped edges never lower the rank,
    so the result is tight and rigid exactly when g is.

    Raises:
        PreconditionViolated: if g has no surplus edges
        CannotReduce: if the rank is below the rigid rank
    """
    surplus = tightness(g, d)
    if surplus <= 0:
        raise PreconditionViolated(f"graph has tightness {surplus}, expected a surplus")
    p, report = best_placement(g, d, seed, trials)
    target = rigid_rank(g.v, d)
    if report.rank < target:
        raise CannotReduce(report.rank, target)
    a = build_rigidity_matrix(g, p)
    kept_rows: List = []
    kept_edges: List[Edge] = []
    for edge, row in zip(g.edges, a.rows):
        if len(kept_rows) == target:
            break
        if rank(kept_rows + [row]) > len(kept_rows):
            kept_rows.append(row)
            kept_edges.append(edge)
    logger.info(f"Reduced {g.edge_count} edges to {len(kept_edges)}")
    return Graph(g.v, tuple(kept_edges))


def _oracle_decision(g: Graph, d: int, seed: int, trials: int) -> Decision:
    report = oracle_decide(g, d, seed, trials)
    return Decision(report.verdict, Method.ORACLE, oracle=report, agreement=True,
                    tightness=tightness(g, d))


def decide(g: Graph, d: int, mode: str = 'kernel', seed: int = 0, trials: int = 3,
           balance_mode: str = 'probabilistic', balance_trials: int = 5,
           limits: SearchLimits = SearchLimits(), verify: bool = False,
           partial: bool = False, cap: int = DEFAULT_TERM_CAP) -> Decision:
    """
    Decide any graph. Tight graphs go to decide_tight, graphs with surplus
    edges are reduced first, and graphs with too few edges are flexible.
    Graphs with at most d vertices have no tight count to work with and are
    left to the oracle.
    """
    surplus = tightness(g, d)
    if g.v <= d:
        return _oracle_decision(g, d, seed, trials)
    if surplus < 0:
        logger.info(f"{-surplus} edge(s) short of the rigid count")
        decision = _oracle_decision(g, d, seed, trials)
        if decision.verdict is not Verdict.FLEXIBLE:
            logger.warning("Oracle reports rigid for a graph below the rigid count")
        return decision
    reduced = None
    if surplus > 0:
        try:
            reduced = reduce_surplus(g, d, seed, trials)
        except CannotReduce as e:
            logger.info(f"Cannot reduce: {e}")
            return _oracle_decision(g, d, seed, trials)
        g_tight = reduced
    else:
        g_tight = g
    decision = decide_tight(g_tight, d, mode, seed, trials, balance_mode, balance_trials,
                            limits, verify, partial, cap)
    decision.reduced = reduced
    decision.tightness = surplus
    return decision
