"""
check subcommand: decide rigidity of a graph.
"""

import logging

from rigiditylib.decider import Method, decide
from rigiditylib.oracle import Verdict
from rigiditylib.orientation_model import SearchLimits

from rigidity.config import get_config
from rigidity.output import VerbosityLevel, emit
from rigidity.utils import (
    EXIT_FLEXIBLE, EXIT_LIMIT, EXIT_RIGID,
    formatter_for, print_json, resolve_dimension, resolve_graph
)

logger = logging.getLogger(__name__)

VERDICT_EXIT_CODES = {
    Verdict.RIGID: EXIT_RIGID,
    Verdict.FLEXIBLE: EXIT_FLEXIBLE,
    Verdict.INCONCLUSIVE_RIGID: EXIT_LIMIT,
}


def handle_check_operation(args, logger):
    """Handle check: tightness dispatch, theorem decision, optional oracle cross-check."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    graph, file_dim = resolve_graph(args.graph)
    d = resolve_dimension(args, file_dim, cfg.get('decision.dimension'))
    limits = SearchLimits(cfg.get('search.max_subsets'), cfg.get('search.max_orientations'))
    logger.info(f"Checking graph with {graph.v} vertices and {graph.edge_count} edges in dimension {d}")

    decision = decide(
        graph, d,
        mode=cfg.get('decision.mode'),
        seed=cfg.get('oracle.seed'),
        trials=cfg.get('oracle.trials'),
        balance_mode=cfg.get('balanced.mode'),
        balance_trials=cfg.get('balanced.trials'),
        limits=limits,
        verify=cfg.get('decision.verify'),
        partial=getattr(args, 'partial', False),
        cap=cfg.get('straightening.term_cap'),
    )

    if args.json:
        print_json(decision.to_dict())
    else:
        emit(formatter.format_verdict(decision.verdict.value, decision.method.value))
        if decision.reduced is not None:
            emit(formatter.format_info(f"Reduced {decision.tightness} surplus edge(s) to a tight subgraph"))
        if decision.certificate is not None and formatter.verbosity >= VerbosityLevel.VERBOSE:
            emit(formatter.format_listing("Certificate orientation:",
                                          [o.label() for o in decision.certificate.edges]))
        if decision.evidence is not None and formatter.verbosity >= VerbosityLevel.VERBOSE:
            emit(formatter.format_balance(decision.evidence.to_dict()))
        if decision.method is Method.SEARCH:
            emit(formatter.format_info(f"Examined {decision.candidates} orientation(s); "
                                       f"{'exhaustive' if decision.exhaustive else 'stopped early'}"))
        if decision.oracle is not None:
            emit(formatter.format_rank_report(decision.oracle.to_dict()))
        if decision.agreement is False:
            emit(formatter.format_warning("verdict disagrees with the rank oracle"))

    return VERDICT_EXIT_CODES[decision.verdict]
