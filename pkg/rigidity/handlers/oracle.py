"""
oracle subcommand: exact rank of the rigidity matrix.
"""

import logging

from rigiditylib.graph_model import format_rational, load_placement
from rigiditylib.oracle import Verdict, best_placement, left_kernel_basis, oracle_decide, rank_at_placement

from rigidity.config import get_config
from rigidity.output import emit
from rigidity.utils import EXIT_FLEXIBLE, EXIT_RIGID, formatter_for, print_json, resolve_dimension, resolve_graph

logger = logging.getLogger(__name__)


def handle_oracle_operation(args, logger):
    """Handle oracle: rank at random placements or at a given one."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    graph, file_dim = resolve_graph(args.graph)
    field_name = cfg.get('oracle.field')
    if args.placement:
        placement = load_placement(args.placement, getattr(args, 'dim', None))
        report = rank_at_placement(graph, placement, field_name)
    else:
        d = resolve_dimension(args, file_dim, cfg.get('decision.dimension'))
        report = oracle_decide(graph, d, cfg.get('oracle.seed'), cfg.get('oracle.trials'), field_name)
        placement = None

    data = report.to_dict()
    if args.left_kernel:
        if placement is None:
            placement, _ = best_placement(graph, report.dim, cfg.get('oracle.seed'), cfg.get('oracle.trials'))
        basis = left_kernel_basis(graph, placement)
        data["left_kernel"] = [[format_rational(x) for x in w] for w in basis]

    if args.json:
        print_json(data)
    else:
        emit(formatter.format_verdict(report.verdict.value, 'oracle'))
        emit(formatter.format_rank_report(data))
        if args.left_kernel:
            edges = [f"{i},{j}" for i, j in graph.edges]
            emit(formatter.format_listing(
                f"Self-stress basis ({len(data['left_kernel'])} vector(s)) over edges {' '.join(edges)}:",
                [' '.join(w) for w in data['left_kernel']]))

    return EXIT_RIGID if report.verdict is Verdict.RIGID else EXIT_FLEXIBLE
