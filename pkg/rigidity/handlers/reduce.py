"""
reduce subcommand: drop surplus edges down to a tight subgraph.
"""

import logging

from rigiditylib.decider import reduce_surplus
from rigiditylib.graph_model import tightness

from rigidity.config import get_config
from rigidity.output import emit
from rigidity.utils import EXIT_ERROR, EXIT_OK, formatter_for, print_json, resolve_dimension, resolve_graph, save_json

logger = logging.getLogger(__name__)


def handle_reduce_operation(args, logger):
    """Handle reduce: greedy independent rows at the best placement."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    graph, file_dim = resolve_graph(args.graph)
    d = resolve_dimension(args, file_dim, cfg.get('decision.dimension'))
    reduced = reduce_surplus(graph, d, cfg.get('oracle.seed'), cfg.get('oracle.trials'))
    dropped = sorted(set(graph.edges) - set(reduced.edges))
    data = reduced.to_dict(d)

    if args.output and not save_json(data, args.output):
        return EXIT_ERROR

    if args.json:
        print_json({**data, "dropped": [list(e) for e in dropped], "tightness": tightness(reduced, d)})
    else:
        emit(formatter.format_header(f"Kept {reduced.edge_count} of {graph.edge_count} edges"))
        emit(formatter.format_listing("Dropped:", [f"{i},{j}" for i, j in dropped]))
        if args.output:
            emit(formatter.format_info(f"Wrote {args.output}"))
    return EXIT_OK
