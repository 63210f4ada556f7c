"""
balanced subcommand: validity and balance of an orientation.
"""

import logging

from rigiditylib.certificate_engine import is_balanced
from rigiditylib.orientation_model import check_validity

from rigidity.config import get_config
from rigidity.output import VerbosityLevel, emit
from rigidity.utils import (
    EXIT_ERROR, EXIT_OK,
    formatter_for, print_json, resolve_dimension, resolve_graph, resolve_orientation
)

logger = logging.getLogger(__name__)


def handle_balanced_operation(args, logger):
    """Handle balanced: reject invalid orientations, then test every T_sigma."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    orientation, file_dim = resolve_orientation(args.orientation)
    graph = None
    if args.graph:
        graph, graph_dim = resolve_graph(args.graph)
        file_dim = file_dim if file_dim is not None else graph_dim
    d = resolve_dimension(args, file_dim, cfg.get('decision.dimension'))

    validity = check_validity(orientation, graph, d)
    if not validity.valid:
        if args.json:
            print_json({"validity": validity.to_dict(), "balanced": None})
        else:
            emit(formatter.format_error("orientation is not a valid acyclic source-stream-sink orientation"))
            problems = list(validity.violations)
            if not validity.acyclic:
                problems.append("streams contain an oriented cycle")
            emit(formatter.format_listing("Problems:", problems))
        return EXIT_ERROR

    report = is_balanced(
        orientation, d,
        mode=cfg.get('balanced.mode'),
        seed=cfg.get('oracle.seed'),
        trials=cfg.get('balanced.trials'),
        cap=cfg.get('straightening.term_cap'),
    )
    if args.json:
        print_json({"validity": validity.to_dict(), **report.to_dict()})
    else:
        emit(formatter.format_balance(report.to_dict()))
        if formatter.verbosity >= VerbosityLevel.DETAILED:
            emit(formatter.format_listing("In-degrees:", [f"{v}: {k}" for v, k in sorted(validity.in_degree.items())]))
    return EXIT_OK
