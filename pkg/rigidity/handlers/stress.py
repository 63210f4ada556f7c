"""
stress subcommand: self-stress synthesis from an orientation.
"""

import logging

from rigiditylib.stress_solver import stress_from_orientation

from rigidity.config import get_config
from rigidity.output import VerbosityLevel, emit
from rigidity.utils import (
    EXIT_ERROR, EXIT_OK,
    formatter_for, parse_sink_values, print_json, resolve_dimension, resolve_graph, resolve_orientation
)

logger = logging.getLogger(__name__)


def handle_stress_operation(args, logger):
    """Handle stress: solve the sink system, propagate, check wA = 0."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    graph, graph_dim = resolve_graph(args.graph)
    orientation, file_dim = resolve_orientation(args.orientation)
    d = resolve_dimension(args, file_dim if file_dim is not None else graph_dim, cfg.get('decision.dimension'))
    sink_values = parse_sink_values(args.sink_values) if args.sink_values else None

    result = stress_from_orientation(
        graph, orientation, d,
        seed=cfg.get('oracle.seed'),
        attempts=cfg.get('stress.resample_attempts'),
        sink_values=sink_values,
    )

    if args.json:
        print_json(result.to_dict())
    elif result.stress is None:
        emit(formatter.format_warning(
            f"sink system has only the zero solution at seed {result.seed}; no self-stress from this orientation"))
    else:
        emit(formatter.format_header(f"Self-stress at placement seed {result.seed}:"))
        for key, value in result.stress.to_dict().items():
            print(f"  w[{key}] = {value}")
        emit(formatter.format_residuals(result.residual.to_dict()))
        if formatter.verbosity >= VerbosityLevel.VERBOSE:
            emit(formatter.format_info(f"Sink system nullity {result.system.nullity}"))

    if result.residual is not None and not result.residual.passed:
        logger.error(f"Equilibrium fails at vertices {result.residual.failing_vertices}")
        return EXIT_ERROR
    return EXIT_OK
