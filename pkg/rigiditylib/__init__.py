"""
rigiditylib - Generic infinitesimal rigidity through balanced orientations.

This package builds rigidity matrices at random placements, straightens bracket
polynomials, enumerates and validates source-stream-sink orientations, computes
their certificate polynomials and synthesizes self-stresses from them.
"""

import logging

# Package-level logger (without handlers - configured by the rigidity CLI)
logger = logging.getLogger(__name__)

from .errors import (
    RigidityError,
    LimitError,
    GraphError,
    AlgebraError,
    OrientationError,
    ExpressionBlowup,
    SearchBudgetExceeded,
    InvalidOrientation,
)

from .graph_model import (
    Graph,
    Placement,
    validate_graph,
    tightness,
    rigid_rank,
    edge_vector,
    load_graph,
    load_placement
)

from .oracle import (
    Verdict,
    RankReport,
    build_rigidity_matrix,
    random_placement,
    oracle_decide,
    left_kernel_basis
)

from .bracket_algebra import (
    BracketPolynomial,
    Monomial,
    GenericMatrix,
    straighten,
    straightens_to_zero,
    van_der_waerden_syzygy,
    plucker_relation,
    exchange_expand,
    is_multi_homogeneous,
    evaluate,
    probably_zero,
    parse_polynomial,
    format_polynomial
)

from .orientation_model import (
    EdgeMode,
    OrientedEdge,
    Orientation,
    SearchLimits,
    check_validity,
    find_oriented_cycle,
    remove_cycles,
    enumerate_orientations,
    load_orientation
)

from .certificate_engine import (
    BalanceReport,
    build_stream_tree,
    build_source_tree,
    decorate,
    clear_right_shelves,
    t_mu_nu,
    t_sigma,
    is_balanced,
    lgv_t_sigma
)

from .stress_solver import (
    StressAssignment,
    SinkSystem,
    local_cramer,
    stream_formula,
    solve_sink_system,
    synthesize_stress,
    verify_stress,
    stress_from_orientation
)

from .decider import (
    Decision,
    Method,
    decide,
    decide_tight,
    certificate_from_kernel,
    reduce_surplus
)

try:
    from rigidity.version import __version__
except ImportError:
    __version__ = '0.1.0'


def configure_logging(level=logging.INFO, log_file=None):
    """
    Configure logging for standalone use of rigiditylib.

    The rigidity CLI configures logging itself; this only installs handlers on
    the root logger when none exist yet.

    Args:
        level: Logging level
        log_file: Optional path to log file
    """
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    root_logger = logging.getLogger()
    if not root_logger.handlers:
        root_logger.setLevel(level)
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        console_handler.setLevel(level)
        root_logger.addHandler(console_handler)
        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            file_handler.setLevel(level)
            root_logger.addHandler(file_handler)
    logger.setLevel(level)


__all__ = [
    # Errors
    'RigidityError', 'LimitError', 'GraphError', 'AlgebraError', 'OrientationError',
    'ExpressionBlowup', 'SearchBudgetExceeded', 'InvalidOrientation',

    # Graphs and placements
    'Graph', 'Placement', 'validate_graph', 'tightness', 'rigid_rank', 'edge_vector',
    'load_graph', 'load_placement',

    # Rank oracle
    'Verdict', 'RankReport', 'build_rigidity_matrix', 'random_placement',
    'oracle_decide', 'left_kernel_basis',

    # Bracket algebra
    'BracketPolynomial', 'Monomial', 'GenericMatrix', 'straighten', 'straightens_to_zero',
    'van_der_waerden_syzygy', 'plucker_relation', 'exchange_expand', 'is_multi_homogeneous',
    'evaluate', 'probably_zero', 'parse_polynomial', 'format_polynomial',

    # Orientations
    'EdgeMode', 'OrientedEdge', 'Orientation', 'SearchLimits', 'check_validity',
    'find_oriented_cycle', 'remove_cycles', 'enumerate_orientations', 'load_orientation',

    # Certificates
    'BalanceReport', 'build_stream_tree', 'build_source_tree', 'decorate',
    'clear_right_shelves', 't_mu_nu', 't_sigma', 'is_balanced', 'lgv_t_sigma',

    # Stresses
    'StressAssignment', 'SinkSystem', 'local_cramer', 'stream_formula',
    'solve_sink_system', 'synthesize_stress', 'verify_stress', 'stress_from_orientation',

    # Decisions
    'Decision', 'Method', 'decide', 'decide_tight', 'certificate_from_kernel', 'reduce_surplus',

    'configure_logging'
]
