"""
straighten subcommand: bracket polynomials in the standard tableau basis.
"""

import logging

from rigiditylib.bracket_algebra import (
    format_polynomial,
    parse_polynomial,
    probably_zero,
    straighten,
    straightens_to_zero,
)

from rigidity.config import get_config
from rigidity.output import emit
from rigidity.utils import EXIT_OK, formatter_for, print_json

logger = logging.getLogger(__name__)


def read_polynomial_text(path: str) -> str:
    """File contents with '#' comment lines dropped and lines joined."""
    with open(path, 'r', encoding='utf-8') as f:
        lines = [line.strip() for line in f]
    return ' '.join(line for line in lines if line and not line.startswith('#'))


def handle_straighten_operation(args, logger):
    """Handle straighten: normal form, exact zero test or randomized zero test."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    text = args.expr if args.expr is not None else read_polynomial_text(args.input)
    poly = parse_polynomial(text)
    cap = cfg.get('straightening.term_cap')
    logger.info(f"Parsed polynomial with {len(poly)} term(s)")

    if args.zero:
        if args.probabilistic:
            trials = args.trials if args.trials is not None else cfg.get('balanced.trials')
            seed = args.seed if args.seed is not None else cfg.get('oracle.seed')
            zero = probably_zero(poly, trials, seed)
            method = 'probabilistic'
        else:
            zero = straightens_to_zero(poly, cap)
            method = 'straightening'
        if args.json:
            print_json({"input": format_polynomial(poly), "terms": len(poly), "zero": zero, "method": method})
        else:
            emit(formatter.format_header("zero" if zero else "nonzero"))
            emit(formatter.format_info(f"Decided by {method}"))
        return EXIT_OK

    normal = straighten(poly, cap)
    if args.json:
        print_json({
            "input": format_polynomial(poly),
            "terms": len(poly),
            "normal_form": format_polynomial(normal),
            "normal_terms": len(normal),
            "zero": normal.is_zero,
        })
    else:
        print(format_polynomial(normal))
        emit(formatter.format_info(f"{len(poly)} term(s) in, {len(normal)} standard term(s) out"))
    return EXIT_OK
