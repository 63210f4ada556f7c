"""
certificate subcommand: the polynomial T_{mu,nu} of a source and a sink.
"""

import logging
from typing import List

from rigiditylib.bracket_algebra import format_polynomial, straightens_to_zero
from rigiditylib.certificate_engine import (
    TreeNode,
    build_source_tree,
    chain_products,
    clear_right_shelves,
    dag_t_mu_nu,
    decorate,
    t_mu_nu,
)
from rigiditylib.errors import PreconditionViolated
from rigiditylib.orientation_model import EdgeMode, require_valid

from rigidity.config import get_config
from rigidity.output import VerbosityLevel, emit
from rigidity.utils import EXIT_OK, formatter_for, parse_edge, print_json, resolve_dimension, resolve_orientation

logger = logging.getLogger(__name__)


def render_tree(node: TreeNode, depth: int = 0) -> List[str]:
    """Indented lines: node label, then left and right shelves."""
    shelves = node.to_dict()
    line = "  " * depth + shelves["node"]
    if node.sign < 0:
        line += " (-)"
    if "left" in shelves:
        line += f"  left {shelves['left']}"
    if "right" in shelves:
        line += f"  right {shelves['right']}"
    lines = [line]
    for child in node.children:
        lines.extend(render_tree(child, depth + 1))
    return lines


def handle_certificate_operation(args, logger):
    """Handle certificate: decorated tree, chain terms and T_{mu,nu}."""
    cfg = get_config(args)
    formatter = formatter_for(args)

    orientation, file_dim = resolve_orientation(args.orientation)
    d = resolve_dimension(args, file_dim, cfg.get('decision.dimension'))
    require_valid(orientation, d)

    mu = orientation.get(parse_edge(args.source))
    nu = orientation.get(parse_edge(args.sink))
    if mu is None or mu.mode is not EdgeMode.SOURCE:
        raise PreconditionViolated(f"{args.source} is not a source of the orientation")
    if nu is None or nu.mode is not EdgeMode.SINK:
        raise PreconditionViolated(f"{args.sink} is not a sink of the orientation")

    poly = t_mu_nu(orientation, mu, nu, d)
    data = {"source": list(mu.edge), "sink": list(nu.edge),
            "terms": len(poly), "polynomial": format_polynomial(poly)}

    tree = None
    if args.tree or formatter.verbosity >= VerbosityLevel.DETAILED:
        tree = clear_right_shelves(decorate(build_source_tree(orientation, mu), orientation, d))
        data["tree"] = tree.to_dict()
        data["chains"] = [
            {"sign": term.sign, "path": list(term.path), "leaf": list(term.leaf)}
            for term in chain_products(tree)
        ]
    if args.zero:
        data["zero"] = straightens_to_zero(poly, cfg.get('straightening.term_cap'))
    if args.lgv:
        via_paths = dag_t_mu_nu(orientation, mu, nu, d, cfg.get('search.max_path_systems'))
        data["lgv_agrees"] = straightens_to_zero(poly - via_paths, cfg.get('straightening.term_cap'))

    if args.json:
        print_json(data)
        return EXIT_OK

    emit(formatter.format_header(f"T[{mu.label()}, {nu.label()}] with {len(poly)} term(s):"))
    print(data["polynomial"])
    if tree is not None:
        emit(formatter.format_listing("Cleared source tree:", render_tree(tree)))
        emit(formatter.format_info(f"{len(data['chains'])} maximal chain(s)"))
    if args.zero:
        emit(formatter.format_header("straightens to zero" if data["zero"] else "does not straighten to zero"))
    if args.lgv:
        if data["lgv_agrees"]:
            emit(formatter.format_info("path-sum expansion agrees"))
        else:
            emit(formatter.format_warning("path-sum expansion differs"))
    return EXIT_OK
