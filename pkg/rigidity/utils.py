"""
Utility functions for the rigidity command-line tool.

Verbosity resolution, JSON input and output, exit codes and the argument
parsing helpers shared by the subcommand handlers.
"""

import json
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from rigiditylib.fixtures import FIXTURES
from rigiditylib.graph_model import Graph, canonical_edge, format_rational, load_graph, parse_rational
from rigiditylib.orientation_model import Orientation

from rigidity.output import OutputFormatter, VerbosityLevel, configure_formatter

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_RIGID = 0
EXIT_ERROR = 1
EXIT_LIMIT = 2
EXIT_FLEXIBLE = 10


def get_effective_verbosity(args) -> int:
    """
    Get the effective verbosity level from args.

    --quiet overrides -v; the -v count maps to VERBOSE, DETAILED and DEBUG.
    """
    if getattr(args, 'quiet', False):
        return VerbosityLevel.QUIET
    verbose = getattr(args, 'verbose', 0)
    if isinstance(verbose, int) and verbose:
        if verbose >= 3:
            return VerbosityLevel.DEBUG
        if verbose == 2:
            return VerbosityLevel.DETAILED
        return VerbosityLevel.VERBOSE
    if verbose:
        return VerbosityLevel.VERBOSE
    return VerbosityLevel.NORMAL


def formatter_for(args) -> OutputFormatter:
    """Configure the global formatter from the common flags."""
    return configure_formatter(
        verbosity=get_effective_verbosity(args),
        use_color=not getattr(args, 'no_color', False),
        use_unicode=True
    )


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, default=_json_default)


def print_json(data: Any) -> None:
    print(to_json(data))


def save_json(data: Any, file_path: Union[str, Path], pretty: bool = True) -> bool:
    """
    Save data to a JSON file, creating parent directories.

    Returns:
        True if successful, False otherwise
    """
    try:
        path_obj = Path(file_path)
        path_obj.parent.mkdir(parents=True, exist_ok=True)
        with open(path_obj, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2 if pretty else None, default=_json_default)
        return True
    except (OSError, TypeError) as e:
        logger.error(f"Error saving JSON to {file_path}: {e}")
        return False


def resolve_graph(spec: str) -> Tuple[Graph, Optional[int]]:
    """
    Load a graph file, or a named fixture when no such file exists.

    Returns:
        (graph, dimension stored in the file or None)
    """
    if not os.path.exists(spec) and spec in FIXTURES:
        logger.debug(f"Using built-in graph {spec!r}")
        return FIXTURES[spec](), None
    return load_graph(spec)


def resolve_dimension(args, file_dim: Optional[int], default: Optional[int] = None) -> int:
    """
    The dimension from --dim, then the input file, then configuration.

    Raises:
        ValueError: if none of them provides a positive dimension
    """
    for candidate in (getattr(args, 'dim', None), file_dim, default):
        if candidate is not None:
            d = int(candidate)
            if d < 1:
                raise ValueError(f"dimension must be positive, got {d}")
            return d
    raise ValueError("no dimension given; pass --dim or store \"d\" in the graph file")


def parse_edge(text: str) -> Tuple[int, int]:
    """Parse "i,j" (or "i-j") into a canonical edge."""
    parts = text.replace('-', ',').split(',')
    if len(parts) != 2:
        raise ValueError(f"edge {text!r} must look like i,j")
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"edge {text!r} must look like i,j") from None
    return canonical_edge(i, j)


def parse_sink_values(text: str) -> Dict[Tuple[int, int], Fraction]:
    """
    Parse sink values given as a JSON object keyed by edge, inline or in a
    file: {"1,2": 1, "5,6": "-1/2"}. Values are integers or "p/q" strings.
    """
    if os.path.isfile(text):
        with open(text, 'r', encoding='utf-8') as f:
            text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"sink values must be a JSON object keyed by edge: {e}") from None
    if not isinstance(data, dict):
        raise ValueError("sink values must be a JSON object keyed by edge, like {\"1,2\": 1}")
    return {parse_edge(key): parse_rational(value) for key, value in data.items()}


def resolve_orientation(path: str) -> Tuple[Orientation, Optional[int]]:
    """
    Read an orientation file.

    Returns:
        (orientation, dimension stored in the file under "d" or None)
    """
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    return Orientation.from_dict(data), data.get("d")
