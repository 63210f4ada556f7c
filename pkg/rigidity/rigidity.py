#!/usr/bin/env python3
"""
rigidity.py - Main entry point for the rigidity tool.

Parses the command line, configures logging and dispatches to the
subcommand handlers. Library errors are mapped to exit codes here.
"""

import sys
import logging
import platform

try:
    from colorama import init, Fore, Style
    init(autoreset=True)
    HAVE_COLOR = True
except ImportError:
    HAVE_COLOR = False

    class Fore:
        RED = ''
        YELLOW = ''
        GREEN = ''
        CYAN = ''
        RESET = ''

    class Style:
        BRIGHT = ''
        RESET_ALL = ''

from rigiditylib.errors import LimitError, RigidityError

from .cli import create_parser
from .config import reset_config
from .handlers import HANDLERS
from .utils import EXIT_ERROR, EXIT_LIMIT, EXIT_OK, get_effective_verbosity
from .output import VerbosityLevel
from .version import __version__, get_base_version

PACKAGE_LOGGERS = ['rigidity', 'rigiditylib', 'exactla']

FRIENDLY_HELP = f"""rigidity v{get_base_version()} - Generic infinitesimal rigidity through balanced orientations

Decides whether a graph is generically infinitesimally rigid in dimension d,
either by the exact rank of its rigidity matrix at random placements or by
finding a balanced source-stream-sink orientation.

Usage:
    rigidity SUBCOMMAND [OPTIONS] ...

Subcommands:
    check              Decide rigidity of a graph
    oracle             Exact rank of the rigidity matrix at random placements
    straighten         Rewrite a bracket polynomial in the standard basis
    balanced           Test whether an orientation is balanced
    stress             Synthesize a self-stress from an orientation
    certificate        Certificate polynomial of a source and a sink
    reduce             Drop surplus edges down to a tight subgraph
    config             View or modify configuration settings
    help               Examples per subcommand and background notes

Examples:
    rigidity check double-banana --dim 3 --verify
    rigidity oracle k4 --dim 2
    rigidity straighten --expr "[1,4,6,7][2,3,4,5]"

For examples of one subcommand, use: rigidity help SUBCOMMAND"""


def setup_logging(args):
    """Set up logging based on verbosity level"""
    verbosity = get_effective_verbosity(args)

    if verbosity == VerbosityLevel.QUIET:
        log_level = logging.ERROR
    elif verbosity == VerbosityLevel.NORMAL:
        log_level = logging.WARNING
    elif verbosity == VerbosityLevel.VERBOSE:
        log_level = logging.INFO
    else:
        log_level = logging.DEBUG

    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler()

    if verbosity >= VerbosityLevel.DETAILED:
        console_handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
    else:
        class ColoredFormatter(logging.Formatter):
            def format(self, record):
                use_color = HAVE_COLOR and not getattr(args, 'no_color', False)
                message = record.getMessage()
                if record.levelno == logging.INFO:
                    return message
                if record.levelno == logging.WARNING:
                    return f"{Fore.YELLOW}{message}{Style.RESET_ALL}" if use_color else message
                if record.levelno >= logging.ERROR:
                    return f"{Fore.RED}{message}{Style.RESET_ALL}" if use_color else message
                if record.levelno == logging.DEBUG:
                    return f"{Fore.CYAN}DEBUG: {message}{Style.RESET_ALL}" if use_color else f"DEBUG: {message}"
                return f"{record.levelname}: {message}"

        console_handler.setFormatter(ColoredFormatter())

    console_handler.setLevel(log_level)
    root_logger.addHandler(console_handler)
    root_logger.setLevel(log_level)

    log_file = getattr(args, 'log', None)
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        file_handler.setLevel(log_level)
        root_logger.addHandler(file_handler)

    # Package loggers carry levels only; output goes through the root handlers
    for module_name in PACKAGE_LOGGERS:
        module_logger = logging.getLogger(module_name)
        for handler in module_logger.handlers[:]:
            module_logger.removeHandler(handler)
        module_logger.setLevel(log_level)
        module_logger.propagate = True

    return logging.getLogger('rigidity')


def main(argv=None):
    """Main entry point for the program"""
    parser = create_parser()
    argv = sys.argv[1:] if argv is None else list(argv)

    if not argv:
        print(FRIENDLY_HELP)
        return EXIT_OK

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version and 2 for usage errors
        return EXIT_OK if not e.code else EXIT_ERROR

    logger = setup_logging(args)
    logger.debug(f"Platform: {platform.platform()}")
    logger.debug(f"Python version: {platform.python_version()}")
    logger.info(f"rigidity {__version__} invoked with: {' '.join(argv)}")

    if not args.operation:
        parser.print_help()
        return EXIT_ERROR

    handler = HANDLERS.get(args.operation)
    if handler is None:
        logger.error(f"Unknown operation: {args.operation}")
        return EXIT_ERROR

    reset_config()
    try:
        return handler(args, logger)
    except LimitError as e:
        logger.error(f"Limit reached: {e}")
        return EXIT_LIMIT
    except (RigidityError, ValueError, OSError) as e:
        logger.error(f"Error: {e}")
        return EXIT_ERROR
    except Exception as e:
        logger.exception(f"Error during {args.operation} operation")
        print(f"ERROR: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
