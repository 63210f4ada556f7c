"""
rigidity - Command-line tool for deciding generic infinitesimal rigidity.

The rigidity command checks graphs against a randomized rank oracle and
through balanced source-stream-sink orientations, straightens bracket
polynomials and synthesizes self-stresses. The algorithms live in rigiditylib.
"""

import logging

from .version import __version__, get_version, get_base_version

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# Handlers are installed by rigidity.py's setup_logging

from .rigidity import main

__all__ = ['main']
