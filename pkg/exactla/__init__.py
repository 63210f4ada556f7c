"""
exactla - Exact linear algebra over the rationals and prime fields.

Fraction-free rank and determinant, Gauss-Jordan reduction and nullspaces over
Fraction, and a modular backend for fast rank estimates.
"""

import logging

# Package-level logger; handlers are configured by the application
logger = logging.getLogger(__name__)

from .bareiss import rank, determinant, integer_rows
from .rational import (
    transpose,
    rref,
    nullspace,
    left_nullspace,
    vec_mat
)
from .modular import PRIME, residue, rank_mod, determinant_mod
from .validation import ShapeError

__all__ = [
    # Fraction-free elimination
    'rank', 'determinant', 'integer_rows',

    # Rational elimination
    'transpose', 'rref', 'nullspace', 'left_nullspace',
    'vec_mat',

    # Prime field
    'PRIME', 'residue', 'rank_mod', 'determinant_mod',

    'ShapeError'
]
