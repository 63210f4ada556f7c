"""
Shape validation for matrices passed to exactla.
"""

from typing import Any, Sequence


class ShapeError(ValueError):
    """Raised when a matrix is ragged or has the wrong shape."""


def require_rectangular(matrix: Sequence[Sequence[Any]]) -> int:
    """
    Check that all rows have the same length.

    Args:
        matrix: Non-empty sequence of rows

    Returns:
        The number of columns
    """
    n_cols = len(matrix[0])
    for index, row in enumerate(matrix):
        if len(row) != n_cols:
            raise ShapeError(f"row {index} has {len(row)} entries, expected {n_cols}")
    return n_cols


def require_square(matrix: Sequence[Sequence[Any]]) -> int:
    """Check that the matrix is square and return its order."""
    n = len(matrix)
    if n == 0:
        return 0
    n_cols = require_rectangular(matrix)
    if n_cols != n:
        raise ShapeError(f"expected a square matrix, got {n}x{n_cols}")
    return n
