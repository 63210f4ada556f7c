"""
Gauss-Jordan elimination over the rationals.

Reduced row echelon form, nullspace bases and small helpers for matrices held
as lists of rows of Fractions.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from .validation import require_rectangular

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def transpose(matrix: Sequence[Sequence]) -> List[List]:
    """Return the transpose as a list of rows."""
    if not matrix:
        return []
    return [list(column) for column in zip(*matrix)]


def rref(matrix: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Reduced row echelon form.

    Args:
        matrix: Rows of ints or Fractions

    Returns:
        (nonzero reduced rows, pivot column indices)
    """
    if not matrix:
        return [], []
    n_cols = require_rectangular(matrix)
    rows = [[Fraction(entry) for entry in row] for row in matrix]
    n_rows = len(rows)
    pivots: List[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        if lead != 1:
            rows[r] = [entry / lead for entry in rows[r]]
        top = rows[r]
        for i in range(n_rows):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], top)]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def nullspace(matrix: Sequence[Sequence], n_cols: int = None) -> List[Vector]:
    """
    Basis of the right nullspace {x : matrix x = 0}.

    Each basis vector has 1 in its own free column and 0 in every other free
    column, in increasing order of free column.

    Args:
        matrix: Rows of ints or Fractions
        n_cols: Column count, required when matrix has no rows
    """
    if not matrix:
        if n_cols is None:
            raise ValueError("n_cols is required for a matrix without rows")
        return [tuple(Fraction(int(i == j)) for i in range(n_cols)) for j in range(n_cols)]
    width = require_rectangular(matrix)
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * width
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(tuple(vector))
    return basis


def left_nullspace(matrix: Sequence[Sequence], n_rows: int = None) -> List[Vector]:
    """Basis of {y : y matrix = 0}."""
    if not matrix or not matrix[0]:
        count = len(matrix) if matrix else n_rows
        return nullspace([], n_cols=count)
    return nullspace(transpose(matrix))


def vec_mat(vector: Sequence, matrix: Sequence[Sequence]) -> List:
    """Row vector times matrix."""
    if not matrix:
        return []
    width = len(matrix[0])
    result = [0] * width
    for coefficient, row in zip(vector, matrix):
        if coefficient == 0:
            continue
        for j in range(width):
            result[j] += coefficient * row[j]
    return result
