"""
Fraction-free Gaussian elimination.

Rank and determinant of integer or rational matrices using Bareiss' algorithm.
Every intermediate entry is a minor of the input, so integer division is exact
and coefficient growth stays polynomial.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple, Union

from .validation import require_rectangular, require_square

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
Matrix = Sequence[Sequence[Number]]


def integer_rows(matrix: Matrix) -> Tuple[List[List[int]], Fraction]:
    """
    Scale each row to integers.

    Args:
        matrix: Rows of ints or Fractions

    Returns:
        (integer rows, scale) where det(original) = det(integer rows) * scale
        for square input
    """
    rows = []
    scale = Fraction(1)
    for row in matrix:
        denominator = 1
        for entry in row:
            if isinstance(entry, Fraction) and entry.denominator != 1:
                denominator = lcm(denominator, entry.denominator)
        if denominator == 1:
            rows.append([int(entry) for entry in row])
        else:
            rows.append([int(entry * denominator) for entry in row])
            scale /= denominator
    return rows, scale


def _eliminate(rows: List[List[int]], n_cols: int, stop_on_zero: bool = False) -> Tuple[int, int]:
    """
    Run Bareiss elimination in place.

    Returns:
        (rank, sign) where sign tracks row swaps
    """
    n_rows = len(rows)
    rank = 0
    sign = 1
    previous = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            if stop_on_zero:
                return rank, 0
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        top = rows[rank]
        p = top[col]
        for i in range(rank + 1, n_rows):
            row = rows[i]
            factor = row[col]
            if factor == 0:
                if p != previous:
                    for j in range(col + 1, n_cols):
                        row[j] = (p * row[j]) // previous
            else:
                for j in range(col + 1, n_cols):
                    row[j] = (p * row[j] - factor * top[j]) // previous
                row[col] = 0
        previous = p
        rank += 1
    return rank, sign


def rank(matrix: Matrix) -> int:
    """
    Exact rank of a rational matrix.

    Args:
        matrix: Rows of ints or Fractions (may be empty)

    Returns:
        The rank
    """
    if not matrix:
        return 0
    n_cols = require_rectangular(matrix)
    rows, _ = integer_rows(matrix)
    result, _ = _eliminate(rows, n_cols)
    return result


def determinant(matrix: Matrix) -> Number:
    """
    Exact determinant of a square matrix.

    Returns an int for integer input, otherwise a Fraction.
    """
    n = require_square(matrix)
    if n == 0:
        return 1
    rows, scale = integer_rows(matrix)
    result, sign = _eliminate(rows, n, stop_on_zero=True)
    if sign == 0 or result < n:
        return 0
    value = sign * rows[n - 1][n - 1]
    if scale == 1:
        return value
    return value * scale
