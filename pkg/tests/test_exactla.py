#!/usr/bin/env python3
"""
Tests for the exact linear algebra backends.

Ranks, determinants and nullspaces are cross-checked against sympy on small
random integer and rational matrices.
"""

import os
import random
import sys
import unittest
from fractions import Fraction

import sympy

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exactla import (
    PRIME,
    ShapeError,
    determinant,
    determinant_mod,
    integer_rows,
    left_nullspace,
    nullspace,
    rank,
    rank_mod,
    residue,
    rref,
    transpose,
    vec_mat,
)


def random_matrix(rng, n_rows, n_cols, low=-5, high=5, rational=False):
    rows = []
    for _ in range(n_rows):
        row = []
        for _ in range(n_cols):
            value = rng.randint(low, high)
            if rational:
                row.append(Fraction(value, rng.randint(1, 4)))
            else:
                row.append(value)
        rows.append(row)
    return rows


def low_rank_matrix(rng, n_rows, n_cols, r):
    """Product of an n_rows x r and an r x n_cols integer matrix."""
    left = random_matrix(rng, n_rows, r)
    right = random_matrix(rng, r, n_cols)
    return [[sum(left[i][k] * right[k][j] for k in range(r)) for j in range(n_cols)]
            for i in range(n_rows)]


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in row] for row in rows])


class TestBareiss(unittest.TestCase):
    """Fraction-free rank and determinant."""

    def setUp(self):
        self.rng = random.Random(2024)

    def test_rank_matches_sympy(self):
        """Test rank on random full and deficient matrices against sympy."""
        for _ in range(40):
            n_rows = self.rng.randint(1, 6)
            n_cols = self.rng.randint(1, 6)
            r = self.rng.randint(0, min(n_rows, n_cols))
            matrix = low_rank_matrix(self.rng, n_rows, n_cols, r) if r else [[0] * n_cols for _ in range(n_rows)]
            self.assertEqual(rank(matrix), to_sympy(matrix).rank())

    def test_rank_of_rational_matrix(self):
        """Test rank of matrices with fractional entries."""
        for _ in range(20):
            matrix = random_matrix(self.rng, 4, 5, rational=True)
            self.assertEqual(rank(matrix), to_sympy(matrix).rank())

    def test_determinant_matches_sympy(self):
        """Test exact determinants of integer and rational matrices."""
        for _ in range(30):
            n = self.rng.randint(1, 5)
            matrix = random_matrix(self.rng, n, n, rational=bool(self.rng.randint(0, 1)))
            expected = to_sympy(matrix).det()
            self.assertEqual(Fraction(determinant(matrix)), Fraction(int(expected.p), int(expected.q)))

    def test_determinant_of_singular_matrix(self):
        """Test that a matrix with a repeated row has determinant 0."""
        self.assertEqual(determinant([[1, 2, 3], [4, 5, 6], [1, 2, 3]]), 0)

    def test_determinant_of_empty_matrix(self):
        """Test the 0x0 determinant convention."""
        self.assertEqual(determinant([]), 1)

    def test_determinant_keeps_integer_type(self):
        """Test that integer input yields an int determinant."""
        value = determinant([[2, 1], [1, 3]])
        self.assertEqual(value, 5)
        self.assertIsInstance(value, int)

    def test_integer_rows_scale(self):
        """Test that scaling rows to integers records the determinant factor."""
        matrix = [[Fraction(1, 2), Fraction(1, 3)], [1, 1]]
        rows, scale = integer_rows(matrix)
        self.assertEqual(rows, [[3, 2], [1, 1]])
        self.assertEqual(scale, Fraction(1, 6))

    def test_ragged_matrix_rejected(self):
        """Test that ragged input raises ShapeError."""
        with self.assertRaises(ShapeError):
            rank([[1, 2], [3]])
        with self.assertRaises(ShapeError):
            determinant([[1, 2, 3], [4, 5, 6]])


class TestRational(unittest.TestCase):
    """Gauss-Jordan reduction and nullspaces."""

    def setUp(self):
        self.rng = random.Random(7)

    def test_transpose(self):
        """Test transpose of a 2x3 matrix."""
        self.assertEqual(transpose([[1, 2, 3], [4, 5, 6]]), [[1, 4], [2, 5], [3, 6]])
        self.assertEqual(transpose([]), [])

    def test_rref_matches_sympy(self):
        """Test reduced rows and pivots against sympy."""
        for _ in range(20):
            matrix = low_rank_matrix(self.rng, 4, 5, self.rng.randint(1, 4))
            reduced, pivots = rref(matrix)
            expected, expected_pivots = to_sympy(matrix).rref()
            self.assertEqual(tuple(pivots), tuple(expected_pivots))
            for i, row in enumerate(reduced):
                self.assertEqual([sympy.Rational(x.numerator, x.denominator) for x in row],
                                 list(expected.row(i)))

    def test_nullspace_vectors_are_in_kernel(self):
        """Test that every nullspace vector is annihilated and the count matches."""
        for _ in range(20):
            n_cols = self.rng.randint(2, 6)
            matrix = low_rank_matrix(self.rng, 3, n_cols, self.rng.randint(1, min(3, n_cols)))
            basis = nullspace(matrix)
            self.assertEqual(len(basis), n_cols - rank(matrix))
            for vector in basis:
                self.assertTrue(all(x == 0 for x in vec_mat(vector, transpose(matrix))))

    def test_nullspace_free_variable_form(self):
        """Test that each basis vector is 1 at its own free column and 0 at the others."""
        matrix = [[1, 2, 0, 3], [0, 0, 1, 4]]
        basis = nullspace(matrix)
        self.assertEqual(basis, [
            (Fraction(-2), Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(-3), Fraction(0), Fraction(-4), Fraction(1)),
        ])

    def test_nullspace_of_empty_matrix(self):
        """Test that a matrix with no rows has the full standard basis."""
        self.assertEqual(len(nullspace([], n_cols=3)), 3)
        with self.assertRaises(ValueError):
            nullspace([])

    def test_left_nullspace(self):
        """Test y A = 0 for every left nullspace vector."""
        matrix = [[1, 2], [2, 4], [0, 1]]
        basis = left_nullspace(matrix)
        self.assertEqual(len(basis), 1)
        self.assertEqual(vec_mat(basis[0], matrix), [0, 0])


class TestModular(unittest.TestCase):
    """Prime-field backend."""

    def setUp(self):
        self.rng = random.Random(11)

    def test_rank_mod_agrees_on_small_entries(self):
        """Test that the prime rank equals the rational rank for small entries."""
        for _ in range(20):
            matrix = low_rank_matrix(self.rng, 5, 5, self.rng.randint(1, 5))
            self.assertEqual(rank_mod(matrix), rank(matrix))

    def test_determinant_mod(self):
        """Test that the modular determinant is the residue of the exact one."""
        for _ in range(20):
            matrix = random_matrix(self.rng, 4, 4)
            self.assertEqual(determinant_mod(matrix), determinant(matrix) % PRIME)

    def test_residue_of_fraction(self):
        """Test that residue(a/b) * b == a modulo the prime."""
        value = residue(Fraction(3, 7))
        self.assertEqual(value * 7 % PRIME, 3)

    def test_residue_of_bad_denominator(self):
        """Test that a denominator divisible by the modulus is rejected."""
        with self.assertRaises(ZeroDivisionError):
            residue(Fraction(1, 5), modulus=5)


if __name__ == '__main__':
    unittest.main()
