#!/usr/bin/env python3
"""
Tests for the rigidity matrix and the rank oracle.
"""

import os
import sys
import unittest
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from exactla import vec_mat
from rigiditylib.errors import DimensionMismatch, UnplacedVertex
from rigiditylib.fixtures import cycle, double_banana, k4, path, triangle, triangle_fan
from rigiditylib.graph_model import Graph, Placement
from rigiditylib.oracle import (
    RankReport,
    Verdict,
    best_placement,
    build_rigidity_matrix,
    equilibrium_residuals,
    left_kernel_basis,
    oracle_decide,
    random_placement,
    rank_at_placement,
)


class TestRigidityMatrix(unittest.TestCase):
    """Layout of the rigidity matrix."""

    def test_row_layout(self):
        """Test that row (i, j) holds e_ij at i and -e_ij at j."""
        g = Graph.from_edges(2, [(1, 2)])
        p = Placement(2, {1: (Fraction(1), Fraction(2)), 2: (Fraction(4), Fraction(6))})
        a = build_rigidity_matrix(g, p)
        self.assertEqual(a.shape, (1, 4))
        self.assertEqual(a.rows[0], (3, 4, -3, -4))
        self.assertEqual(a.column(2, 1), 3)

    def test_dimension_mismatch(self):
        """Test that a requested dimension must match the placement."""
        p = random_placement(triangle(), 2)
        with self.assertRaises(DimensionMismatch):
            build_rigidity_matrix(triangle(), p, d=3)

    def test_unplaced_vertex(self):
        """Test that every vertex needs coordinates."""
        p = random_placement(triangle(), 2)
        with self.assertRaises(UnplacedVertex):
            build_rigidity_matrix(k4(), p)

    def test_random_placement_is_reproducible(self):
        """Test that a seed fixes the placement and coordinates are integers in range."""
        first = random_placement(double_banana(), 3, seed=5)
        second = random_placement(double_banana(), 3, seed=5)
        self.assertEqual(first, second)
        for point in first.coords.values():
            for x in point:
                self.assertEqual(x.denominator, 1)
                self.assertLessEqual(abs(x), 2 ** 20)


class TestOracle(unittest.TestCase):
    """Rank verdicts on known graphs."""

    def test_path_rigid_on_line(self):
        """Test that a path is rigid in d = 1."""
        report = oracle_decide(path(4), 1)
        self.assertEqual(report.verdict, Verdict.RIGID)
        self.assertEqual(report.right_kernel_dim, 1)

    def test_four_cycle_flexible_in_plane(self):
        """Test that the 4-cycle is flexible in d = 2."""
        report = oracle_decide(cycle(4), 2)
        self.assertEqual(report.verdict, Verdict.FLEXIBLE)
        self.assertEqual(report.rank, 4)
        self.assertEqual(report.left_kernel_dim, 0)

    def test_laman_graphs_rigid_in_plane(self):
        """Test the triangle, the triangle fan and K4 in d = 2."""
        for g in (triangle(), triangle_fan(), k4()):
            self.assertTrue(oracle_decide(g, 2).rigid)

    def test_double_banana(self):
        """Test that the double banana has rank 17 and a single self-stress."""
        report = oracle_decide(double_banana(), 3)
        self.assertEqual(report.verdict, Verdict.FLEXIBLE)
        self.assertEqual(report.rank, 17)
        self.assertEqual(report.right_kernel_dim, 7)
        self.assertEqual(report.left_kernel_dim, 1)

    def test_prime_field_agrees(self):
        """Test that the prime field backend reaches the same rank."""
        rational = oracle_decide(double_banana(), 3, seed=3, trials=2)
        prime = oracle_decide(double_banana(), 3, seed=3, trials=2, field_name='prime')
        self.assertEqual(rational.rank, prime.rank)
        self.assertEqual(prime.field_name, 'prime')

    def test_deterministic(self):
        """Test that the same seed gives the same report."""
        first = oracle_decide(k4(), 2, seed=9, trials=4)
        second = oracle_decide(k4(), 2, seed=9, trials=4)
        self.assertEqual(first.to_dict(), second.to_dict())
        self.assertEqual(len(first.ranks), 4)
        self.assertIn(first.best_seed, range(9, 13))

    def test_bad_arguments(self):
        """Test that zero trials and unknown fields are refused."""
        with self.assertRaises(ValueError):
            oracle_decide(k4(), 2, trials=0)
        with self.assertRaises(ValueError):
            oracle_decide(k4(), 2, field_name='real')

    def test_degenerate_placement(self):
        """Test that a collinear triangle is not rigid in the plane."""
        p = Placement(2, {1: (Fraction(0), Fraction(0)),
                          2: (Fraction(1), Fraction(1)),
                          3: (Fraction(2), Fraction(2))})
        report = rank_at_placement(triangle(), p)
        self.assertEqual(report.verdict, Verdict.FLEXIBLE)
        self.assertIsNone(report.seed)
        self.assertEqual(report.left_kernel_dim, 1)

    def test_report_dict(self):
        """Test the keys of the JSON report."""
        data = oracle_decide(triangle(), 2).to_dict()
        self.assertEqual(data["verdict"], "rigid")
        self.assertEqual(data["d"], 2)
        self.assertEqual(data["field"], "rational")

    def test_report_defaults(self):
        """Test a report built with only the required fields."""
        report = RankReport(3, 3, 0, Verdict.RIGID, 0, 1, 0)
        self.assertEqual(report.field_name, "rational")
        self.assertEqual(report.ranks, [])
        self.assertEqual(report.to_dict()["field"], "rational")
        self.assertTrue(report.rigid)


class TestSelfStresses(unittest.TestCase):
    """Left kernel of the rigidity matrix."""

    def test_triangle_has_no_stress(self):
        """Test that a generic triangle carries no self-stress."""
        p, _ = best_placement(triangle(), 2)
        self.assertEqual(left_kernel_basis(triangle(), p), [])

    def test_double_banana_stress_is_in_equilibrium(self):
        """Test that the double banana stress balances at every vertex."""
        g = double_banana()
        p, report = best_placement(g, 3, seed=1)
        basis = left_kernel_basis(g, p)
        self.assertEqual(len(basis), 1)
        a = build_rigidity_matrix(g, p)
        self.assertTrue(all(x == 0 for x in vec_mat(basis[0], a.rows)))
        residuals = equilibrium_residuals(g, p, basis[0])
        self.assertTrue(all(x == 0 for r in residuals.values() for x in r))

    def test_k4_stress_is_nowhere_zero(self):
        """Test that the K4 stress in the plane is supported on every edge."""
        g = k4()
        p, _ = best_placement(g, 2)
        basis = left_kernel_basis(g, p)
        self.assertEqual(len(basis), 1)
        self.assertTrue(all(x != 0 for x in basis[0]))


if __name__ == '__main__':
    unittest.main()
