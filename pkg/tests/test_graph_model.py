#!/usr/bin/env python3
"""
Tests for graphs, placements and their JSON layouts.
"""

import json
import logging
import os
import sys
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rigiditylib import configure_logging
from rigiditylib.errors import (
    DimensionMismatch,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    UnplacedVertex,
    VertexOutOfRange,
)
from rigiditylib.fixtures import FIXTURES, double_banana, k4, triangle_fan
from rigiditylib.graph_model import (
    Graph,
    Placement,
    canonical_edge,
    edge_vector,
    format_rational,
    load_graph,
    load_placement,
    parse_rational,
    rigid_rank,
    tightness,
    validate_graph,
)


class TestGraph(unittest.TestCase):
    """Graph construction and validation."""

    def test_edges_are_canonical(self):
        """Test that edges are stored as (min, max) in the order given."""
        g = Graph.from_edges(3, [(2, 1), (3, 2)])
        self.assertEqual(g.edges, ((1, 2), (2, 3)))
        self.assertEqual(canonical_edge(5, 2), (2, 5))

    def test_loop_rejected(self):
        """Test that a loop edge raises LoopEdge."""
        with self.assertRaises(LoopEdge):
            Graph.from_edges(3, [(1, 2), (2, 2)])

    def test_duplicate_rejected(self):
        """Test that (i, j) and (j, i) count as the same edge."""
        with self.assertRaises(DuplicateEdge):
            Graph.from_edges(3, [(1, 2), (2, 1)])

    def test_vertex_out_of_range(self):
        """Test that endpoints must lie in 1..v."""
        with self.assertRaises(VertexOutOfRange):
            Graph.from_edges(3, [(1, 4)])
        with self.assertRaises(VertexOutOfRange):
            Graph.from_edges(3, [(0, 1)])

    def test_validate_unchecked_graph(self):
        """Test validate_graph on graphs built without from_edges."""
        validate_graph(Graph(3, ((1, 2), (2, 3))))
        with self.assertRaises(VertexOutOfRange):
            validate_graph(Graph(2, ((1, 3),)))
        with self.assertRaises(VertexOutOfRange):
            validate_graph(Graph(0, ()))
        with self.assertRaises(DuplicateEdge):
            validate_graph(Graph(3, ((1, 2), (2, 1))))

    def test_errors_share_a_base(self):
        """Test that graph errors derive from GraphError."""
        self.assertTrue(issubclass(LoopEdge, GraphError))
        self.assertTrue(issubclass(UnplacedVertex, GraphError))

    def test_neighbors_and_degree(self):
        """Test neighbourhoods of K4 and the triangle fan."""
        g = k4()
        self.assertEqual(g.neighbors(1), [2, 3, 4])
        self.assertEqual(g.degree(2), 3)
        fan = triangle_fan()
        self.assertEqual(fan.neighbors(2), [1, 3])
        self.assertTrue(fan.has_edge(3, 1))
        self.assertFalse(fan.has_edge(2, 4))

    def test_to_networkx(self):
        """Test that isolated vertices survive conversion to networkx."""
        g = Graph.from_edges(4, [(1, 2)])
        nx_graph = g.to_networkx()
        self.assertEqual(sorted(nx_graph.nodes), [1, 2, 3, 4])
        self.assertEqual(nx_graph.number_of_edges(), 1)

    def test_tightness(self):
        """Test the rigid edge count in dimensions 1 through 3."""
        self.assertEqual(tightness(FIXTURES["path"](), 1), 0)
        self.assertEqual(tightness(triangle_fan(), 2), 0)
        self.assertEqual(tightness(k4(), 2), 1)
        self.assertEqual(tightness(double_banana(), 3), 0)
        self.assertEqual(rigid_rank(8, 3), 18)

    def test_dict_round_trip_with_dimension(self):
        """Test that the JSON layout carries an optional dimension."""
        g = double_banana()
        data = g.to_dict(d=3)
        self.assertEqual(data["d"], 3)
        self.assertEqual(Graph.from_dict(data), g)
        self.assertNotIn("d", g.to_dict())

    def test_malformed_dict(self):
        """Test that missing keys and bad edges raise ValueError."""
        with self.assertRaises(ValueError):
            Graph.from_dict({"edges": [[1, 2]]})
        with self.assertRaises(ValueError):
            Graph.from_dict({"v": 3, "edges": [[1, 2, 3]]})


class TestRationals(unittest.TestCase):
    """Exact coordinate parsing."""

    def test_parse_rational(self):
        """Test integers and p/q strings."""
        self.assertEqual(parse_rational("3/4"), Fraction(3, 4))
        self.assertEqual(parse_rational(-7), Fraction(-7))

    def test_float_rejected(self):
        """Test that float coordinates are refused."""
        with self.assertRaises(ValueError):
            parse_rational(0.5)

    def test_format_rational(self):
        """Test that integers print without a denominator."""
        self.assertEqual(format_rational(Fraction(6, 3)), "2")
        self.assertEqual(format_rational(Fraction(-1, 3)), "-1/3")


class TestPlacement(unittest.TestCase):
    """Placements and edge vectors."""

    def setUp(self):
        """Place a triangle in the plane."""
        self.p = Placement(2, {1: (Fraction(0), Fraction(0)),
                               2: (Fraction(1), Fraction(0)),
                               3: (Fraction(0), Fraction(1, 2))})

    def test_edge_vector(self):
        """Test e_ij = p_j - p_i."""
        self.assertEqual(edge_vector(self.p, 1, 2), (1, 0))
        self.assertEqual(edge_vector(self.p, 2, 3), (-1, Fraction(1, 2)))

    def test_dimension_mismatch(self):
        """Test that every point must have dim coordinates."""
        with self.assertRaises(DimensionMismatch):
            Placement(2, {1: (Fraction(0),)})

    def test_unplaced_vertex(self):
        """Test that a graph vertex without coordinates is reported."""
        with self.assertRaises(UnplacedVertex):
            self.p.require_vertices(k4())
        with self.assertRaises(UnplacedVertex):
            self.p.point(4)

    def test_dict_layout(self):
        """Test the coords layout with string keys and rational strings."""
        data = self.p.to_dict()
        self.assertEqual(data["d"], 2)
        self.assertEqual(data["coords"]["3"], ["0", "1/2"])
        self.assertEqual(Placement.from_dict(data), self.p)

    def test_dimension_inferred(self):
        """Test that the dimension is inferred from the points when absent."""
        p = Placement.from_dict({"coords": {"1": [1, 2, 3], "2": ["1/2", 0, 0]}})
        self.assertEqual(p.dim, 3)


class TestLoading(unittest.TestCase):
    """Reading graph and placement files."""

    def setUp(self):
        self.test_dir = tempfile.TemporaryDirectory()
        self.root = Path(self.test_dir.name)

    def tearDown(self):
        self.test_dir.cleanup()

    def test_load_graph_with_dimension(self):
        """Test that load_graph returns the stored dimension."""
        path = self.root / "g.json"
        path.write_text(json.dumps({"v": 3, "edges": [[1, 2], [2, 3]], "d": 1}))
        g, d = load_graph(path)
        self.assertEqual(g.edge_count, 2)
        self.assertEqual(d, 1)

    def test_load_graph_rejects_loops(self):
        """Test that file input is validated."""
        path = self.root / "bad.json"
        path.write_text(json.dumps({"v": 2, "edges": [[1, 1]]}))
        with self.assertRaises(LoopEdge):
            load_graph(path)

    def test_load_placement(self):
        """Test reading a placement file with an explicit dimension."""
        path = self.root / "p.json"
        path.write_text(json.dumps({"coords": {"1": [0, 0], "2": ["3/2", 1]}}))
        p = load_placement(path, 2)
        self.assertEqual(p.point(2), (Fraction(3, 2), Fraction(1)))

    def test_shipped_double_banana(self):
        """Test that the shipped double banana file matches the fixture."""
        data_file = Path(__file__).parent.parent / "data" / "doublebanana.json"
        g, d = load_graph(data_file)
        self.assertEqual(d, 3)
        self.assertEqual(set(g.edges), set(double_banana().edges))


class TestLibraryLogging(unittest.TestCase):
    """configure_logging for standalone library use."""

    def setUp(self):
        root = logging.getLogger()
        saved = (root.handlers[:], root.level)
        root.handlers.clear()

        def restore():
            for handler in root.handlers:
                handler.close()
            root.handlers[:] = saved[0]
            root.setLevel(saved[1])
        self.addCleanup(restore)

    def test_handlers_installed_once(self):
        """Test a console and a file handler, and no second install."""
        with tempfile.TemporaryDirectory() as tmp:
            log_file = os.path.join(tmp, "rigidity.log")
            configure_logging(logging.DEBUG, log_file)
            root = logging.getLogger()
            self.assertEqual(len(root.handlers), 2)
            self.assertEqual(root.level, logging.DEBUG)
            configure_logging(logging.INFO)
            self.assertEqual(len(root.handlers), 2)
            logging.getLogger("rigidity_tests").warning("written")
            for handler in root.handlers:
                handler.flush()
            with open(log_file, encoding="utf-8") as f:
                self.assertIn("written", f.read())
            for handler in root.handlers:
                handler.close()


if __name__ == '__main__':
    unittest.main()
