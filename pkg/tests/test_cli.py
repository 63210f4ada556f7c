#!/usr/bin/env python3
"""
Tests for the rigidity command line: argument parsing, exit codes and the
JSON output of each subcommand.

Every run goes through rigidity.rigidity.main() with a temporary
XDG_CONFIG_HOME so that no user configuration leaks in.
"""

import io
import json
import os
import shutil
import subprocess
import sys
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path
from unittest import mock

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rigidity.cli import create_parser
from rigidity.rigidity import main
from rigidity.utils import EXIT_ERROR, EXIT_FLEXIBLE, EXIT_LIMIT, EXIT_OK, EXIT_RIGID
from rigiditylib.graph_model import Graph, load_graph

ROOT = Path(__file__).parent.parent
DATA = ROOT / "data"

PRISM = Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])


class CLITestCase(unittest.TestCase):
    """Runs main() in a scratch directory with its own configuration home."""

    def setUp(self):
        self.test_dir = Path(tempfile.mkdtemp(prefix="rigidity_cli_"))
        patcher = mock.patch.dict(os.environ, {"XDG_CONFIG_HOME": str(self.test_dir / "config")})
        patcher.start()
        self.addCleanup(patcher.stop)

    def tearDown(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def run_cli(self, *argv):
        """Return (exit code, captured stdout)."""
        out = io.StringIO()
        with redirect_stdout(out):
            code = main([str(a) for a in argv])
        return code, out.getvalue()

    def run_json(self, *argv):
        code, out = self.run_cli(*argv, '--json', '--quiet')
        return code, json.loads(out)


class TestParser(unittest.TestCase):
    """Argument parsing without running anything."""

    def setUp(self):
        self.parser = create_parser()

    def test_check_options(self):
        """Test the check subcommand flags."""
        args = self.parser.parse_args(['check', 'k4', '--dim', '2', '--mode', 'search',
                                       '--budget', '5', '--verify', '--certified'])
        self.assertEqual(args.operation, 'check')
        self.assertEqual(args.graph, 'k4')
        self.assertEqual(args.dim, 2)
        self.assertEqual(args.mode, 'search')
        self.assertEqual(args.budget, 5)
        self.assertTrue(args.verify)
        self.assertTrue(args.certified)

    def test_common_flags(self):
        """Test that every subcommand takes the shared flags."""
        args = self.parser.parse_args(['oracle', 'k4', '-vv', '--no-color', '--json', '--field', 'prime'])
        self.assertEqual(args.verbose, 2)
        self.assertTrue(args.no_color)
        self.assertTrue(args.json)
        self.assertEqual(args.field, 'prime')

    def test_straighten_sources_exclusive(self):
        """Test that straighten takes a file or --expr but not both."""
        args = self.parser.parse_args(['straighten', '--expr', '[1,2]'])
        self.assertIsNone(args.input)
        with self.assertRaises(SystemExit):
            with redirect_stdout(io.StringIO()), mock.patch('sys.stderr', io.StringIO()):
                self.parser.parse_args(['straighten', 'file.txt', '--expr', '[1,2]'])

    def test_certificate_requires_edges(self):
        """Test that --source and --sink are required."""
        with self.assertRaises(SystemExit):
            with mock.patch('sys.stderr', io.StringIO()):
                self.parser.parse_args(['certificate', 'gamma.json', '--source', '4,8'])

    def test_unknown_mode(self):
        """Test that the decision mode is a fixed choice."""
        with self.assertRaises(SystemExit):
            with mock.patch('sys.stderr', io.StringIO()):
                self.parser.parse_args(['check', 'k4', '--mode', 'guess'])


class TestEntryPoint(CLITestCase):
    """Top-level behaviour of main()."""

    def test_no_arguments(self):
        """Test that a bare invocation prints the summary and succeeds."""
        code, out = self.run_cli()
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Subcommands:", out)

    def test_version(self):
        """Test --version."""
        code, out = self.run_cli('--version')
        self.assertEqual(code, EXIT_OK)
        self.assertIn("rigidity", out)

    def test_usage_error(self):
        """Test that a missing positional argument exits 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('check')
        self.assertEqual(code, EXIT_ERROR)

    def test_missing_file(self):
        """Test that an unreadable graph file exits 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('check', str(self.test_dir / 'missing.json'), '--dim', '2', '--quiet')
        self.assertEqual(code, EXIT_ERROR)

    def test_missing_dimension(self):
        """Test that a built-in graph needs --dim."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('check', 'k4', '--quiet')
        self.assertEqual(code, EXIT_ERROR)

    def test_module_invocation(self):
        """Test python -m rigidity in a subprocess."""
        result = subprocess.run(
            [sys.executable, '-m', 'rigidity', 'check', 'k4', '--dim', '2', '--quiet'],
            cwd=ROOT, capture_output=True, text=True,
            env={**os.environ, "XDG_CONFIG_HOME": str(self.test_dir / "config")},
        )
        self.assertEqual(result.returncode, EXIT_RIGID, msg=result.stderr)


class TestCheck(CLITestCase):
    """The check subcommand."""

    def test_double_banana_flexible(self):
        """Test that the double banana exits 10 and agrees with the oracle."""
        code, data = self.run_json('check', DATA / 'doublebanana.json', '--verify')
        self.assertEqual(code, EXIT_FLEXIBLE)
        self.assertEqual(data["verdict"], "flexible")
        self.assertEqual(data["method"], "theorem-kernel")
        self.assertTrue(data["agreement"])

    def test_builtin_double_banana(self):
        """Test the built-in name with an explicit dimension."""
        code, _ = self.run_cli('check', 'double-banana', '--dim', '3', '--quiet')
        self.assertEqual(code, EXIT_FLEXIBLE)

    def test_k4_rigid(self):
        """Test that K4 in the plane exits 0."""
        code, out = self.run_cli('check', 'k4', '--dim', '2', '--no-color')
        self.assertEqual(code, EXIT_RIGID)
        self.assertIn("rigid", out.lower())

    def test_search_budget(self):
        """Test that a search cut short exits 2 with or without --partial."""
        graph_file = self.test_dir / 'prism.json'
        graph_file.write_text(json.dumps(PRISM.to_dict(2)))
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('check', graph_file, '--mode', 'search', '--budget', '2', '--quiet')
        self.assertEqual(code, EXIT_LIMIT)
        code, data = self.run_json('check', graph_file, '--mode', 'search', '--budget', '2', '--partial')
        self.assertEqual(code, EXIT_LIMIT)
        self.assertEqual(data["verdict"], "inconclusive-rigid")


class TestOracle(CLITestCase):
    """The oracle subcommand."""

    def test_double_banana_rank(self):
        """Test the rank and kernel dimensions of the double banana."""
        code, data = self.run_json('oracle', DATA / 'doublebanana.json', '--left-kernel')
        self.assertEqual(code, EXIT_FLEXIBLE)
        self.assertEqual(data["rank"], 17)
        self.assertEqual(data["right_kernel_dim"], 7)
        self.assertEqual(len(data["left_kernel"]), 1)
        self.assertEqual(len(data["left_kernel"][0]), 18)

    def test_prime_field(self):
        """Test the prime field backend on K4."""
        code, data = self.run_json('oracle', 'k4', '--dim', '2', '--field', 'prime')
        self.assertEqual(code, EXIT_RIGID)
        self.assertEqual(data["field"], "prime")
        self.assertEqual(data["rank"], 5)

    def test_fixed_placement(self):
        """Test a collinear triangle given by a placement file."""
        placement_file = self.test_dir / 'collinear.json'
        placement_file.write_text(json.dumps({"d": 2, "coords": {"1": [0, 0], "2": [1, 0], "3": [2, 0]}}))
        code, data = self.run_json('oracle', 'triangle', '--placement', placement_file)
        self.assertEqual(code, EXIT_FLEXIBLE)
        self.assertEqual(data["rank"], 2)


class TestStraighten(CLITestCase):
    """The straighten subcommand."""

    def test_inline_expression(self):
        """Test [14][23] = [13][24] - [12][34]."""
        code, data = self.run_json('straighten', '--expr', '[1,4][2,3]')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["normal_form"], "[1,3][2,4] - [1,2][3,4]")
        self.assertFalse(data["zero"])

    def test_plain_output(self):
        """Test that the normal form is printed on its own line."""
        code, out = self.run_cli('straighten', '--expr', '[1,4][2,3]', '--quiet')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip().splitlines()[0], "[1,3][2,4] - [1,2][3,4]")

    def test_plucker_file_is_zero(self):
        """Test both zero tests on the shipped relation."""
        code, data = self.run_json('straighten', DATA / 'plucker.txt', '--zero')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["zero"])
        self.assertEqual(data["method"], "straightening")
        code, data = self.run_json('straighten', DATA / 'plucker.txt', '--zero', '--probabilistic', '--seed', '3')
        self.assertTrue(data["zero"])
        self.assertEqual(data["method"], "probabilistic")

    def test_term_cap(self):
        """Test that a tiny term cap exits 2."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('straighten', DATA / 'plucker.txt', '--term-cap', '1', '--quiet')
        self.assertEqual(code, EXIT_LIMIT)

    def test_parse_error(self):
        """Test that a malformed polynomial exits 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('straighten', '--expr', '[1,2', '--quiet')
        self.assertEqual(code, EXIT_ERROR)


class TestOrientationCommands(CLITestCase):
    """The balanced, stress and certificate subcommands."""

    def test_cycle_balanced(self):
        """Test the 4-cycle orientation in both balance modes."""
        code, data = self.run_json('balanced', DATA / 'cycle-gamma.json')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["validity"]["valid"])
        self.assertTrue(data["balanced"])
        code, data = self.run_json('balanced', DATA / 'cycle-gamma.json', '--certified')
        self.assertTrue(data["balanced"])

    def test_double_banana_balanced(self):
        """Test the double banana orientation against its graph."""
        code, data = self.run_json('balanced', DATA / 'doublebanana-gamma.json',
                                   '--graph', DATA / 'doublebanana.json')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["balanced"])

    def test_invalid_orientation(self):
        """Test that the wrong dimension makes the orientation invalid."""
        code, data = self.run_json('balanced', DATA / 'cycle-gamma.json', '--dim', '2')
        self.assertEqual(code, EXIT_ERROR)
        self.assertFalse(data["validity"]["valid"])
        self.assertIsNone(data["balanced"])

    def test_cycle_stress(self):
        """Test the stress of the 4-cycle with a prescribed sink value."""
        code, data = self.run_json('stress', 'cycle', DATA / 'cycle-gamma.json', '--sink-values', '{"1,2": 1}')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["w"]["1,2"], "1")
        self.assertTrue(data["residual"]["passed"])

    def test_sink_values_file(self):
        """Test sink values read from a JSON file with a rational value."""
        values = self.test_dir / 'sinks.json'
        values.write_text(json.dumps({"2,1": "-3/2"}), encoding='utf-8')
        code, data = self.run_json('stress', DATA / 'doublebanana.json', DATA / 'doublebanana-gamma.json',
                                   '--seed', '1', '--sink-values', values)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["w"]["1,2"], "-3/2")
        self.assertTrue(data["residual"]["passed"])

    def test_bad_sink_values(self):
        """Test that lists, floats and edges that are not sinks exit 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            for values in ('[1]', '{"1,2": 0.5}', '{"2,3": 1}'):
                code, _ = self.run_cli('stress', 'cycle', DATA / 'cycle-gamma.json',
                                       '--sink-values', values, '--quiet')
                self.assertEqual(code, EXIT_ERROR, msg=values)

    def test_double_banana_stress(self):
        """Test the stress of the double banana from the sink system."""
        code, data = self.run_json('stress', DATA / 'doublebanana.json', DATA / 'doublebanana-gamma.json',
                                   '--seed', '4')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(data["w"]), 18)
        self.assertTrue(data["residual"]["passed"])

    def test_certificate(self):
        """Test T for the source (4,8) and the sink (1,2)."""
        code, data = self.run_json('certificate', DATA / 'doublebanana-gamma.json',
                                   '--source', '4,8', '--sink', '1,2', '--tree', '--zero', '--lgv')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["zero"])
        self.assertTrue(data["lgv_agrees"])
        self.assertEqual(len(data["chains"]), 6)
        self.assertEqual([c["node"] for c in data["tree"]["children"]], ["(4,8)_4", "(4,8)_8"])

    def test_certificate_wrong_edges(self):
        """Test that the source must be a source and the sink a sink."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('certificate', DATA / 'doublebanana-gamma.json',
                                   '--source', '1,2', '--sink', '4,8', '--quiet')
        self.assertEqual(code, EXIT_ERROR)


class TestReduce(CLITestCase):
    """The reduce subcommand."""

    def test_k4_output(self):
        """Test that K4 drops (3,4) and the tight subgraph is written."""
        output = self.test_dir / 'out' / 'tight.json'
        code, data = self.run_json('reduce', 'k4', '--dim', '2', '-o', output)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["dropped"], [[3, 4]])
        self.assertEqual(data["tightness"], 0)
        graph, d = load_graph(output)
        self.assertEqual(graph.edge_count, 5)
        self.assertEqual(d, 2)

    def test_reduce_tight_graph(self):
        """Test that a graph without surplus edges exits 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('reduce', 'triangle', '--dim', '2', '--quiet')
        self.assertEqual(code, EXIT_ERROR)


class TestConfig(CLITestCase):
    """The config subcommand and configuration precedence."""

    def test_set_and_view(self):
        """Test that a value set globally shows up in view."""
        code, _ = self.run_cli('config', 'set', 'oracle.trials', '5')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue((self.test_dir / 'config' / 'rigidity' / 'config.json').exists())
        code, out = self.run_cli('config', '--json', 'view', '--section', 'oracle')
        self.assertEqual(json.loads(out)["trials"], 5)

    def test_global_config_used(self):
        """Test that the global field setting reaches the oracle."""
        self.run_cli('config', 'set', 'oracle.field', 'prime')
        _, data = self.run_json('oracle', 'k4', '--dim', '2')
        self.assertEqual(data["field"], "prime")
        _, data = self.run_json('oracle', 'k4', '--dim', '2', '--field', 'rational')
        self.assertEqual(data["field"], "rational")

    def test_reset(self):
        """Test that reset restores the defaults."""
        self.run_cli('config', 'set', 'search.max_subsets', '7')
        code, _ = self.run_cli('config', 'reset', '--section', 'search')
        self.assertEqual(code, EXIT_OK)
        _, out = self.run_cli('config', '--json', 'view', '--section', 'search')
        self.assertEqual(json.loads(out)["max_subsets"], 100_000)

    def test_unknown_key(self):
        """Test that unknown keys are refused."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, _ = self.run_cli('config', '--quiet', 'set', 'oracle.colour', 'red')
        self.assertEqual(code, EXIT_ERROR)


class TestHelp(CLITestCase):
    """The help subcommand."""

    def test_all_examples(self):
        """Test that help without a topic lists every subcommand and the topics."""
        code, out = self.run_cli('help')
        self.assertEqual(code, EXIT_OK)
        self.assertIn("check examples:", out)
        self.assertIn("config examples:", out)
        self.assertIn("Topics: orientation, formats, exit-codes", out)

    def test_subcommand_examples(self):
        """Test the examples of one subcommand."""
        code, out = self.run_cli('help', 'check')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('--partial', out)
        self.assertNotIn('config set', out)

    def test_topics(self):
        """Test that topic names are case-insensitive."""
        code, out = self.run_cli('help', 'formats')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('Placement:', out)
        _, out = self.run_cli('help', 'EXIT-CODES')
        self.assertIn("10  flexible", out)

    def test_unknown_topic(self):
        """Test that an unknown topic exits 1."""
        with mock.patch('sys.stderr', io.StringIO()):
            code, out = self.run_cli('help', 'gluing', '--quiet')
        self.assertEqual(code, EXIT_ERROR)
        self.assertEqual(out, "")


if __name__ == '__main__':
    unittest.main()
