"""
Command-line interface and argument parser for the rigidity tool.

This module defines the subcommands, their options and help text.
"""

import argparse
from rigidity import __version__
from rigidity.version import get_base_version

from rigiditylib.decider import DECISION_MODES
from rigiditylib.oracle import FIELDS


def create_common_parent():
    """Create parent parser with common arguments for all subcommands"""
    parent = argparse.ArgumentParser(add_help=False)

    parent.add_argument('-v', '--verbose', action='count', default=0,
                        help='Increase output verbosity (use -vv or -vvv for more detail)')
    parent.add_argument('--quiet', '-q', action='store_true',
                        help='Suppress all output except errors')
    parent.add_argument('--no-color', action='store_true',
                        help='Disable colored output')
    parent.add_argument('--log', help='Write log to specified file')
    parent.add_argument('--json', action='store_true',
                        help='Print the result as JSON on stdout')

    return parent


def create_parser():
    """Create argument parser with all CLI options"""
    epilog_text = """Examples:
    # Decide a graph through balanced orientations and cross-check with the oracle
    rigidity check data/doublebanana.json --dim 3 --verify

    # Rank oracle only
    rigidity oracle data/doublebanana.json --dim 3 --trials 5

    # Straighten a bracket polynomial
    rigidity straighten --expr "[1,4,6,7][2,3,4,5]"

    # Test an orientation for balance by straightening
    rigidity balanced data/doublebanana-gamma.json --dim 3 --certified

    # Synthesize a self-stress from an orientation
    rigidity stress data/doublebanana.json data/doublebanana-gamma.json --dim 3

Graph arguments accept a JSON file or a built-in name: triangle, path, cycle,
k4, triangle-fan, double-banana.

Exit codes: 0 rigid/success, 10 flexible, 1 usage or input error,
2 budget exceeded or inconclusive.

Note: For detailed help on each subcommand, use: rigidity check --help"""

    parser = argparse.ArgumentParser(
        prog='rigidity',
        description=f'Rigidity v{get_base_version()} - Generic infinitesimal rigidity through balanced orientations',
        epilog=epilog_text,
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument('--version', '-V', action='version',
                        version=f'rigidity {__version__}')

    common_parent = create_common_parent()

    subparsers = parser.add_subparsers(dest='operation', help='Subcommand to run')

    # === check ===
    check_parser = subparsers.add_parser('check',
                                         parents=[common_parent],
                                         help='Decide rigidity of a graph',
                                         description='Decide generic infinitesimal rigidity. Tight graphs are decided '
                                                     'through balanced orientations, graphs with surplus edges are '
                                                     'reduced first, and graphs below the rigid count go to the oracle.',
                                         epilog='''Common usage patterns:

1. Kernel-guided certificate (default):
   rigidity check data/doublebanana.json --dim 3

2. Exhaustive orientation search:
   rigidity check triangle-fan --dim 2 --mode search

3. Cross-check with the rank oracle:
   rigidity check data/doublebanana.json --dim 3 --verify

Exit code 0 means rigid, 10 flexible, 2 inconclusive or budget exceeded.''',
                                         formatter_class=argparse.RawDescriptionHelpFormatter)
    check_parser.add_argument('graph', help='Graph JSON file or built-in graph name')
    _add_dimension_args(check_parser)
    _add_sampling_args(check_parser)
    check_parser.add_argument('--mode', choices=DECISION_MODES,
                              help='kernel builds one certificate from a self-stress; search tries every orientation')
    check_parser.add_argument('--verify', action='store_true',
                              help='Cross-check the verdict with the rank oracle')
    check_parser.add_argument('--partial', action='store_true',
                              help='Report inconclusive-rigid instead of failing when the search budget runs out')
    _add_balance_args(check_parser)
    _add_search_args(check_parser)

    # === oracle ===
    oracle_parser = subparsers.add_parser('oracle',
                                          parents=[common_parent],
                                          help='Exact rank of the rigidity matrix at random placements',
                                          description='Compute the maximal exact rank of the rigidity matrix over '
                                                      'random integer placements.',
                                          epilog='''Examples:

1. Three trials in exact rational arithmetic:
   rigidity oracle data/doublebanana.json --dim 3

2. Prime field backend:
   rigidity oracle graph.json --dim 2 --field prime --trials 10

3. A fixed placement:
   rigidity oracle graph.json --placement placement.json''',
                                          formatter_class=argparse.RawDescriptionHelpFormatter)
    oracle_parser.add_argument('graph', help='Graph JSON file or built-in graph name')
    _add_dimension_args(oracle_parser)
    _add_sampling_args(oracle_parser)
    oracle_parser.add_argument('--field', choices=FIELDS,
                               help='Arithmetic for the rank computation (default: rational)')
    oracle_parser.add_argument('--placement', help='Placement JSON file; skips random sampling')
    oracle_parser.add_argument('--left-kernel', action='store_true',
                               help='Also print a basis of self-stresses at the best placement')

    # === straighten ===
    straighten_parser = subparsers.add_parser('straighten',
                                              parents=[common_parent],
                                              help='Rewrite a bracket polynomial in the standard basis',
                                              description='Straighten a bracket polynomial into a combination of '
                                                          'standard tableaux.',
                                              epilog='''Examples:

1. From a file:
   rigidity straighten data/plucker.txt

2. Inline:
   rigidity straighten --expr "[1,4,6,7][2,3,4,5]"

3. Randomized zero test instead of straightening:
   rigidity straighten data/plucker.txt --zero --probabilistic''',
                                              formatter_class=argparse.RawDescriptionHelpFormatter)
    source_group = straighten_parser.add_mutually_exclusive_group(required=True)
    source_group.add_argument('input', nargs='?', help='File holding one polynomial')
    source_group.add_argument('--expr', help='Polynomial given on the command line')
    straighten_parser.add_argument('--zero', action='store_true',
                                   help='Only report whether the polynomial is zero')
    straighten_parser.add_argument('--probabilistic', action='store_true',
                                   help='With --zero, evaluate at random matrices instead of straightening')
    straighten_parser.add_argument('--seed', type=int, help='Seed for --probabilistic')
    straighten_parser.add_argument('--trials', type=int, help='Random matrices for --probabilistic')
    straighten_parser.add_argument('--term-cap', type=int,
                                   help='Fail when the working expression exceeds this many terms')

    # === balanced ===
    balanced_parser = subparsers.add_parser('balanced',
                                            parents=[common_parent],
                                            help='Test whether an orientation is balanced',
                                            description='Check validity of a source-stream-sink orientation and test '
                                                        'whether every certificate determinant T_sigma vanishes.',
                                            epilog='''Examples:

1. Probabilistic test:
   rigidity balanced data/doublebanana-gamma.json --dim 3

2. Certified test by straightening:
   rigidity balanced data/doublebanana-gamma.json --dim 3 --certified

3. Also check the orientation against a graph:
   rigidity balanced gamma.json --graph data/doublebanana.json''',
                                            formatter_class=argparse.RawDescriptionHelpFormatter)
    balanced_parser.add_argument('orientation', help='Orientation JSON file')
    balanced_parser.add_argument('--graph', help='Graph the orientation must be a subgraph of')
    _add_dimension_args(balanced_parser)
    balanced_parser.add_argument('--seed', type=int, help='Seed for the random matrices')
    _add_balance_args(balanced_parser)

    # === stress ===
    stress_parser = subparsers.add_parser('stress',
                                          parents=[common_parent],
                                          help='Synthesize a self-stress from an orientation',
                                          description='Propagate sink values through local Cramer rules to a '
                                                      'self-stress at a random placement and check wA = 0 exactly.',
                                          epilog='''Examples:

1. Stress from the sink system's nullspace:
   rigidity stress data/doublebanana.json data/doublebanana-gamma.json --dim 3

2. Prescribed sink values:
   rigidity stress graph.json gamma.json --dim 3 --sink-values 1''',
                                          formatter_class=argparse.RawDescriptionHelpFormatter)
    stress_parser.add_argument('graph', help='Graph JSON file or built-in graph name')
    stress_parser.add_argument('orientation', help='Orientation JSON file')
    _add_dimension_args(stress_parser)
    stress_parser.add_argument('--seed', type=int, help='Seed of the first placement')
    stress_parser.add_argument('--attempts', type=int,
                               help='Placements to try when a denominator vanishes (default: 10)')
    stress_parser.add_argument('--sink-values',
                               help='Sink values as a JSON object keyed by edge, inline or in a file, '
                                    'e.g. {"1,2": 1}; sinks left out are 0')

    # === certificate ===
    certificate_parser = subparsers.add_parser('certificate',
                                               parents=[common_parent],
                                               help='Certificate polynomial of a source and a sink',
                                               description='Build the decorated source tree of a source, clear its '
                                                           'right shelves and print T_{mu,nu}.',
                                               epilog='''Examples:

1. The certificate polynomial:
   rigidity certificate gamma.json --dim 3 --source 4,8 --sink 1,2

2. With the decorated tree and a zero test:
   rigidity certificate gamma.json --dim 3 --source 4,8 --sink 1,2 --tree --zero''',
                                               formatter_class=argparse.RawDescriptionHelpFormatter)
    certificate_parser.add_argument('orientation', help='Orientation JSON file')
    _add_dimension_args(certificate_parser)
    certificate_parser.add_argument('--source', required=True, help='Source edge as i,j')
    certificate_parser.add_argument('--sink', required=True, help='Sink edge as i,j')
    certificate_parser.add_argument('--tree', action='store_true',
                                    help='Print the decorated, cleared source tree')
    certificate_parser.add_argument('--zero', action='store_true',
                                    help='Report whether the polynomial straightens to zero')
    certificate_parser.add_argument('--lgv', action='store_true',
                                    help='Also compute the polynomial by path sums and compare')
    certificate_parser.add_argument('--term-cap', type=int,
                                    help='Fail when straightening exceeds this many terms')

    # === reduce ===
    reduce_parser = subparsers.add_parser('reduce',
                                          parents=[common_parent],
                                          help='Drop surplus edges down to a tight subgraph',
                                          description='Keep a maximal independent set of rigidity-matrix rows at a '
                                                      'random placement, giving a tight subgraph that is rigid '
                                                      'exactly when the input is.',
                                          epilog='''Examples:

1. K4 in the plane:
   rigidity reduce k4 --dim 2

2. Save the result:
   rigidity reduce graph.json --dim 3 --output tight.json''',
                                          formatter_class=argparse.RawDescriptionHelpFormatter)
    reduce_parser.add_argument('graph', help='Graph JSON file or built-in graph name')
    _add_dimension_args(reduce_parser)
    _add_sampling_args(reduce_parser)
    reduce_parser.add_argument('--output', '-o', help='Write the tight subgraph to this JSON file')

    # === config ===
    config_parser = subparsers.add_parser('config',
                                          parents=[common_parent],
                                          help='View or modify configuration settings',
                                          description='View or modify rigidity configuration settings.',
                                          epilog='''Examples:

1. View all configuration:
   rigidity config view

2. View specific section:
   rigidity config view --section oracle

3. Set a value:
   rigidity config set oracle.trials 5

4. Reset a section:
   rigidity config reset --section search''',
                                          formatter_class=argparse.RawDescriptionHelpFormatter)
    config_subparsers = config_parser.add_subparsers(dest='config_operation', help='Configuration operation')

    view_parser = config_subparsers.add_parser('view', help='View configuration')
    view_parser.add_argument('--section', help='View specific configuration section')

    set_parser = config_subparsers.add_parser('set', help='Set configuration value')
    set_parser.add_argument('key', help='Configuration key (e.g., "oracle.trials")')
    set_parser.add_argument('value', help='Value to set')

    reset_parser = config_subparsers.add_parser('reset', help='Reset configuration to defaults')
    reset_parser.add_argument('--section', help='Reset specific configuration section only')

    # === help ===
    help_parser = subparsers.add_parser('help',
                                        parents=[common_parent],
                                        help='Show examples and background notes',
                                        description='Print usage examples for a subcommand, or notes on '
                                                    'orientations, file formats and exit codes.')
    help_parser.add_argument('topic', nargs='?',
                             help='Subcommand name, or one of: orientation, formats, exit-codes')

    return parser


def _add_dimension_args(parser):
    """Add the ambient dimension option"""
    parser.add_argument('--dim', '-d', type=int,
                        help='Ambient dimension d (default: "d" from the input file)')


def _add_sampling_args(parser):
    """Add random placement options"""
    group = parser.add_argument_group('Sampling options')
    group.add_argument('--seed', type=int, help='Seed of the first random placement (default: 0)')
    group.add_argument('--trials', type=int, help='Random placements to sample (default: 3)')


def _add_balance_args(parser):
    """Add balance test options"""
    group = parser.add_argument_group('Balance test options')
    group.add_argument('--certified', action='store_true',
                       help='Straighten certificates instead of evaluating them at random matrices')
    group.add_argument('--balance-trials', type=int,
                       help='Random matrices per determinant in the probabilistic test (default: 5)')
    group.add_argument('--term-cap', type=int,
                       help='Fail when straightening exceeds this many terms')


def _add_search_args(parser):
    """Add orientation search budget options"""
    group = parser.add_argument_group('Search options')
    group.add_argument('--budget', type=int,
                       help='Maximum edge subsets and orientations examined by the search')

