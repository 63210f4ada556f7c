"""
Examples and background notes for the rigidity command.

Graph arguments accept a JSON file or the name of a built-in graph:
triangle, path, cycle, k4, triangle-fan, double-banana.
"""

CHECK_EXAMPLES = r"""
# Decide the double banana in 3-space and cross-check with the rank oracle
rigidity check data/doublebanana.json --dim 3 --verify

# Exhaustive search over orientations of a small plane graph
rigidity check triangle-fan --dim 2 --mode search

# Straighten every certificate instead of evaluating at random matrices
rigidity check data/doublebanana.json --dim 3 --mode search --certified --budget 5000

# Report inconclusive-rigid instead of failing when the budget runs out
rigidity check graph.json --dim 2 --mode search --budget 100 --partial

# A tree in the line is rigid (exit code 0)
rigidity check data/tree.json --dim 1
"""

ORACLE_EXAMPLES = r"""
# Maximal rank over three random placements
rigidity oracle data/doublebanana.json --dim 3

# Ten trials over the prime field, starting at seed 42
rigidity oracle graph.json --dim 2 --trials 10 --seed 42 --field prime

# Rank at a fixed placement
rigidity oracle data/doublebanana.json --placement placement.json
"""

STRAIGHTEN_EXAMPLES = r"""
# Straighten the polynomial stored in a file
rigidity straighten data/plucker.txt

# Straighten an expression given inline
rigidity straighten --expr "[1,4,6,7][2,3,4,5]"

# Only test whether the polynomial vanishes
rigidity straighten data/plucker.txt --zero
"""

BALANCED_EXAMPLES = r"""
# Probabilistic balance test of an orientation
rigidity balanced data/doublebanana-gamma.json --dim 3

# Certified test by straightening every T_sigma
rigidity balanced data/doublebanana-gamma.json --dim 3 --certified -vv
"""

STRESS_EXAMPLES = r"""
# Synthesize a self-stress at a random placement and check wA = 0
rigidity stress data/doublebanana.json data/doublebanana-gamma.json --dim 3

# Prescribe the sink values
rigidity stress data/doublebanana.json data/doublebanana-gamma.json --dim 3 --sink-values '{"1,2": 1}'
"""

CERTIFICATE_EXAMPLES = r"""
# The certificate polynomial of a source and a sink
rigidity certificate data/doublebanana-gamma.json --dim 3 --source 4,8 --sink 1,2

# Show the decorated tree and check the polynomial straightens to zero
rigidity certificate data/doublebanana-gamma.json --dim 3 --source 4,8 --sink 1,2 --tree --zero
"""

REDUCE_EXAMPLES = r"""
# Drop surplus edges of K4 in the plane
rigidity reduce k4 --dim 2

# Save the tight subgraph
rigidity reduce graph.json --dim 3 --output tight.json
"""

CONFIG_EXAMPLES = r"""
# View the whole configuration
rigidity config view

# View one section
rigidity config view --section oracle

# Sample five placements by default
rigidity config set oracle.trials 5

# Reset one section
rigidity config reset --section search
"""

HELP_EXAMPLES = r"""
# Examples for one subcommand
rigidity help stress

# File layouts and exit codes
rigidity help formats
rigidity help exit-codes
"""

EXAMPLES = {
    'check': CHECK_EXAMPLES,
    'oracle': ORACLE_EXAMPLES,
    'straighten': STRAIGHTEN_EXAMPLES,
    'balanced': BALANCED_EXAMPLES,
    'stress': STRESS_EXAMPLES,
    'certificate': CERTIFICATE_EXAMPLES,
    'reduce': REDUCE_EXAMPLES,
    'config': CONFIG_EXAMPLES,
    'help': HELP_EXAMPLES,
}

ORIENTATION_HELP = """
Source-stream-sink orientations
===============================

An orientation assigns every edge of a subgraph H one of three modes:

  source  oriented into both endpoints
  stream  oriented into one endpoint ("into")
  sink    oriented into neither endpoint

It is valid in dimension d when every vertex of H has degree at least d+1 and
exactly d incoming edges, and acyclic when the streams contain no oriented
cycle. File format:

  {"edges": [{"e": [1, 3], "mode": "source"},
             {"e": [3, 5], "mode": "stream", "into": 3},
             {"e": [1, 2], "mode": "sink"}]}
"""

FORMATS_HELP = """
File formats
============

Graph:      {"v": 4, "edges": [[1, 2], [1, 3], [2, 3], [3, 4]], "d": 2}
            "d" is optional; --dim overrides it.
Placement:  {"d": 2, "coords": {"1": [0, 0], "2": ["1/2", 3], ...}}
Polynomial: one expression, terms like  -2*[1,2,3][4,5,6]  or  [1,2,4][3,5,6]
            joined with + and -; "0" is the zero polynomial.
"""

EXIT_CODES_HELP = """
Exit codes
==========

  0   rigid (check, oracle) or success (other subcommands)
  10  flexible (check, oracle)
  1   usage or input error
  2   budget or term-cap exceeded, or an inconclusive verdict
"""

TOPICS = {
    'ORIENTATION': ORIENTATION_HELP,
    'FORMATS': FORMATS_HELP,
    'EXIT-CODES': EXIT_CODES_HELP,
}


def get_operation_examples(operation: str) -> str:
    """
    Get examples for a subcommand.

    Args:
        operation: Subcommand name
    """
    return EXAMPLES.get(operation.lower(), "No examples available for this operation.")


def get_all_examples() -> str:
    return "\n\n".join(f"{name} examples:\n{text}" for name, text in EXAMPLES.items())


def get_help_topic(topic: str) -> str:
    """
    Get help text for a topic: ORIENTATION, FORMATS or EXIT-CODES.
    """
    return TOPICS.get(topic.upper(), "No help available for this topic.")
