"""
Rank oracle for generic infinitesimal rigidity.

A framework is infinitesimally rigid when the right kernel of its rigidity
matrix A has dimension C(d+1, 2), the dimension of the trivial motions. Generic
placements are approximated by random integer coordinates and the rank is
computed exactly, either over the rationals or modulo a 62-bit prime.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from exactla import PRIME, left_nullspace, rank, rank_mod, vec_mat

from .bracket_algebra import COORDINATE_BOUND
from .errors import DimensionMismatch
from .graph_model import Edge, Graph, Placement, edge_vector

logger = logging.getLogger(__name__)

FIELDS = ('rational', 'prime')


class Verdict(Enum):
    """Outcome of a rigidity decision."""
    RIGID = "rigid"
    FLEXIBLE = "flexible"
    INCONCLUSIVE_RIGID = "inconclusive-rigid"


@dataclass(frozen=True)
class RigidityMatrix:
    """
    |E| x d*v matrix. The row of edge (i, j) holds e_ij in the columns of
    vertex i and e_ji in the columns of vertex j, so the vertex-i block of wA
    is the equilibrium sum over the edges at i of w_ij e_ij.
    """
    rows: Tuple[Tuple[Fraction, ...], ...]
    edges: Tuple[Edge, ...]
    dim: int
    v: int

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), self.dim * self.v

    def column(self, vertex: int, coordinate: int) -> int:
        return (vertex - 1) * self.dim + coordinate


def build_rigidity_matrix(g: Graph, p: Placement, d: Optional[int] = None) -> RigidityMatrix:
    """
    Build A for g at placement p.

    Raises:
        DimensionMismatch: if d is given and differs from the placement dimension
        UnplacedVertex: if some vertex of g has no coordinates
    """
    if d is not None and d != p.dim:
        raise DimensionMismatch(d, p.dim)
    p.require_vertices(g)
    dim = p.dim
    rows = []
    for i, j in g.edges:
        row = [Fraction(0)] * (dim * g.v)
        e_ij = edge_vector(p, i, j)
        for k in range(dim):
            row[(i - 1) * dim + k] = e_ij[k]
            row[(j - 1) * dim + k] = -e_ij[k]
        rows.append(tuple(row))
    return RigidityMatrix(tuple(rows), tuple(g.edges), dim, g.v)


def random_placement(g: Graph, d: int, seed: int = 0, bound: int = COORDINATE_BOUND) -> Placement:
    """Integer coordinates drawn uniformly from [-bound, bound], reproducible from seed."""
    rng = random.Random(seed)
    coords = {
        vertex: tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
        for vertex in g.vertices
    }
    return Placement(d, coords)


def matrix_rank(a: RigidityMatrix, field_name: str = 'rational') -> int:
    if not a.rows:
        return 0
    if field_name == 'rational':
        return rank(a.rows)
    if field_name == 'prime':
        return rank_mod(a.rows, PRIME)
    raise ValueError(f"unknown field {field_name!r}; expected one of {', '.join(FIELDS)}")


@dataclass
class RankReport:
    """Maximum rank of A observed over random placements."""
    rank: int
    right_kernel_dim: int
    left_kernel_dim: int
    verdict: Verdict
    seed: Optional[int]
    trials: int
    best_seed: Optional[int]
    field_name: str = 'rational'
    dim: int = 0
    ranks: List[int] = field(default_factory=list)

    @property
    def rigid(self) -> bool:
        return self.verdict is Verdict.RIGID

    def to_dict(self) -> Dict:
        return {
            "rank": self.rank,
            "right_kernel_dim": self.right_kernel_dim,
            "left_kernel_dim": self.left_kernel_dim,
            "verdict": self.verdict.value,
            "seed": self.seed,
            "trials": self.trials,
            "best_seed": self.best_seed,
            "field": self.field_name,
            "d": self.dim,
            "ranks": list(self.ranks),
        }


def oracle_decide(g: Graph, d: int, seed: int = 0, trials: int = 3,
                  field_name: str = 'rational') -> RankReport:
    """
    Exact rank of A at `trials` placements; trial t uses seed + t.

    The maximum rank is reported and the verdict is rigid iff the right kernel
    then has dimension C(d+1, 2). A nonzero polynomial of degree D vanishes at
    a random point of the sampling box with probability at most
    D / (2 * 2^20 + 1), so a rigid graph is misreported only if every trial
    falls on the rank-deficient locus.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if field_name not in FIELDS:
        raise ValueError(f"unknown field {field_name!r}; expected one of {', '.join(FIELDS)}")
    ranks = []
    best_rank = -1
    best_seed = seed
    for t in range(trials):
        a = build_rigidity_matrix(g, random_placement(g, d, seed + t))
        r = matrix_rank(a, field_name)
        ranks.append(r)
        logger.debug(f"Trial {t} (seed {seed + t}): rank {r}")
        if r > best_rank:
            best_rank, best_seed = r, seed + t
    right = d * g.v - best_rank
    verdict = Verdict.RIGID if right == comb(d + 1, 2) else Verdict.FLEXIBLE
    report = RankReport(
        rank=best_rank,
        right_kernel_dim=right,
        left_kernel_dim=g.edge_count - best_rank,
        verdict=verdict,
        seed=seed,
        trials=trials,
        best_seed=best_seed,
        field_name=field_name,
        dim=d,
        ranks=ranks,
    )
    logger.info(f"Oracle: rank {best_rank}, right kernel {right}, {verdict.value}")
    return report


def best_placement(g: Graph, d: int, seed: int = 0, trials: int = 3) -> Tuple[Placement, RankReport]:
    """The placement attaining the maximal rank, with its report."""
    report = oracle_decide(g, d, seed, trials)
    return random_placement(g, d, report.best_seed), report


def rank_at_placement(g: Graph, p: Placement, field_name: str = 'rational') -> RankReport:
    """Rank report for one given placement; seed and best_seed are None."""
    a = build_rigidity_matrix(g, p)
    r = matrix_rank(a, field_name)
    right = p.dim * g.v - r
    verdict = Verdict.RIGID if right == comb(p.dim + 1, 2) else Verdict.FLEXIBLE
    return RankReport(r, right, g.edge_count - r, verdict, None, 1, None,
                      field_name=field_name, dim=p.dim, ranks=[r])


def left_kernel_basis(g: Graph, p: Placement) -> List[Tuple[Fraction, ...]]:
    """
    Basis of the self-stresses {w : wA = 0} at p, indexed like g.edges.

    Each vector is 1 at its own free edge and 0 at the other free edges.
    """
    a = build_rigidity_matrix(g, p)
    if not a.rows:
        return []
    return left_nullspace(a.rows, n_rows=len(a.rows))


def equilibrium_residuals(g: Graph, p: Placement, w) -> Dict[int, Tuple[Fraction, ...]]:
    """Per-vertex sum of w_ij e_ij, with w a sequence aligned with g.edges."""
    a = build_rigidity_matrix(g, p)
    product = vec_mat(list(w), a.rows) or [0] * (p.dim * g.v)
    return {
        vertex: tuple(Fraction(x) for x in product[(vertex - 1) * p.dim:vertex * p.dim])
        for vertex in g.vertices
    }
