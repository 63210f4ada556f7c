"""
The bracket ring.

A bracket [l1 ... lw] is a sorted tuple of distinct indices standing for the
maximal minor of a (w x n) matrix on those columns. A tableau is a product of
brackets, stored as a sorted tuple of rows. Polynomials map tableaux to
rational coefficients.

Straightening rewrites any polynomial in the basis of standard tableaux (every
column weakly increasing downwards) by repeatedly subtracting van der Waerden
syzygies from the largest nonstandard tableau. Tableaux are compared by
(number of rows, rows), which for equal degree is the lexicographic order on
their sorted row lists; the largest term of each syzygy is the tableau being
rewritten, so the largest nonstandard tableau strictly decreases and the
procedure terminates.
"""

import heapq
import logging
import random
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from exactla import determinant, determinant_mod, residue

from .errors import (
    ExpressionBlowup,
    IndexOutOfRange,
    NotMultiHomogeneous,
    ShapeMismatch,
    UnplacedVertex,
    WidthMismatch,
)
from .graph_model import Placement

logger = logging.getLogger(__name__)

Bracket = Tuple[int, ...]
Tableau = Tuple[Bracket, ...]
Coefficient = Union[int, Fraction]


DEFAULT_TERM_CAP = 1_000_000
COORDINATE_BOUND = 2 ** 20


def permutation_sign(sequence: Sequence[int]) -> int:
    """Sign of the permutation sorting the sequence; 0 if an entry repeats."""
    inversions = 0
    n = len(sequence)
    for a in range(n):
        x = sequence[a]
        for b in range(a + 1, n):
            y = sequence[b]
            if x == y:
                return 0
            if x > y:
                inversions += 1
    return -1 if inversions % 2 else 1


def bracket_from_tuple(indices: Sequence[int], n: Optional[int] = None) -> Tuple[Bracket, int]:
    """
    Normalize a bracket.

    Args:
        indices: Column indices in any order
        n: Ground set size; indices must lie in 1..n when given

    Returns:
        (sorted bracket, sign of the sorting permutation); the sign is 0 when
        an index repeats, in which case the bracket is the zero bracket
    """
    for index in indices:
        if index < 1 or (n is not None and index > n):
            raise IndexOutOfRange(index, n)
    return tuple(sorted(indices)), permutation_sign(indices)


def make_tableau(rows: Iterable[Sequence[int]]) -> Tuple[Tableau, int]:
    """Normalize every row and sort the rows; returns (tableau, sign)."""
    sign = 1
    normalized = []
    for row in rows:
        bracket, s = bracket_from_tuple(row)
        if s == 0:
            return (), 0
        sign *= s
        normalized.append(bracket)
    return tuple(sorted(normalized)), sign


def is_standard(t: Tableau) -> bool:
    """True if every column of the (row-sorted) tableau is weakly increasing downwards."""
    for upper, lower in zip(t, t[1:]):
        for a, b in zip(upper, lower):
            if a > b:
                return False
    return True


def first_violation(t: Tableau) -> Optional[Tuple[int, int]]:
    """(row index of the upper row, 1-based column) of the first column violation."""
    for r in range(len(t) - 1):
        upper, lower = t[r], t[r + 1]
        for c in range(len(upper)):
            if upper[c] > lower[c]:
                return r, c + 1
    return None


def tableau_key(t: Tableau) -> Tuple[int, Tableau]:
    """Sort key of the tableaux order."""
    return len(t), t


@dataclass(frozen=True)
class Monomial:
    """A signed tableau kept in factored form; the unit has no rows."""
    sign: int = 1
    rows: Tableau = ()

    @classmethod
    def from_brackets(cls, brackets: Iterable[Sequence[int]]) -> 'Monomial':
        rows, sign = make_tableau(brackets)
        return cls(sign, rows)

    @classmethod
    def bracket(cls, indices: Sequence[int]) -> 'Monomial':
        bracket, sign = bracket_from_tuple(indices)
        if sign == 0:
            return cls(0, ())
        return cls(sign, (bracket,))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        sign = self.sign * other.sign
        if sign == 0:
            return Monomial(0, ())
        return Monomial(sign, tuple(sorted(self.rows + other.rows)))

    def divide(self, other: 'Monomial') -> 'Monomial':
        """Exact division of row multisets; raises ValueError if other does not divide self."""
        remaining = Counter(self.rows)
        remaining.subtract(other.rows)
        if any(count < 0 for count in remaining.values()):
            raise ValueError("monomial does not divide")
        return Monomial(self.sign * other.sign, tuple(sorted(remaining.elements())))

    def multidegree(self) -> Counter:
        return Counter(index for row in self.rows for index in row)

    def to_polynomial(self, coefficient: Coefficient = 1) -> 'BracketPolynomial':
        if self.sign == 0 or coefficient == 0:
            return BracketPolynomial()
        return BracketPolynomial({self.rows: self.sign * coefficient})


class BracketPolynomial:
    """Rational linear combination of tableaux, without zero coefficients."""

    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Dict[Tableau, Coefficient]] = None):
        self.terms: Dict[Tableau, Coefficient] = {t: c for t, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], coefficient: Coefficient = 1) -> 'BracketPolynomial':
        """A single term from unnormalized rows."""
        tableau, sign = make_tableau(rows)
        if sign == 0:
            return cls()
        return cls({tableau: sign * coefficient})

    @classmethod
    def one(cls) -> 'BracketPolynomial':
        return cls({(): 1})

    def add_term(self, tableau: Tableau, coefficient: Coefficient) -> None:
        value = self.terms.get(tableau, 0) + coefficient
        if value == 0:
            self.terms.pop(tableau, None)
        else:
            self.terms[tableau] = value

    def copy(self) -> 'BracketPolynomial':
        return BracketPolynomial(self.terms)

    def items(self) -> List[Tuple[Tableau, Coefficient]]:
        """Terms in descending tableaux order."""
        return sorted(self.terms.items(), key=lambda item: tableau_key(item[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Tableau, Coefficient]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, BracketPolynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other: 'BracketPolynomial') -> 'BracketPolynomial':
        result = self.copy()
        for t, c in other.terms.items():
            result.add_term(t, c)
        return result

    def __neg__(self) -> 'BracketPolynomial':
        return BracketPolynomial({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: 'BracketPolynomial') -> 'BracketPolynomial':
        result = self.copy()
        for t, c in other.terms.items():
            result.add_term(t, -c)
        return result

    def __mul__(self, other) -> 'BracketPolynomial':
        if isinstance(other, BracketPolynomial):
            result = BracketPolynomial()
            for t1, c1 in self.terms.items():
                for t2, c2 in other.terms.items():
                    result.add_term(tuple(sorted(t1 + t2)), c1 * c2)
            return result
        if isinstance(other, Monomial):
            return self * other.to_polynomial()
        return BracketPolynomial({t: c * other for t, c in self.terms.items()})

    __rmul__ = __mul__

    def widths(self) -> set:
        return {len(row) for t in self.terms for row in t}

    def max_index(self) -> int:
        return max((row[-1] for t in self.terms for row in t if row), default=0)

    def __repr__(self) -> str:
        return f"BracketPolynomial({format_polynomial(self)!r})"


# === Relations ===

@lru_cache(maxsize=65536)
def _syzygy_terms(alpha: Bracket, beta: Bracket, gamma: Bracket) -> Tuple[Tuple[Tableau, int], ...]:
    s = len(alpha) + 1
    positions = range(len(beta))
    terms = []
    for tau in combinations(positions, s):
        chosen = set(tau)
        rest = [i for i in positions if i not in chosen]
        sign = -1 if (sum(tau) - s * (s - 1) // 2) % 2 else 1
        first, s1 = bracket_from_tuple(alpha + tuple(beta[i] for i in rest))
        second, s2 = bracket_from_tuple(tuple(beta[i] for i in tau) + gamma)
        if s1 == 0 or s2 == 0:
            continue
        pair = (first, second) if first <= second else (second, first)
        terms.append((pair, sign * s1 * s2))
    return tuple(terms)


def van_der_waerden_syzygy(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int],
                           width: int) -> BracketPolynomial:
    """
    The quadratic relation sum over s-subsets tau of beta's positions of
    sgn(tau, tau*) [alpha beta_tau*][beta_tau gamma], with s = len(alpha) + 1.
    """
    s = len(alpha) + 1
    if not 1 <= s <= width or len(beta) != width + 1 or len(gamma) != width - s:
        raise ShapeMismatch(
            f"need |alpha| = s-1, |beta| = {width + 1}, |gamma| = {width}-s with 1 <= s <= {width}; "
            f"got {len(alpha)}, {len(beta)}, {len(gamma)}")
    poly = BracketPolynomial()
    for pair, sign in _syzygy_terms(tuple(alpha), tuple(beta), tuple(gamma)):
        poly.add_term(pair, sign)
    return poly


def plucker_relation(i_tuple: Sequence[int], j_tuple: Sequence[int]) -> BracketPolynomial:
    """sum_k (-1)^k [i_1 .. i_k^ .. i_{w+1}] [i_k j_1 .. j_{w-1}] for brackets of width w."""
    width = len(i_tuple) - 1
    if width < 1 or len(j_tuple) != width - 1:
        raise ShapeMismatch(f"i has {len(i_tuple)} entries, j has {len(j_tuple)}; need w+1 and w-1")
    poly = BracketPolynomial()
    for k in range(1, width + 2):
        left = tuple(i_tuple[:k - 1]) + tuple(i_tuple[k:])
        right = (i_tuple[k - 1],) + tuple(j_tuple)
        term = BracketPolynomial.from_rows([left, right], -1 if k % 2 else 1)
        poly = poly + term
    return poly


def exchange_expand(t: Sequence[Sequence[int]], row_pair: Tuple[int, int],
                    box_subset: Sequence[int]) -> BracketPolynomial:
    """
    Sylvester exchange.

    Fix the positions box_subset in row N = row_pair[0]; for every subset J of
    the same size of positions in row M = row_pair[1], swap the entries in
    order. The input equals the sum of the resulting tableaux, each bracket
    sign-normalized; exchanges creating repeated indices vanish.
    """
    rows = [tuple(row) for row in t]
    n_index, m_index = row_pair
    if n_index == m_index or not (0 <= n_index < len(rows) and 0 <= m_index < len(rows)):
        raise ShapeMismatch(f"invalid row pair {row_pair} for {len(rows)} rows")
    row_n, row_m = rows[n_index], rows[m_index]
    if len(row_n) != len(row_m):
        raise ShapeMismatch("exchanged rows must have equal width")
    boxes = sorted(box_subset)
    if not boxes or len(set(boxes)) != len(boxes) or boxes[0] < 0 or boxes[-1] >= len(row_n):
        raise ShapeMismatch(f"invalid box subset {list(box_subset)}")
    spectators = [row for k, row in enumerate(rows) if k not in (n_index, m_index)]
    result = BracketPolynomial()
    for chosen in combinations(range(len(row_m)), len(boxes)):
        new_n = list(row_n)
        new_m = list(row_m)
        for box, position in zip(boxes, chosen):
            new_n[box], new_m[position] = row_m[position], row_n[box]
        result = result + BracketPolynomial.from_rows(spectators + [new_n, new_m])
    return result


# === Straightening ===

class _Largest:
    """Heap entry ordering tableaux from largest to smallest."""
    __slots__ = ('key', 'tableau')

    def __init__(self, tableau: Tableau):
        self.tableau = tableau
        self.key = tableau_key(tableau)

    def __lt__(self, other: '_Largest') -> bool:
        return self.key > other.key


def straighten(poly: BracketPolynomial, cap: int = DEFAULT_TERM_CAP) -> BracketPolynomial:
    """
    Rewrite poly in the standard tableau basis.

    Raises:
        ExpressionBlowup: if the working expression exceeds cap terms
    """
    widths = poly.widths()
    if len(widths) > 1:
        raise WidthMismatch(f"mixed bracket widths {sorted(widths)}")
    terms = dict(poly.terms)
    heap = [_Largest(t) for t in terms if not is_standard(t)]
    heapq.heapify(heap)
    steps = 0
    while heap:
        t = heapq.heappop(heap).tableau
        coefficient = terms.get(t)
        if coefficient is None:
            continue
        r, s = first_violation(t)
        upper, lower = t[r], t[r + 1]
        alpha = upper[:s - 1]
        beta = lower[:s] + upper[s - 1:]
        gamma = lower[s:]
        spectators = t[:r] + t[r + 2:]
        for pair, sign in _syzygy_terms(alpha, beta, gamma):
            new = tuple(sorted(spectators + pair)) if spectators else pair
            value = terms.get(new, 0) - coefficient * sign
            if value == 0:
                terms.pop(new, None)
            else:
                if new not in terms and not is_standard(new):
                    heapq.heappush(heap, _Largest(new))
                terms[new] = value
        steps += 1
        if len(terms) > cap:
            raise ExpressionBlowup(len(terms), cap)
    logger.debug(f"Straightened {len(poly)} terms to {len(terms)} in {steps} steps")
    return BracketPolynomial(terms)


def common_factor(poly: BracketPolynomial) -> Tableau:
    """Rows dividing every term, as a sorted tableau."""
    shared = None
    for t in poly.terms:
        rows = Counter(t)
        shared = rows if shared is None else shared & rows
        if not shared:
            return ()
    return tuple(sorted(shared.elements())) if shared else ()


def divide_common_factor(poly: BracketPolynomial) -> Tuple[Tableau, BracketPolynomial]:
    """Split poly as (common rows) x (quotient)."""
    factor = common_factor(poly)
    if not factor:
        return (), poly
    divisor = Counter(factor)
    quotient = {}
    for t, c in poly.terms.items():
        rest = Counter(t)
        rest.subtract(divisor)
        quotient[tuple(sorted(rest.elements()))] = c
    return factor, BracketPolynomial(quotient)


def straightens_to_zero(poly: BracketPolynomial, cap: int = DEFAULT_TERM_CAP,
                        factor_common: bool = True) -> bool:
    """
    True iff the standard-basis expansion of poly is zero.

    The bracket ring is a domain and stored brackets are never zero, so the
    common row factor is divided out first when factor_common is set.
    """
    if poly.is_zero:
        return True
    if factor_common:
        factor, poly = divide_common_factor(poly)
        if factor:
            logger.debug(f"Divided out a common factor of {len(factor)} brackets")
    return straighten(poly, cap).is_zero


def is_multi_homogeneous(poly: BracketPolynomial) -> Tuple[bool, Dict[int, int]]:
    """
    Check that each index occurs equally often in every term.

    Returns:
        (True, common multidegree) or (False, {})
    """
    degree = None
    for t in poly.terms:
        current = Counter(index for row in t for index in row)
        if degree is None:
            degree = current
        elif current != degree:
            return False, {}
    return True, dict(sorted((degree or {}).items()))


# === Evaluation ===

@dataclass(frozen=True)
class GenericMatrix:
    """(d+1) x n matrix stored by columns: the coordinates of a point with a trailing 1."""
    columns: Tuple[Tuple[Coefficient, ...], ...]

    def __post_init__(self):
        if not self.columns:
            raise ShapeMismatch("matrix has no columns")
        height = len(self.columns[0])
        for column in self.columns:
            if len(column) != height:
                raise ShapeMismatch("ragged matrix columns")
            if column[-1] != 1:
                raise ShapeMismatch("last row of the matrix must be all ones")

    @property
    def d(self) -> int:
        return len(self.columns[0]) - 1

    @property
    def n(self) -> int:
        return len(self.columns)

    @classmethod
    def from_placement(cls, p: Placement, v: int) -> 'GenericMatrix':
        columns = []
        for vertex in range(1, v + 1):
            if vertex not in p.coords:
                raise UnplacedVertex(vertex)
            columns.append(tuple(p.coords[vertex]) + (1,))
        return cls(tuple(columns))

    def minor(self, indices: Sequence[int], modulus: Optional[int] = None) -> Coefficient:
        """Determinant of the columns in the given order (not normalized)."""
        if len(indices) != self.d + 1:
            raise WidthMismatch(f"bracket of width {len(indices)} on a matrix with {self.d + 1} rows")
        for index in indices:
            if not 1 <= index <= self.n:
                raise WidthMismatch(f"index {index} outside 1..{self.n}")
        rows = [self.columns[index - 1] for index in indices]
        if modulus is not None:
            return determinant_mod(rows, modulus)
        return determinant(rows)


def random_generic_matrix(n: int, d: int, rng: random.Random,
                          bound: int = COORDINATE_BOUND) -> GenericMatrix:
    """Integer coordinates drawn uniformly from [-bound, bound]."""
    return GenericMatrix(tuple(
        tuple(rng.randint(-bound, bound) for _ in range(d)) + (1,) for _ in range(n)))


def evaluate(poly: BracketPolynomial, m: GenericMatrix, modulus: Optional[int] = None) -> Coefficient:
    """Replace every bracket by the corresponding minor of m."""
    cache: Dict[Bracket, Coefficient] = {}
    total = 0
    for t, coefficient in poly.terms.items():
        value = residue(coefficient, modulus) if modulus is not None else coefficient
        for row in t:
            minor = cache.get(row)
            if minor is None:
                minor = cache[row] = m.minor(row, modulus)
            value = value * minor
            if modulus is not None:
                value %= modulus
            if value == 0:
                break
        total += value
    if modulus is not None:
        return total % modulus
    return total


def probably_zero(poly: BracketPolynomial, trials: int = 5, seed: int = 0,
                  modulus: Optional[int] = None) -> bool:
    """
    Randomized zero test: evaluate at trials random matrices.

    A nonzero multi-homogeneous polynomial vanishes at a random integer matrix
    with probability at most (total degree) / (2 * 2^20 + 1) per trial.

    Raises:
        NotMultiHomogeneous: the evaluation test does not decide straightening
            for such input
    """
    if poly.is_zero:
        return True
    homogeneous, _ = is_multi_homogeneous(poly)
    if not homogeneous:
        raise NotMultiHomogeneous("polynomial is not multi-homogeneous")
    widths = poly.widths()
    if len(widths) != 1:
        raise WidthMismatch(f"mixed bracket widths {sorted(widths)}")
    d = widths.pop() - 1
    n = poly.max_index()
    rng = random.Random(seed)
    for trial in range(trials):
        m = random_generic_matrix(n, d, rng)
        if evaluate(poly, m, modulus) != 0:
            logger.debug(f"Nonzero evaluation at trial {trial}")
            return False
    return True


# === Text format ===

_TERM = re.compile(r'^([+-])?(\d+(?:/\d+)?)?\*?((?:\[\d+(?:,\d+)*\])*)$')
_BRACKET = re.compile(r'\[(\d+(?:,\d+)*)\]')


def parse_polynomial(text: str) -> BracketPolynomial:
    """
    Parse terms like "2[1,4,6,7][2,3,4,5] - [1,3,4,5][2,4,6,7]".

    Brackets may be unsorted; "0" is the zero polynomial.
    """
    compact = re.sub(r'\s+', '', text)
    if not compact:
        raise ValueError("empty polynomial")
    poly = BracketPolynomial()
    for chunk in re.split(r'(?=[+-])', compact):
        if not chunk:
            continue
        match = _TERM.match(chunk)
        if not match or not (match.group(2) or match.group(3)):
            raise ValueError(f"cannot parse term {chunk!r}")
        sign, coefficient, brackets = match.groups()
        value = Fraction(coefficient) if coefficient else Fraction(1)
        if value.denominator == 1:
            value = value.numerator
        if sign == '-':
            value = -value
        rows = [tuple(int(x) for x in body.split(',')) for body in _BRACKET.findall(brackets)]
        poly = poly + BracketPolynomial.from_rows(rows, value)
    return poly


def format_tableau(t: Tableau) -> str:
    return ''.join('[' + ','.join(str(i) for i in row) + ']' for row in t)


def format_polynomial(poly: BracketPolynomial) -> str:
    """Inverse of parse_polynomial, largest tableau first."""
    if poly.is_zero:
        return "0"
    parts = []
    for t, c in poly.items():
        magnitude = abs(c)
        body = format_tableau(t)
        text = body if magnitude == 1 and body else f"{magnitude}{body}"
        if not parts:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f"- {text}" if c < 0 else f"+ {text}")
    return ' '.join(parts)
