"""
Exception hierarchy for rigiditylib.

Every error raised by the library derives from RigidityError. LimitError marks
failures caused by a configured cap rather than by bad input; the CLI maps
those to a distinct exit code.
"""


class RigidityError(Exception):
    """Base class for all rigiditylib errors."""


class LimitError(RigidityError):
    """A configured budget or cap was exceeded."""


# === Graphs and placements ===

class GraphError(RigidityError):
    """Invalid graph or placement input."""


class LoopEdge(GraphError):
    def __init__(self, edge):
        super().__init__(f"loop edge {tuple(edge)}")
        self.edge = tuple(edge)


class DuplicateEdge(GraphError):
    def __init__(self, edge):
        super().__init__(f"duplicate edge {tuple(edge)}")
        self.edge = tuple(edge)


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, v):
        super().__init__(f"vertex {vertex} outside 1..{v}")
        self.vertex = vertex
        self.v = v


class UnplacedVertex(GraphError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no coordinates")
        self.vertex = vertex


class DimensionMismatch(GraphError):
    def __init__(self, expected, actual, vertex=None):
        where = f" at vertex {vertex}" if vertex is not None else ""
        super().__init__(f"expected dimension {expected}, got {actual}{where}")
        self.expected = expected
        self.actual = actual
        self.vertex = vertex


class EdgeNotInGraph(GraphError):
    def __init__(self, edge):
        super().__init__(f"edge {tuple(edge)} is not an edge of the graph")
        self.edge = tuple(edge)


# === Bracket algebra ===

class AlgebraError(RigidityError):
    """Malformed bracket-algebra input."""


class IndexOutOfRange(AlgebraError):
    def __init__(self, index, n):
        super().__init__(f"bracket index {index} outside 1..{n}")
        self.index = index
        self.n = n


class ShapeMismatch(AlgebraError):
    """Arguments have incompatible lengths or widths."""


class WidthMismatch(AlgebraError):
    def __init__(self, message):
        super().__init__(message)


class NotMultiHomogeneous(AlgebraError):
    """Random evaluation is only a sound zero test for multi-homogeneous input."""


class ExpressionBlowup(LimitError):
    def __init__(self, terms, cap):
        super().__init__(f"straightening reached {terms} terms (cap {cap})")
        self.terms = terms
        self.cap = cap


# === Orientations, certificates and stresses ===

class OrientationError(RigidityError):
    """An orientation does not meet the requirements of an operation."""


class InvalidOrientation(OrientationError):
    """The orientation is not a valid acyclic source-stream-sink orientation."""


class PreconditionViolated(OrientationError):
    """An operation was called outside its precondition."""


class TooManySinks(OrientationError):
    def __init__(self, sinks, sources):
        super().__init__(f"{sinks} sinks exceed {sources} sources")
        self.sinks = sinks
        self.sources = sources


class SingularDenominator(OrientationError):
    def __init__(self, vertex, bracket):
        super().__init__(f"bracket {list(bracket)} vanishes at vertex {vertex}; placement is not generic")
        self.vertex = vertex
        self.bracket = tuple(bracket)


class InconsistentSource(OrientationError):
    def __init__(self, edge, left, right):
        super().__init__(f"source {tuple(edge)} receives {left} and {right}")
        self.edge = tuple(edge)
        self.left = left
        self.right = right


class CannotReduce(OrientationError):
    def __init__(self, rank, target):
        super().__init__(f"rank {rank} is below the rigid rank {target}")
        self.rank = rank
        self.target = target


class SearchBudgetExceeded(LimitError):
    def __init__(self, what, cap):
        super().__init__(f"{what} exceeded the search budget of {cap}")
        self.what = what
        self.cap = cap
