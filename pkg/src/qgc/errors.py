"""Exception types shared across the package."""


class QgcError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(QgcError):
    """Operands disagree on the modulus D or the tuple length n."""


class InvalidScalarError(QgcError):
    """A scalar lies outside the residue range [0, D-1]."""


class CapacityError(QgcError):
    """A materialized set or table would exceed the configured memory cap."""


class GraphParseError(QgcError):
    """A graph file is malformed; the message names the offending line."""


class GraphFormatError(GraphParseError):
    """A parsed adjacency matrix violates a structural requirement."""


class DegenerateRegimeError(QgcError):
    """The requested distance exceeds the graph's diagonal distance.

    In that regime every code is degenerate and outside the scope of the
    search machinery, so the request is refused rather than answered
    incorrectly.
    """

    def __init__(self, delta: int, diagonal_distance: int):
        self.delta = delta
        self.diagonal_distance = diagonal_distance
        super().__init__(
            f"delta={delta} exceeds the diagonal distance {diagonal_distance}; "
            "only nondegenerate codes are searched"
        )


class NotAdditiveError(QgcError):
    """A stabilizer group was requested for a nonadditive code."""


class CapTooLowError(QgcError):
    """A distance table's cap is too small to answer the requested query."""


class ConstructionError(QgcError):
    """A precondition of a closed-form code construction failed."""


class InternalCheckError(QgcError):
    """A self-check on a freshly produced result failed (internal bug)."""
