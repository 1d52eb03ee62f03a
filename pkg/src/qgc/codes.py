"""Graph codes: label sets with a claimed distance, and their basic checks.

A code is a set of graph-basis labels containing zero, sorted ascending.
``qs_bound`` gives the quantum-singleton-type ceiling dim**(n - 2(delta-1))
on the number of codewords; every constructor and search in this package
asserts its outputs against that bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .distance import ABOVE_CAP, DistanceTable, build_distance_table
from .errors import CapTooLowError, InternalCheckError
from .graphs import Graph
from .zmod import ModTuple, label_str, span_elements


def qs_bound(n: int, delta: int, dim: int) -> int:
    """Largest possible K for an ((n, K, delta))_dim code; 0 when none exists."""
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    exponent = n - 2 * (delta - 1)
    return dim**exponent if exponent >= 0 else 0


@dataclass(frozen=True)
class GraphCode:
    """An ((n, K, delta)) code given by K graph-basis labels including zero.

    ``exhaustive`` records whether the producing procedure proved that no
    larger K exists for this graph and delta.  ``generators`` is a minimal
    generating list when the label set is closed under addition, else None.
    """

    graph: Graph
    delta: int
    codewords: tuple[ModTuple, ...]
    exhaustive: bool
    additive: bool
    generators: tuple[ModTuple, ...] | None

    def __post_init__(self) -> None:
        if self.delta < 2:
            raise ValueError(f"delta must be >= 2, got {self.delta}")
        if not isinstance(self.codewords, tuple):
            object.__setattr__(self, "codewords", tuple(self.codewords))
        dim, n = self.graph.dim, self.graph.n
        for c in self.codewords:
            if c.dim != dim or c.n != n:
                raise ValueError(
                    f"codeword {c.entries} does not live in Z_{dim}^{n}"
                )
        if not self.codewords or not self.codewords[0].is_zero():
            raise ValueError("codewords must start with the zero label")
        for prev, cur in zip(self.codewords, self.codewords[1:]):
            if not prev < cur:
                raise ValueError("codewords must be strictly ascending")
        bound = qs_bound(n, self.delta, dim)
        if self.K > max(bound, 1):
            raise InternalCheckError(
                f"K={self.K} exceeds the singleton-type bound {bound} "
                f"for n={n}, delta={self.delta}, dim={dim}"
            )
        if self.additive == (self.generators is None):
            raise ValueError("generators must be present exactly for additive codes")

    @property
    def K(self) -> int:
        return len(self.codewords)

    @property
    def dim(self) -> int:
        return self.graph.dim

    @property
    def n(self) -> int:
        return self.graph.n

    def qs_saturated(self) -> bool:
        return self.K == qs_bound(self.n, self.delta, self.dim)


def is_additive(
    codewords: Sequence[ModTuple],
) -> tuple[bool, tuple[ModTuple, ...] | None]:
    """Whether the label set is a subgroup; if so, also a minimal generator list.

    Generators are chosen greedily in ascending label order: each codeword
    not yet in the span of the picks so far becomes the next generator.
    """
    words = sorted(codewords)
    if not words or not words[0].is_zero():
        return False, None
    dim, n = words[0].dim, words[0].n
    elems = {w.entries for w in words}
    if len(elems) != len(words):
        return False, None
    for a in words:
        for b in words:
            if tuple((x + y) % dim for x, y in zip(a.entries, b.entries)) not in elems:
                return False, None
    gens: list[ModTuple] = []
    spanned: set[tuple[int, ...]] = {(0,) * n}
    for w in words:
        if w.entries not in spanned:
            gens.append(w)
            spanned = span_elements(
                (g.entries for g in gens), dim, n, cap=len(words)
            )
    return True, tuple(gens)


@dataclass(frozen=True)
class DistanceViolation:
    """One failed check: a too-close codeword pair or a small diagonal product."""

    kind: str  # "pair" or "diagonal"
    q: int | None
    r: int | None
    displacement: ModTuple | None
    found: int

    def describe(self) -> str:
        if self.kind == "diagonal":
            return f"diagonal distance {self.found} below delta"
        assert self.displacement is not None
        return (
            f"codewords {self.q} and {self.r} at distance {self.found} "
            f"(displacement {label_str(self.displacement)})"
        )


@dataclass(frozen=True)
class DistanceReport:
    passed: bool
    delta: int
    pairs_checked: int
    diagonal_distance: int
    violations: tuple[DistanceViolation, ...]


def assert_distance(code: GraphCode, table: DistanceTable | None = None) -> DistanceReport:
    """Check every codeword pair and the diagonal against the claimed delta.

    Builds a table capped at delta - 1 when none is supplied; a supplied
    table must have cap at least min(delta - 1, n) or the check would be
    inconclusive (:class:`CapTooLowError`).
    """
    required = min(code.delta - 1, code.n)
    if table is None:
        table = build_distance_table(code.graph, required)
    if table.graph != code.graph:
        raise ValueError("table was built for a different graph")
    if table.cap < required:
        raise CapTooLowError(
            f"table cap {table.cap} cannot certify delta {code.delta}; "
            f"need at least {required}"
        )
    violations: list[DistanceViolation] = []
    diag = table.diagonal_distance
    if diag != ABOVE_CAP and diag < code.delta:
        violations.append(DistanceViolation("diagonal", None, None, None, diag))
    pairs = 0
    words = code.codewords
    for q in range(len(words)):
        for r in range(q + 1, len(words)):
            pairs += 1
            d = words[r] - words[q]
            value = table.entries[d.index]
            if value != ABOVE_CAP and value < code.delta:
                violations.append(DistanceViolation("pair", q, r, d, value))
    return DistanceReport(
        passed=not violations,
        delta=code.delta,
        pairs_checked=pairs,
        diagonal_distance=diag,
        violations=tuple(violations),
    )


def code_from_labels(
    graph: Graph,
    delta: int,
    labels: Iterable[ModTuple],
    exhaustive: bool,
) -> GraphCode:
    """Assemble a GraphCode from labels, detecting additivity."""
    words = tuple(sorted(labels))
    additive, gens = is_additive(words)
    return GraphCode(graph, delta, words, exhaustive, additive, gens)
