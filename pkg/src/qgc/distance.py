"""Graph-basis distance tables.

For a graph G the distance between basis labels a != b is the smallest
size (number of qudits acted on) of a Pauli product mapping |a> to a state
proportional to |b>.  Because every product shifts labels by its
displacement d = nu + Gamma mu, that distance depends only on b - a, so one
table indexed by displacement answers all pairs.  Entries above the build
cap are stored as :data:`ABOVE_CAP`; the zero displacement instead reports
the diagonal distance, the smallest size of a nonidentity product that
shifts no label at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, CapTooLowError
from .graphs import Graph
from .zmod import ModTuple, memory_cap

#: Sentinel byte meaning "strictly greater than the table cap".
ABOVE_CAP = 255


@dataclass(frozen=True)
class DistanceTable:
    """Minimal product sizes per displacement, capped at ``cap``.

    ``entries[t.index]`` is the minimal size of a product with displacement
    t, for sizes up to ``cap``; :data:`ABOVE_CAP` otherwise.  The zero index
    is always :data:`ABOVE_CAP` by convention (the identity is excluded);
    the separate ``diagonal_distance`` reports the smallest nonidentity
    product with zero displacement, again :data:`ABOVE_CAP` when above cap.
    """

    graph: Graph
    cap: int
    entries: bytes
    diagonal_distance: int

    @property
    def dim(self) -> int:
        return self.graph.dim

    @property
    def n(self) -> int:
        return self.graph.n

    def entry(self, t: ModTuple) -> int:
        return self.entries[t.index]


def build_distance_table(graph: Graph, cap: int) -> DistanceTable:
    """Enumerate all products of size 1..cap and record minimal sizes.

    Products of size s are scanned in a fixed order (ascending base sets,
    then per-qudit factor choices); the first size reaching a displacement
    is its minimum, so later hits never overwrite earlier ones.
    """
    dim, n = graph.dim, graph.n
    if not 1 <= cap <= min(n, ABOVE_CAP - 1):
        raise ValueError(f"cap must be in [1, {min(n, ABOVE_CAP - 1)}], got {cap}")
    total = dim**n
    if total > memory_cap():
        raise CapacityError(
            f"table of {total} entries exceeds the cap of {memory_cap()} "
            "(QGC_MEM_CAP raises it)"
        )
    entries = bytearray([ABOVE_CAP]) * total
    diagonal = ABOVE_CAP

    # Radix weight of each vertex in the label index (vertex 0 is most
    # significant), and the index shift caused by X^mu on vertex l.
    weight = [dim ** (n - 1 - l) for l in range(n)]
    factors = [(a, b) for a in range(dim) for b in range(dim) if (a, b) != (0, 0)]
    gamma = graph.gamma

    for size in range(1, cap + 1):
        for base in itertools.combinations(range(n), size):
            for choice in itertools.product(factors, repeat=size):
                digits = [0] * n
                for l, (mu, nu) in zip(base, choice):
                    digits[l] = (digits[l] + nu) % dim
                    if mu:
                        row = gamma[l]
                        for m in range(n):
                            if row[m]:
                                digits[m] = (digits[m] + mu * row[m]) % dim
                idx = 0
                for l in range(n):
                    idx += digits[l] * weight[l]
                if idx:
                    if entries[idx] == ABOVE_CAP:
                        entries[idx] = size
                elif diagonal == ABOVE_CAP:
                    diagonal = size

    return DistanceTable(graph, cap, bytes(entries), diagonal)


def pair_distance(table: DistanceTable, a: ModTuple, b: ModTuple) -> int:
    """Distance between two distinct labels: the entry at b - a.

    Raises :class:`CapTooLowError` when the entry is above the table cap,
    since then only a lower bound is known.
    """
    if a.dim != table.dim or a.n != table.n or b.dim != table.dim or b.n != table.n:
        raise ValueError("labels do not match the table's graph")
    if a == b:
        raise ValueError("pair distance requires two distinct labels")
    value = table.entries[(b - a).index]
    if value == ABOVE_CAP:
        raise CapTooLowError(
            f"distance of pair exceeds table cap {table.cap}; rebuild with a larger cap"
        )
    return value
