"""Weighted graphs on qudit vertices and the symbolic graph-basis action.

A graph on n vertices with edge weights in Z_dim defines an n-qudit graph
state |G>, and the graph basis {|a> = Z^a |G> : a in Z_dim^n}.  This module
works entirely in labels: applying a Pauli product to a basis state returns
another label plus an exact phase exponent, with no vectors involved.

Vertices are 1-indexed in files and messages, 0-indexed in code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatchError, GraphFormatError, GraphParseError
from .pauli import PauliProduct
from .zmod import ModTuple

FAMILIES = ("bar", "star", "cycle", "wheel", "hypercube")


@dataclass(frozen=True)
class Graph:
    """Symmetric Z_dim-weighted adjacency matrix with zero diagonal."""

    dim: int
    gamma: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dim}")
        if not isinstance(self.gamma, tuple):
            object.__setattr__(
                self, "gamma", tuple(tuple(row) for row in self.gamma)
            )
        n = len(self.gamma)
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        for l, row in enumerate(self.gamma):
            if len(row) != n:
                raise GraphFormatError(
                    f"row {l + 1} has {len(row)} entries, expected {n}"
                )
            for m, w in enumerate(row):
                if not 0 <= w < self.dim:
                    raise GraphFormatError(
                        f"weight {w} at ({l + 1},{m + 1}) outside [0, {self.dim - 1}]"
                    )
                if m == l and w != 0:
                    raise GraphFormatError(f"nonzero diagonal at vertex {l + 1}")
                if self.gamma[m][l] != w:
                    raise GraphFormatError(
                        f"asymmetric weights at ({l + 1},{m + 1})"
                    )

    @property
    def n(self) -> int:
        return len(self.gamma)

    def neighbors(self, l: int) -> tuple[int, ...]:
        """0-indexed vertices with a nonzero edge to vertex l."""
        return tuple(m for m, w in enumerate(self.gamma[l]) if w)

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All (l, m, weight) with l < m and nonzero weight, 0-indexed."""
        return tuple(
            (l, m, self.gamma[l][m])
            for l in range(self.n)
            for m in range(l + 1, self.n)
            if self.gamma[l][m]
        )


def graph_from_edges(
    dim: int, n: int, edges: Sequence[tuple[int, int] | tuple[int, int, int]]
) -> Graph:
    """Build a graph from 0-indexed edge pairs; omitted weights default to 1."""
    gamma = [[0] * n for _ in range(n)]
    for edge in edges:
        l, m = edge[0], edge[1]
        w = edge[2] if len(edge) == 3 else 1
        gamma[l][m] = w % dim
        gamma[m][l] = w % dim
    return Graph(dim, tuple(tuple(row) for row in gamma))


def bar_graph(n: int, dim: int) -> Graph:
    """Disjoint rungs i -- i + n//2; for odd n, vertex n//2 also picks up
    the leftover vertex n, giving one path of length 2."""
    if n < 2:
        raise ValueError(f"bar graph needs n >= 2, got {n}")
    half = n // 2
    edges = [(i, i + half) for i in range(half)]
    if n % 2:
        edges.append((half - 1, n - 1))
    return graph_from_edges(dim, n, edges)


def star_graph(n: int, dim: int) -> Graph:
    """Vertex 1 joined to every other vertex."""
    if n < 3:
        raise ValueError(f"star graph needs n >= 3, got {n}")
    return graph_from_edges(dim, n, [(0, l) for l in range(1, n)])


def cycle_graph(n: int, dim: int, double_edge: bool = False) -> Graph:
    """The n-cycle 1-2-...-n-1; ``double_edge`` gives edge {1,2} weight 2."""
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    edges: list[tuple[int, int, int]] = [
        (l, (l + 1) % n, 1) for l in range(n)
    ]
    if double_edge:
        if dim < 3:
            raise ValueError("a weight-2 edge requires dimension >= 3")
        edges[0] = (0, 1, 2)
    return graph_from_edges(dim, n, edges)


def wheel_graph(n: int, dim: int) -> Graph:
    """Hub vertex 1 joined to an (n-1)-cycle rim."""
    if n < 4:
        raise ValueError(f"wheel graph needs n >= 4, got {n}")
    edges = [(0, l) for l in range(1, n)]
    rim = list(range(1, n))
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return graph_from_edges(dim, n, edges)


def hypercube_graph(n: int, dim: int) -> Graph:
    """Vertices are k-bit strings (n = 2**k), edges join Hamming distance 1.

    Vertex l + 1 carries the binary coordinate of l, so vertex 1 is the
    all-zeros corner.
    """
    if n < 2 or n & (n - 1):
        raise ValueError(f"hypercube needs n a power of two >= 2, got {n}")
    k = n.bit_length() - 1
    edges = [
        (l, l ^ (1 << b)) for l in range(n) for b in range(k) if not l & (1 << b)
    ]
    return graph_from_edges(dim, n, edges)


def build_family(family: str, n: int, dim: int, double_edge: bool = False) -> Graph:
    """Construct a named family member; ``double_edge`` applies to cycles only."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if double_edge and family != "cycle":
        raise ValueError("--double-edge applies to the cycle family only")
    if family == "bar":
        return bar_graph(n, dim)
    if family == "star":
        return star_graph(n, dim)
    if family == "cycle":
        return cycle_graph(n, dim, double_edge=double_edge)
    if family == "wheel":
        return wheel_graph(n, dim)
    return hypercube_graph(n, dim)


def coordination_bound(graph: Graph) -> int:
    """1 + the minimum vertex degree: an upper bound on the diagonal distance.

    X on a minimum-degree vertex together with Z factors on its neighbors
    is a diagonal operator of exactly this size.
    """
    return 1 + min(len(graph.neighbors(l)) for l in range(graph.n))


def displacement(graph: Graph, p: PauliProduct) -> ModTuple:
    """The label shift d with P|a> proportional to |a + d|: d = nu + Gamma mu."""
    if p.dim != graph.dim or p.n != graph.n:
        raise DimensionMismatchError(
            f"product on {p.n} qudits of dim {p.dim} does not match "
            f"graph with n={graph.n}, dim={graph.dim}"
        )
    d = graph.dim
    out = list(p.zexp)
    for l, mu in enumerate(p.xexp):
        if mu:
            row = graph.gamma[l]
            for m in range(graph.n):
                if row[m]:
                    out[m] = (out[m] + mu * row[m]) % d
    return ModTuple(d, tuple(out))


def apply_pauli_symbolic(
    graph: Graph, p: PauliProduct, a: ModTuple
) -> tuple[ModTuple, int]:
    """Resolve P|a> = w^t |b> exactly; returns (b, t).

    With P = w^lambda X^mu Z^nu the label shifts by the displacement
    nu + Gamma mu, and the phase exponent is

        t = lambda + mu . (nu + a) + sum_{l<m} Gamma_lm mu_l mu_m   (mod dim).
    """
    if a.dim != graph.dim or a.n != graph.n:
        raise DimensionMismatchError(
            f"label in Z_{a.dim}^{a.n} does not match graph with "
            f"n={graph.n}, dim={graph.dim}"
        )
    d = graph.dim
    shift = displacement(graph, p)
    b = a + shift
    t = p.phase
    for l, mu in enumerate(p.xexp):
        if mu:
            t += mu * (p.zexp[l] + a.entries[l])
    for l in range(graph.n):
        if p.xexp[l]:
            row = graph.gamma[l]
            for m in range(l + 1, graph.n):
                if p.xexp[m] and row[m]:
                    t += row[m] * p.xexp[l] * p.xexp[m]
    return b, t % d


def parse_graph(text: str) -> Graph:
    """Parse the text graph format.

    Line 1 holds ``D n``; the next n noncomment lines hold the n rows of
    the adjacency matrix.  ``#`` starts a comment; blank lines are skipped.
    """
    rows: list[tuple[int, ...]] = []
    header: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected integers, got {raw!r}")
        if header is None:
            if len(values) != 2:
                raise GraphParseError(
                    f"line {lineno}: header must be 'D n', got {raw!r}"
                )
            d, n = values
            if d < 2:
                raise GraphParseError(f"line {lineno}: dimension must be >= 2, got {d}")
            if n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be >= 1, got {n}")
            header = (d, n)
            continue
        d, n = header
        if len(rows) == n:
            raise GraphParseError(f"line {lineno}: more than {n} matrix rows")
        if len(values) != n:
            raise GraphParseError(
                f"line {lineno}: row {len(rows) + 1} has {len(values)} entries, expected {n}"
            )
        for w in values:
            if not 0 <= w < d:
                raise GraphParseError(
                    f"line {lineno}: weight {w} outside [0, {d - 1}]"
                )
        rows.append(tuple(values))
    if header is None:
        raise GraphParseError("empty graph file")
    d, n = header
    if len(rows) != n:
        raise GraphParseError(f"expected {n} matrix rows, found {len(rows)}")
    try:
        return Graph(d, tuple(rows))
    except GraphFormatError as exc:
        raise GraphParseError(str(exc))


def serialize_graph(graph: Graph) -> str:
    """Canonical text form; ``parse_graph`` round-trips it."""
    lines = [f"{graph.dim} {graph.n}"]
    lines += [" ".join(str(w) for w in row) for row in graph.gamma]
    return "\n".join(lines) + "\n"
