"""Exact arithmetic over Z_D^n: residue tuples, spans, and dual solution sets.

Everything in this module is plain integer arithmetic modulo a dimension
``dim >= 2``.  No field structure is assumed anywhere: composite moduli are
handled throughout via per-coordinate gcd reasoning, so element orders may
be any divisor of ``dim``.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, DimensionMismatchError, InvalidScalarError

#: Default cap on the number of elements any function will materialize.
DEFAULT_MEM_CAP = 1 << 22


def memory_cap(default: int = DEFAULT_MEM_CAP) -> int:
    """Element cap for materialized sets and tables.

    The environment variable ``QGC_MEM_CAP`` overrides the default.
    """
    value = os.environ.get("QGC_MEM_CAP")
    return int(value) if value else default


@dataclass(frozen=True, order=True)
class ModTuple:
    """An immutable length-n tuple of residues mod ``dim``.

    Coordinates are 0-indexed internally; coordinate ``l`` corresponds to
    vertex ``l + 1`` in user-facing output.  Ordering is lexicographic on
    the digit entries, which matches ordering by mixed-radix index.
    """

    dim: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"modulus must be >= 2, got {self.dim}")
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) == 0:
            raise ValueError("tuple length must be >= 1")
        for e in self.entries:
            if not isinstance(e, int) or not 0 <= e < self.dim:
                raise InvalidScalarError(
                    f"entry {e!r} outside residue range [0, {self.dim - 1}]"
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def index(self) -> int:
        """Mixed-radix index with coordinate 0 most significant."""
        value = 0
        for e in self.entries:
            value = value * self.dim + e
        return value

    @classmethod
    def from_index(cls, dim: int, n: int, index: int) -> "ModTuple":
        """Inverse of :attr:`index`."""
        if not 0 <= index < dim**n:
            raise ValueError(f"index {index} out of range for dim={dim}, n={n}")
        digits = [0] * n
        for l in range(n - 1, -1, -1):
            index, digits[l] = divmod(index, dim)
        return cls(dim, tuple(digits))

    @classmethod
    def zero(cls, dim: int, n: int) -> "ModTuple":
        return cls(dim, (0,) * n)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "ModTuple") -> "ModTuple":
        return add_tuples(self, other)

    def __sub__(self, other: "ModTuple") -> "ModTuple":
        return sub_tuples(self, other)

    def __neg__(self) -> "ModTuple":
        return neg_tuple(self)


def label_str(t: ModTuple) -> str:
    """Digit-string form of a tuple: ``0121`` for dim <= 10, else ``0,12,3``."""
    if t.dim <= 10:
        return "".join(str(e) for e in t.entries)
    return ",".join(str(e) for e in t.entries)


def parse_label(dim: int, n: int, text: str) -> ModTuple:
    """Inverse of :func:`label_str`."""
    if dim <= 10:
        digits = [int(ch) for ch in text.strip()]
    else:
        digits = [int(tok) for tok in text.strip().split(",")]
    if len(digits) != n:
        raise ValueError(f"label {text!r} has {len(digits)} digits, expected {n}")
    return ModTuple(dim, tuple(digits))


def _check_same_space(a: ModTuple, b: ModTuple) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"moduli differ: {a.dim} vs {b.dim}")
    if a.n != b.n:
        raise DimensionMismatchError(f"tuple lengths differ: {a.n} vs {b.n}")


def add_tuples(a: ModTuple, b: ModTuple) -> ModTuple:
    """Componentwise sum mod dim."""
    _check_same_space(a, b)
    d = a.dim
    return ModTuple(d, tuple((x + y) % d for x, y in zip(a.entries, b.entries)))


def sub_tuples(a: ModTuple, b: ModTuple) -> ModTuple:
    """Componentwise difference mod dim."""
    _check_same_space(a, b)
    d = a.dim
    return ModTuple(d, tuple((x - y) % d for x, y in zip(a.entries, b.entries)))


def neg_tuple(a: ModTuple) -> ModTuple:
    """Componentwise negation mod dim."""
    d = a.dim
    return ModTuple(d, tuple((-x) % d for x in a.entries))


def scale_tuple(j: int, a: ModTuple) -> ModTuple:
    """Scalar multiple ``j * a`` with ``j`` a residue in [0, dim)."""
    if not 0 <= j < a.dim:
        raise InvalidScalarError(f"scalar {j} outside residue range [0, {a.dim - 1}]")
    d = a.dim
    return ModTuple(d, tuple((j * x) % d for x in a.entries))


def dot(a: ModTuple, b: ModTuple) -> int:
    """Inner product sum_l a_l * b_l mod dim."""
    _check_same_space(a, b)
    return sum(x * y for x, y in zip(a.entries, b.entries)) % a.dim


@dataclass(frozen=True)
class GeneratorMatrix:
    """A list of generator rows spanning a subgroup of Z_dim^length.

    Rows need not be independent; an empty row list describes the trivial
    subgroup {0}.
    """

    dim: int
    length: int
    rows: tuple[ModTuple, ...]

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"modulus must be >= 2, got {self.dim}")
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if row.dim != self.dim or row.n != self.length:
                raise DimensionMismatchError(
                    f"row {row.entries} does not live in Z_{self.dim}^{self.length}"
                )

    @classmethod
    def from_rows(
        cls, rows: Sequence[ModTuple], dim: int | None = None, length: int | None = None
    ) -> "GeneratorMatrix":
        rows = tuple(rows)
        if rows:
            dim = rows[0].dim if dim is None else dim
            length = rows[0].n if length is None else length
        if dim is None or length is None:
            raise ValueError("dim and length are required for an empty row list")
        return cls(dim, length, rows)

    @classmethod
    def from_entries(
        cls, dim: int, entries: Iterable[Sequence[int]], length: int | None = None
    ) -> "GeneratorMatrix":
        rows = tuple(ModTuple(dim, tuple(r)) for r in entries)
        if length is None:
            if not rows:
                raise ValueError("length is required for an empty row list")
            length = rows[0].n
        return cls(dim, length, rows)


def _raw_add(a: tuple[int, ...], b: tuple[int, ...], dim: int) -> tuple[int, ...]:
    return tuple((x + y) % dim for x, y in zip(a, b))


def span_elements(
    rows: Iterable[tuple[int, ...]], dim: int, n: int, cap: int | None = None
) -> set[tuple[int, ...]]:
    """All Z_dim-linear combinations of ``rows`` as a set of raw tuples.

    Grows the subgroup one generator at a time by walking cosets, so the
    cost is proportional to the size of the result, never to dim**n.
    """
    cap = memory_cap() if cap is None else cap
    elems: set[tuple[int, ...]] = {(0,) * n}
    for g in rows:
        # Cosets H + j*g are pairwise disjoint or equal to H, so a single
        # representative decides membership of the whole coset.
        coset = elems
        fresh: set[tuple[int, ...]] = set()
        while True:
            coset = {_raw_add(t, g, dim) for t in coset}
            if next(iter(coset)) in elems:
                break
            fresh |= coset
            if len(elems) + len(fresh) > cap:
                raise CapacityError(
                    f"span exceeds cap of {cap} elements (QGC_MEM_CAP raises it)"
                )
        elems |= fresh
    return elems


def span(gens: GeneratorMatrix, cap: int | None = None) -> tuple[ModTuple, ...]:
    """The subgroup generated by the rows, sorted ascending."""
    elems = span_elements(
        (r.entries for r in gens.rows), gens.dim, gens.length, cap=cap
    )
    return tuple(ModTuple(gens.dim, t) for t in sorted(elems))


@dataclass(frozen=True)
class DiagonalForm:
    """Result of :func:`diagonalize`.

    ``diagonal`` holds the length-many diagonal entries f_1..f_n (padded
    with zeros when there are fewer rows than columns).  ``column_ops``
    records, in application order, the column operations that were applied;
    row operations are not recorded because they do not affect the solution
    set of ``F s = 0``.

    Each op is a tuple:

    - ``("swap", i, j)``     columns i and j were exchanged
    - ``("addmul", i, j, k)``  column i had k times column j added to it
    - ``("scale", i, u)``    column i was scaled by a unit u
    """

    dim: int
    length: int
    diagonal: tuple[int, ...]
    column_ops: tuple[tuple, ...]

    def span_order(self) -> int:
        """Order of the row span: prod_l dim // gcd(f_l, dim)."""
        return math.prod(self.dim // math.gcd(f, self.dim) for f in self.diagonal)

    def dual_order(self) -> int:
        """Order of the solution set of F s = 0: prod_l gcd(f_l, dim)."""
        return math.prod(math.gcd(f, self.dim) for f in self.diagonal)


def diagonalize(gens: GeneratorMatrix) -> DiagonalForm:
    """Bring a generator matrix to diagonal form over Z_dim.

    Uses integer row and column operations (swaps and adding multiples),
    descending Euclid-style on the pivot until it divides everything in its
    row and column.  Only column operations are recorded; they are exactly
    what :func:`solve_dual` needs to map solutions of the diagonal system
    back to the original coordinates.
    """
    dim, n = gens.dim, gens.length
    m = [list(r.entries) for r in gens.rows]
    nrows = len(m)
    ops: list[tuple] = []

    def col_swap(i: int, j: int) -> None:
        for row in m:
            row[i], row[j] = row[j], row[i]
        ops.append(("swap", i, j))

    def col_addmul(i: int, j: int, k: int) -> None:
        # column i += k * column j
        for row in m:
            row[i] = (row[i] + k * row[j]) % dim
        ops.append(("addmul", i, j, k % dim))

    k = 0
    while k < min(nrows, n):
        # Smallest positive entry of the trailing submatrix becomes the pivot.
        pr = pc = -1
        pv = 0
        for i in range(k, nrows):
            for j in range(k, n):
                v = m[i][j]
                if v and (pv == 0 or v < pv):
                    pr, pc, pv = i, j, v
        if pv == 0:
            break
        if pr != k:
            m[k], m[pr] = m[pr], m[k]
        if pc != k:
            col_swap(k, pc)
        # Shrink the pivot until it divides its whole row and column.  Each
        # pass strictly decreases the positive pivot, so this terminates.
        while True:
            p = m[k][k]
            shrunk = False
            for i in range(k + 1, nrows):
                if m[i][k] % p:
                    q = m[i][k] // p
                    m[i] = [(x - q * y) % dim for x, y in zip(m[i], m[k])]
                    m[k], m[i] = m[i], m[k]
                    shrunk = True
                    break
            if shrunk:
                continue
            for j in range(k + 1, n):
                if m[k][j] % p:
                    col_addmul(j, k, -(m[k][j] // p))
                    col_swap(k, j)
                    shrunk = True
                    break
            if not shrunk:
                break
        p = m[k][k]
        for j in range(k + 1, n):
            if m[k][j]:
                col_addmul(j, k, -(m[k][j] // p))
        for i in range(k + 1, nrows):
            if m[i][k]:
                q = m[i][k] // p
                m[i] = [(x - q * y) % dim for x, y in zip(m[i], m[k])]
        k += 1

    diagonal = tuple(m[i][i] if i < nrows else 0 for i in range(n))
    return DiagonalForm(dim, n, diagonal, tuple(ops))


def _map_back(ops: tuple[tuple, ...], digits: Sequence[int], dim: int) -> tuple[int, ...]:
    # A solution of the transformed system maps to one of the original by
    # undoing the column ops in reverse application order.
    s = list(digits)
    for op in reversed(ops):
        if op[0] == "swap":
            _, i, j = op
            s[i], s[j] = s[j], s[i]
        elif op[0] == "addmul":
            _, i, j, k = op
            s[j] = (s[j] + k * s[i]) % dim
        else:
            _, i, u = op
            s[i] = (s[i] * u) % dim
    return tuple(s)


def dual_generators(gens: GeneratorMatrix) -> tuple[GeneratorMatrix, int]:
    """Generators for {s : dot(s, c) = 0 for all c in span(gens)} and its order.

    Works entirely on the diagonal form, so the result is available even
    when the dual itself is too large to materialize.
    """
    dim, n = gens.dim, gens.length
    form = diagonalize(gens)
    counts = [math.gcd(f, dim) for f in form.diagonal]
    order = math.prod(counts)
    rows = []
    for l, g in enumerate(counts):
        if g > 1:
            # Coordinate l of the diagonal system ranges over multiples of
            # dim // g; one generator per coordinate suffices.
            digits = [0] * n
            digits[l] = dim // g
            rows.append(ModTuple(dim, _map_back(form.column_ops, digits, dim)))
    return GeneratorMatrix(dim, n, tuple(rows)), order


def solve_dual(gens: GeneratorMatrix, cap: int | None = None) -> tuple[ModTuple, ...]:
    """All s in Z_dim^n with dot(s, c) = 0 for every c in span(gens), sorted.

    Diagonalizes the matrix, solves each decoupled congruence f_l s_l = 0
    per coordinate, and maps the product set back through the recorded
    column operations.
    """
    cap = memory_cap() if cap is None else cap
    dim, n = gens.dim, gens.length
    form = diagonalize(gens)
    counts = [math.gcd(f, dim) for f in form.diagonal]
    order = math.prod(counts)
    if order > cap:
        raise CapacityError(
            f"dual has {order} elements, above the cap of {cap}; "
            "use dual_generators instead"
        )
    axes = [[j * (dim // g) for j in range(g)] for g in counts]
    out = [
        ModTuple(dim, _map_back(form.column_ops, combo, dim))
        for combo in itertools.product(*axes)
    ]
    out.sort()
    return tuple(out)
